#pragma once

#include <optional>
#include <vector>

#include "jnb/gf.hpp"

namespace jnb {

// Linear subspace of GF(p)^n in canonical form: the basis is the reduced row
// echelon form of any spanning set, with zero rows dropped.  Two subspaces
// are equal iff their canonical bases agree entrywise.
class Subspace {
public:
    static Subspace zero(std::uint32_t p, int n);
    static Subspace full(std::uint32_t p, int n);
    static Subspace span_of_rows(const GfMatrix& rows);
    static Subspace span_of(std::uint32_t p, int n, const std::vector<Vec>& vectors);

    std::uint32_t p() const { return basis_.p(); }
    int ambient_dim() const { return n_; }
    int dim() const { return basis_.rows(); }
    const GfMatrix& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Coordinates of v in the canonical basis; nullopt when v lies outside.
    std::optional<Vec> coords(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& other) const;

private:
    Subspace(int n, GfMatrix basis) : n_(n), basis_(std::move(basis)) {}
    int n_;
    GfMatrix basis_;  // dim() x n_, RREF, no zero rows
};

// Order by (dimension, basis entries lexicographically); a strict weak order
// used for the deterministic element numbering of enumerated models.
bool subspace_order_less(const Subspace& a, const Subspace& b);

Subspace kernel_space(const GfMatrix& a);
Subspace image_space(const GfMatrix& a);
Subspace image_of_subspace(const GfMatrix& a, const Subspace& s);

// Full preimage {u | A*u in X} as a subspace.
Subspace preimage_space(const GfMatrix& a, const Subspace& x);

// Some u in `within` with A*u = v; free variables of the solver's canonical
// parametrization are pinned to 0, so the answer is deterministic.
std::optional<Vec> preimage_vector(const GfMatrix& a, const Vec& v, const Subspace& within);

}  // namespace jnb
