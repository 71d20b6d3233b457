#pragma once

#include <optional>
#include <vector>

#include "jnb/lattice.hpp"

namespace jnb {

// A complete join-homomorphism on a finite lattice, stored as a full value
// table.  On a finite lattice, preservation of binary joins plus the empty
// join (bottom to bottom) implies preservation of all joins.  Construction
// validates the homomorphism law and caches the image w = value(top), the
// kernel z = join of {x | value(x) = bottom}, and the nilpotency index.
class JoinHom {
public:
    const FiniteLattice& lattice() const { return *lattice_; }
    const LatticeRef& lattice_ptr() const { return lattice_; }

    Element apply(Element x) const { return values_[static_cast<std::size_t>(x)]; }
    const std::vector<Element>& values() const { return values_; }

    Element image_w() const { return image_w_; }
    Element kernel_z() const { return kernel_z_; }

    // Least k with the k-th power of the map sending top to bottom; absent
    // when the descending sequence of top images stabilizes above bottom.
    std::optional<int> nilpotency_index() const { return nilpotency_k_; }
    bool is_nilpotent() const { return nilpotency_k_.has_value(); }

    // The stabilized value of the top-image sequence (bottom iff nilpotent).
    Element stable_top_image() const { return stable_top_image_; }

private:
    friend JoinHom build_join_hom(LatticeRef lattice, std::vector<Element> values);
    JoinHom() = default;

    LatticeRef lattice_;
    std::vector<Element> values_;
    Element image_w_ = 0;
    Element kernel_z_ = 0;
    std::optional<int> nilpotency_k_;
    Element stable_top_image_ = 0;
};

JoinHom build_join_hom(LatticeRef lattice, std::vector<Element> values);

// m-fold application; m = 0 is the identity.
Element apply_power(const JoinHom& h, Element x, int m);

std::optional<int> nilpotency_index(const JoinHom& h);

// Finite height plus every element a join of atoms.
ElementCheck check_jnb1(const FiniteLattice& l);

// For every pair x <= y with equal values there is a kernel element u with
// y = x v u.  The search for u runs over the kernel interval [0, z] only.
PairCheck check_jnb2(const JoinHom& h);

// For every x, the restriction of the map to [0, x] is onto [0, value(x)].
// Witness pairs are (x, target below value(x) with no preimage below x).
PairCheck check_jnb3(const JoinHom& h);

struct ConditionReport {
    ElementCheck jnb1;
    PairCheck jnb2;
    PairCheck jnb3;
    bool all_ok() const { return jnb1.ok && jnb2.ok && jnb3.ok; }
};

ConditionReport check_jnb_conditions(const JoinHom& h);

// All u <= bound with value(u) = target, in index order.
std::vector<Element> preimages_below(const JoinHom& h, Element target, Element bound);

// The restriction of the map to the interval [bottom, w]; it commutes with
// the embedding since the image of w stays below w.
struct RestrictionToImage {
    IntervalEmbedding embedding;
    JoinHom hom;
};

RestrictionToImage restrict_to_image(const JoinHom& h);

}  // namespace jnb
