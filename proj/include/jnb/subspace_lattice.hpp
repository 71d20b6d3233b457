#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jnb/jordan_base.hpp"
#include "jnb/jordan_chains.hpp"

namespace jnb {

// The lattice of all subspaces of GF(p)^n, enumerated explicitly.  Element
// order is (dimension, canonical basis entries lexicographically), so joins
// are subspace sums, meets are intersections, atoms are exactly the lines
// and the height is n.
struct SubspaceLatticeModel {
    LatticeRef lattice;
    std::vector<Subspace> elements;  // index-aligned with lattice elements
    std::uint32_t p = 2;
    int dim = 0;

    Element index_of(const Subspace& s) const;
};

// Total number of subspaces of GF(p)^n (sum of Gaussian binomials), saturated
// at 2^63 when it overflows the guard computation.
std::uint64_t subspace_count(std::uint32_t p, int n);

// Enumerates every subspace via echelon pivot profiles, which makes the
// Gaussian binomial count a built-in self-check.  Throws TooLarge when the
// count exceeds the lattice cap.
SubspaceLatticeModel enumerate_subspace_lattice(std::uint32_t p, int n);

// Rendered canonical basis, rows joined by ';' ("10;01"); "0" for the zero
// subspace.  Entries are digit-concatenated for p <= 10, comma-joined above.
std::string subspace_label(const Subspace& s);

// The map N -> A*N on the enumerated lattice; validated as a join-
// homomorphism on construction.
JoinHom induced_join_hom(const SubspaceLatticeModel& model, const GfMatrix& a);

struct CrossValidationReport {
    struct Leg {
        std::string name;
        bool ok = true;
        std::string detail;
    };
    std::vector<Leg> legs;
    std::vector<int> partition;
    bool ok = true;
};

// Runs the two engines against each other on one nilpotent matrix:
//   1. the three base-existence conditions hold on the induced pair,
//   2. the abstract base computed on the lattice verifies,
//   3. the concrete chain basis verifies,
//   4. both chain-length multisets agree with the kernel-dimension oracle,
//   5. the spans of the chain vectors are atoms and reproduce a valid base,
//   6. the abstract base is an irredundant join (direct-sum certificate).
CrossValidationReport cross_validate(const SubspaceLatticeModel& model, const GfMatrix& a);
CrossValidationReport cross_validate(std::uint32_t p, int n, const GfMatrix& a);

}  // namespace jnb
