#pragma once

#include <string>
#include <vector>

#include "jnb/join_hom.hpp"
#include "jnb/result.hpp"

namespace jnb {

// Jordan normal base of a lattice with respect to a nilpotent join-
// homomorphism: a family of atoms organized in chains, chain[t][i] holding
// the (i+1)-th atom of chain t.  The map sends each atom to its predecessor
// and the first atom of every chain to bottom; c_element caches the join of
// the chain fronts.
struct JordanNormalBase {
    std::vector<std::vector<Element>> chains;
    Element c_element = 0;

    std::vector<int> lengths() const;
    int total_atoms() const;
    std::vector<Element> flattened() const;
};

// Assembles a base from raw chains; with canonicalize set, chains are sorted
// by (length descending, leading atom ascending).
JordanNormalBase make_base(const FiniteLattice& l, std::vector<std::vector<Element>> chains,
                           bool canonicalize);

// Computes a Jordan normal base by induction on the height: recurse on the
// restriction to the image interval, lift every chain top through an atom
// preimage, then extend the kernel with singleton chains.  The three
// condition checks run first unless skipped; with them skipped, any
// breakdown surfaces as VerificationFailed.
JordanNormalBase compute_jnb(const JoinHom& h, bool skip_condition_checks = false);

// An atom whose value is the given atom of [bottom, w]: take the smallest
// preimage of a, decompose it into atoms, and return the smallest atom that
// still maps to a.
Element lift_atom(const JoinHom& h, Element a);

// Greedy ascending chain from c to the kernel element z: repeatedly join the
// smallest kernel atom not yet below the running join.
std::vector<Element> extend_kernel_chain(const JoinHom& h, Element c);

// Checks the defining conditions of a Jordan normal base in the stored chain
// order: strictly ascending chain-front joins, strict growth when appending
// each later atom, total join equal to top, and the chain action of the map.
VerifyResult verify_jnb(const JoinHom& h, const JordanNormalBase& base);

// Lattice-level direct-sum certificate: under the atomic cover property and
// the graded-chain condition, the flattened atom family must be an
// irredundant join.  Throws HypothesesNotMet when either hypothesis fails.
bool base_is_direct_sum(const FiniteLattice& l, const JordanNormalBase& base);

// Longest chain length; equals the nilpotency index of the underlying map.
int nilpotency_from_jnb(const JordanNormalBase& base);

}  // namespace jnb
