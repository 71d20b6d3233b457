#pragma once

#include <cstdint>
#include <random>

#include "jnb/io.hpp"

namespace jnb {

// All fixture randomness flows through this seeded generator; no ambient
// entropy anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    Fp below(std::uint32_t m) { return static_cast<Fp>(eng_() % m); }

private:
    std::mt19937_64 eng_;
};

// Boolean lattice of all subsets of a dim-element set, labeled by bitstrings.
LatticeFile gen_boolean_lattice(int dim);

// Chain lattice c0 < c1 < ... < c<length>.
LatticeFile gen_chain_lattice(int length);

// Block-diagonal nilpotent matrix with one shift block per partition part
// (superdiagonal ones), parts sorted descending.
GfMatrix gen_canonical_blocks(std::uint32_t p, std::vector<int> partition);

// Random strictly upper triangular matrix conjugated by a random invertible
// matrix; nilpotent by construction.
GfMatrix gen_nilpotent_matrix(std::uint32_t p, int dim, std::uint64_t seed);
GfMatrix gen_nilpotent_matrix(std::uint32_t p, int dim, Rng& rng);

GfMatrix gen_invertible_matrix(std::uint32_t p, int dim, Rng& rng);

}  // namespace jnb
