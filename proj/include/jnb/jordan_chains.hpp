#pragma once

#include <vector>

#include "jnb/result.hpp"
#include "jnb/subspace.hpp"

namespace jnb {

// Jordan chain basis of a nilpotent matrix: chains[t][i] holds the vector
// x_{i+1} of chain t, where A maps each vector to its predecessor and the
// first vector of every chain to zero.  Chains are sorted by length,
// longest first.
struct JordanChainBasis {
    std::uint32_t p = 2;
    int ambient_dim = 0;
    std::vector<std::vector<Vec>> chains;

    std::vector<int> lengths() const;
    int total_vectors() const;
};

// Constructive chain computation: recurse on the restriction to the image,
// lift each chain top through a preimage, then extend the chain bottoms to a
// full kernel basis with singleton chains.
JordanChainBasis compute_jordan_chains(const GfMatrix& a);

// Block sizes without any chain computation: with m_i = dim ker(A^i), the
// number of chains of length >= i equals m_i - m_{i-1}; conjugating that
// sequence yields the partition.  Serves as the independent oracle for
// compute_jordan_chains.
std::vector<int> block_partition_oracle(const GfMatrix& a);

VerifyResult verify_chain_basis(const GfMatrix& a, const JordanChainBasis& basis);

}  // namespace jnb
