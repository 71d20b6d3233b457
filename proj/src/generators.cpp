#include "jnb/generators.hpp"

#include <algorithm>

namespace jnb {

LatticeFile gen_boolean_lattice(int dim) {
    if (dim < 1 || dim > 14) throw InvalidInput("boolean lattice dimension must be in [1, 14]");
    const int count = 1 << dim;
    auto label_of = [dim](int mask) {
        std::string s(static_cast<std::size_t>(dim), '0');
        for (int b = 0; b < dim; ++b) {
            if (mask & (1 << b)) s[static_cast<std::size_t>(b)] = '1';
        }
        return s;
    };
    LatticeFile f;
    for (int mask = 0; mask < count; ++mask) f.elements.push_back(label_of(mask));
    for (int mask = 0; mask < count; ++mask) {
        for (int b = 0; b < dim; ++b) {
            if (!(mask & (1 << b))) f.covers.emplace_back(label_of(mask), label_of(mask | (1 << b)));
        }
    }
    return f;
}

LatticeFile gen_chain_lattice(int length) {
    if (length < 0 || length >= kMaxLatticeSize) throw InvalidInput("bad chain length");
    LatticeFile f;
    for (int i = 0; i <= length; ++i) f.elements.push_back("c" + std::to_string(i));
    for (int i = 0; i < length; ++i) {
        f.covers.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
    }
    return f;
}

GfMatrix gen_canonical_blocks(std::uint32_t p, std::vector<int> partition) {
    if (partition.empty()) throw InvalidInput("partition must be nonempty");
    for (int part : partition) {
        if (part < 1) throw InvalidInput("partition parts must be positive");
    }
    std::sort(partition.rbegin(), partition.rend());
    int n = 0;
    for (int part : partition) n += part;
    if (n > 512) throw InvalidInput("total dimension exceeds 512");
    GfMatrix a(p, n, n);
    int offset = 0;
    for (int part : partition) {
        for (int i = 0; i + 1 < part; ++i) a(offset + i, offset + i + 1) = 1;
        offset += part;
    }
    return a;
}

GfMatrix gen_invertible_matrix(std::uint32_t p, int dim, Rng& rng) {
    while (true) {
        GfMatrix s(p, dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) s(i, j) = rng.below(p);
        if (rank(s) == dim) return s;
    }
}

GfMatrix gen_nilpotent_matrix(std::uint32_t p, int dim, Rng& rng) {
    if (dim < 1 || dim > 512) throw InvalidInput("matrix dimension must be in [1, 512]");
    GfMatrix upper(p, dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) upper(i, j) = rng.below(p);
    const GfMatrix s = gen_invertible_matrix(p, dim, rng);
    const auto s_inv = inverse(s);
    GfMatrix a = *s_inv * upper * s;
    if (!matrix_nilpotency_index(a)) throw Error("internal: conjugate lost nilpotency");
    return a;
}

GfMatrix gen_nilpotent_matrix(std::uint32_t p, int dim, std::uint64_t seed) {
    Rng rng(seed);
    return gen_nilpotent_matrix(p, dim, rng);
}

}  // namespace jnb
