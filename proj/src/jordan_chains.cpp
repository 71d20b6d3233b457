#include "jnb/jordan_chains.hpp"

#include <algorithm>

namespace jnb {

std::vector<int> JordanChainBasis::lengths() const {
    std::vector<int> out;
    out.reserve(chains.size());
    for (const auto& c : chains) out.push_back(static_cast<int>(c.size()));
    return out;
}

int JordanChainBasis::total_vectors() const {
    int total = 0;
    for (const auto& c : chains) total += static_cast<int>(c.size());
    return total;
}

namespace {

// Incremental independence tester over a growing row set.
class RowAccumulator {
public:
    RowAccumulator(std::uint32_t p, int n) : p_(p), n_(n) {}

    // Adds v to the accumulated row space; returns false when v was already
    // dependent (and leaves the accumulator unchanged).
    bool add(Vec v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] != 0) {
                const Fp c = v[pivot];
                for (int j = 0; j < n_; ++j) v[j] = gf_sub(v[j], gf_mul(c, row[j], p_), p_);
            }
        }
        int pivot = -1;
        for (int j = 0; j < n_; ++j) {
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0) return false;
        const Fp inv = gf_inv(v[pivot], p_);
        for (int j = 0; j < n_; ++j) v[j] = gf_mul(v[j], inv, p_);
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    std::uint32_t p_;
    int n_;
    std::vector<std::pair<int, Vec>> rows_;
};

std::vector<std::vector<Vec>> chains_recursive(const GfMatrix& a) {
    const std::uint32_t p = a.p();
    const int n = a.rows();
    const Subspace w = image_space(a);
    const Subspace ker = kernel_space(a);

    std::vector<std::vector<Vec>> chains;
    if (w.dim() > 0) {
        // Restriction of A to its image, expressed in the canonical basis of
        // the image (coordinate extraction is exact since chain vectors stay
        // inside the image).
        const int d = w.dim();
        GfMatrix restricted(p, d, d);
        for (int j = 0; j < d; ++j) {
            const Vec img = a.apply(w.basis().row(j));
            const auto cs = w.coords(img);
            for (int i = 0; i < d; ++i) restricted(i, j) = (*cs)[i];
        }
        chains = chains_recursive(restricted);
        // Map coordinate chains back to ambient vectors.
        for (auto& chain : chains) {
            for (auto& y : chain) {
                Vec ambient(static_cast<std::size_t>(n), 0);
                for (int j = 0; j < d; ++j) {
                    if (y[j] == 0) continue;
                    for (int k = 0; k < n; ++k) {
                        ambient[k] = gf_add(ambient[k], gf_mul(y[j], w.basis()(j, k), p), p);
                    }
                }
                y = std::move(ambient);
            }
        }
        const Subspace full = Subspace::full(p, n);
        for (auto& chain : chains) {
            auto lifted = preimage_vector(a, chain.back(), full);
            if (!lifted) throw Error("internal: chain top has no preimage");
            chain.push_back(std::move(*lifted));
        }
    }

    // Extend the chain bottoms to a basis of the kernel; every extension
    // vector starts a singleton chain.
    RowAccumulator acc(p, n);
    for (const auto& chain : chains) acc.add(chain.front());
    for (int i = 0; i < ker.dim(); ++i) {
        Vec v = ker.basis().row(i);
        if (acc.add(v)) chains.push_back({std::move(v)});
    }

    std::stable_sort(chains.begin(), chains.end(),
                     [](const auto& x, const auto& y) { return x.size() > y.size(); });
    return chains;
}

}  // namespace

JordanChainBasis compute_jordan_chains(const GfMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("chain computation needs a square matrix");
    if (!matrix_nilpotency_index(a)) throw NotNilpotent("matrix is not nilpotent");
    JordanChainBasis basis;
    basis.p = a.p();
    basis.ambient_dim = a.rows();
    basis.chains = chains_recursive(a);
    return basis;
}

std::vector<int> block_partition_oracle(const GfMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("partition oracle needs a square matrix");
    const int n = a.rows();
    std::vector<int> kernel_dims;  // kernel_dims[i-1] = dim ker(A^i)
    GfMatrix power = a;
    for (int i = 1; i <= n; ++i) {
        const int dim_ker = n - rank(power);
        kernel_dims.push_back(dim_ker);
        if (dim_ker == n) break;
        if (i == n) throw NotNilpotent("matrix is not nilpotent");
        power = power * a;
    }
    if (n > 0 && kernel_dims.back() != n) throw NotNilpotent("matrix is not nilpotent");
    // counts[i-1] = number of chains of length >= i.
    std::vector<int> counts;
    int prev = 0;
    for (int m : kernel_dims) {
        counts.push_back(m - prev);
        prev = m;
    }
    std::vector<int> partition;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const int next = i + 1 < counts.size() ? counts[i + 1] : 0;
        for (int copies = counts[i] - next; copies > 0; --copies) {
            partition.push_back(static_cast<int>(i) + 1);
        }
    }
    std::sort(partition.rbegin(), partition.rend());
    return partition;
}

VerifyResult verify_chain_basis(const GfMatrix& a, const JordanChainBasis& basis) {
    if (!a.is_square() || a.rows() != basis.ambient_dim || a.p() != basis.p) {
        return {false, "dimension mismatch"};
    }
    const int n = a.rows();
    if (basis.total_vectors() != n) return {false, "not a basis"};
    std::vector<Vec> flat;
    for (const auto& chain : basis.chains) {
        for (const auto& v : chain) {
            if (static_cast<int>(v.size()) != n) return {false, "dimension mismatch"};
            flat.push_back(v);
        }
    }
    if (n > 0 && rank(GfMatrix::from_rows(basis.p, n, flat)) != n) return {false, "not a basis"};
    const Vec zero(static_cast<std::size_t>(n), 0);
    for (std::size_t t = 0; t < basis.chains.size(); ++t) {
        const auto& chain = basis.chains[t];
        if (chain.empty()) return {false, "empty chain"};
        for (std::size_t i = 2; i <= chain.size(); ++i) {
            if (a.apply(chain[i - 1]) != chain[i - 2]) {
                return {false, "chain relation violated at (" + std::to_string(t + 1) + "," +
                                   std::to_string(i) + ")"};
            }
        }
        if (a.apply(chain.front()) != zero) {
            return {false, "chain relation violated at (" + std::to_string(t + 1) + ",1)"};
        }
    }
    return {true, ""};
}

}  // namespace jnb
