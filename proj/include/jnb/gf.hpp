#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jnb/errors.hpp"

namespace jnb {

using Fp = std::uint32_t;   // residue in [0, p)
using Vec = std::vector<Fp>;

// Largest prime below 2^16; keeps every product inside 64-bit arithmetic.
inline constexpr std::uint32_t kMaxPrime = 65521;

bool is_prime(std::uint32_t m);

inline Fp gf_add(Fp a, Fp b, std::uint32_t p) { return (a + b) % p; }
inline Fp gf_sub(Fp a, Fp b, std::uint32_t p) { return (a + p - b) % p; }
inline Fp gf_neg(Fp a, std::uint32_t p) { return (p - a) % p; }
inline Fp gf_mul(Fp a, Fp b, std::uint32_t p) {
    return static_cast<Fp>((static_cast<std::uint64_t>(a) * b) % p);
}
Fp gf_pow(Fp a, std::uint64_t e, std::uint32_t p);
Fp gf_inv(Fp a, std::uint32_t p);

// Dense exact matrix over the prime field GF(p), row-major storage.
class GfMatrix {
public:
    GfMatrix(std::uint32_t p, int rows, int cols);
    static GfMatrix identity(std::uint32_t p, int n);

    std::uint32_t p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Fp operator()(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    Fp& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool operator==(const GfMatrix& other) const = default;

    GfMatrix transposed() const;
    GfMatrix operator*(const GfMatrix& rhs) const;

    // Matrix-vector product A*v with v a column vector of length cols().
    Vec apply(const Vec& v) const;

    Vec row(int r) const;
    static GfMatrix from_rows(std::uint32_t p, int cols, const std::vector<Vec>& rows);

private:
    std::uint32_t p_;
    int rows_, cols_;
    std::vector<Fp> e_;
};

struct RrefResult {
    GfMatrix mat;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form: leftmost pivots, pivots scaled to 1, full
// elimination above and below.  Deterministic for identical inputs.
RrefResult rref(const GfMatrix& a);

int rank(const GfMatrix& a);
std::optional<GfMatrix> inverse(const GfMatrix& a);
GfMatrix matrix_power(const GfMatrix& a, int m);

// Least k >= 1 with A^k = 0, or nullopt when A is not nilpotent.
std::optional<int> matrix_nilpotency_index(const GfMatrix& a);

}  // namespace jnb
