#include "jnb/gf.hpp"

#include <algorithm>

namespace jnb {

bool is_prime(std::uint32_t m) {
    if (m < 2) return false;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) return false;
    }
    return true;
}

Fp gf_pow(Fp a, std::uint64_t e, std::uint32_t p) {
    Fp r = 1 % p;
    Fp base = a % p;
    while (e > 0) {
        if (e & 1) r = gf_mul(r, base, p);
        base = gf_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

Fp gf_inv(Fp a, std::uint32_t p) {
    if (a % p == 0) throw InvalidInput("division by zero in GF(" + std::to_string(p) + ")");
    return gf_pow(a, p - 2, p);
}

GfMatrix::GfMatrix(std::uint32_t p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (!is_prime(p) || p > kMaxPrime) {
        throw InvalidInput("matrix modulus must be a prime <= " + std::to_string(kMaxPrime) +
                           ", got " + std::to_string(p));
    }
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

GfMatrix GfMatrix::identity(std::uint32_t p, int n) {
    GfMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1 % p;
    return m;
}

bool GfMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Fp x) { return x == 0; });
}

GfMatrix GfMatrix::transposed() const {
    GfMatrix t(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

GfMatrix GfMatrix::operator*(const GfMatrix& rhs) const {
    if (p_ != rhs.p_ || cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    GfMatrix out(p_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const std::uint64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                out(i, j) = static_cast<Fp>((out(i, j) + a * rhs(k, j)) % p_);
            }
        }
    }
    return out;
}

Vec GfMatrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec out(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>((*this)(i, j)) * v[j];
        out[i] = static_cast<Fp>(acc % p_);
    }
    return out;
}

Vec GfMatrix::row(int r) const {
    Vec out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
    return out;
}

GfMatrix GfMatrix::from_rows(std::uint32_t p, int cols, const std::vector<Vec>& rows) {
    GfMatrix m(p, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw DimensionMismatch("ragged row list");
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j] % p;
    }
    return m;
}

RrefResult rref(const GfMatrix& a) {
    RrefResult res{a, 0, {}};
    GfMatrix& m = res.mat;
    const std::uint32_t p = m.p();
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
        }
        const Fp inv = gf_inv(m(pivot_row, col), p);
        for (int j = col; j < m.cols(); ++j) m(pivot_row, j) = gf_mul(m(pivot_row, j), inv, p);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col) == 0) continue;
            const Fp factor = m(r, col);
            for (int j = col; j < m.cols(); ++j) {
                m(r, j) = gf_sub(m(r, j), gf_mul(factor, m(pivot_row, j), p), p);
            }
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

int rank(const GfMatrix& a) { return rref(a).rank; }

std::optional<GfMatrix> inverse(const GfMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const int n = a.rows();
    if (n == 0) return a;
    GfMatrix aug(a.p(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1 % a.p();
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivot_cols.back() >= n) return std::nullopt;
    GfMatrix inv(a.p(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

GfMatrix matrix_power(const GfMatrix& a, int m) {
    if (!a.is_square()) throw DimensionMismatch("power of non-square matrix");
    GfMatrix acc = GfMatrix::identity(a.p(), a.rows());
    for (int i = 0; i < m; ++i) acc = acc * a;
    return acc;
}

std::optional<int> matrix_nilpotency_index(const GfMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("nilpotency of non-square matrix");
    GfMatrix acc = a;
    if (a.rows() == 0) return 1;
    for (int k = 1; k <= a.rows(); ++k) {
        if (acc.is_zero()) return k;
        acc = acc * a;
    }
    return std::nullopt;
}

}  // namespace jnb
