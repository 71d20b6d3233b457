#include "jnb/subspace.hpp"

namespace jnb {

namespace {

GfMatrix drop_zero_rows(const RrefResult& r) {
    GfMatrix out(r.mat.p(), r.rank, r.mat.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < r.mat.cols(); ++j) out(i, j) = r.mat(i, j);
    return out;
}

}  // namespace

Subspace Subspace::zero(std::uint32_t p, int n) { return Subspace(n, GfMatrix(p, 0, n)); }

Subspace Subspace::full(std::uint32_t p, int n) { return Subspace(n, GfMatrix::identity(p, n)); }

Subspace Subspace::span_of_rows(const GfMatrix& rows) {
    return Subspace(rows.cols(), drop_zero_rows(rref(rows)));
}

Subspace Subspace::span_of(std::uint32_t p, int n, const std::vector<Vec>& vectors) {
    return span_of_rows(GfMatrix::from_rows(p, n, vectors));
}

bool Subspace::contains(const Vec& v) const { return coords(v).has_value(); }

std::optional<Vec> Subspace::coords(const Vec& v) const {
    if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("vector/ambient mismatch");
    const std::uint32_t q = p();
    Vec rem = v;
    Vec cs(static_cast<std::size_t>(dim()), 0);
    // The basis is in RREF, so reducing at each pivot column in turn leaves
    // zero exactly when v lies in the row space.
    for (int i = 0; i < dim(); ++i) {
        int pivot = -1;
        for (int j = 0; j < n_; ++j) {
            if (basis_(i, j) != 0) {
                pivot = j;
                break;
            }
        }
        const Fp c = rem[pivot];
        if (c != 0) {
            cs[i] = c;
            for (int j = pivot; j < n_; ++j) rem[j] = gf_sub(rem[j], gf_mul(c, basis_(i, j), q), q);
        }
    }
    for (Fp x : rem)
        if (x != 0) return std::nullopt;
    return cs;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.n_ != n_ || other.p() != p()) throw DimensionMismatch("subspace ambient mismatch");
    for (int i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.n_ != n_ || other.p() != p()) throw DimensionMismatch("subspace ambient mismatch");
    GfMatrix stacked(p(), dim() + other.dim(), n_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < n_; ++j) stacked(i, j) = basis_(i, j);
    for (int i = 0; i < other.dim(); ++i)
        for (int j = 0; j < n_; ++j) stacked(dim() + i, j) = other.basis_(i, j);
    return span_of_rows(stacked);
}

// Zassenhaus: row-reduce [B1 B1; B2 0]; rows whose left half is zero carry a
// spanning set of the intersection in their right half.
Subspace Subspace::intersect(const Subspace& other) const {
    if (other.n_ != n_ || other.p() != p()) throw DimensionMismatch("subspace ambient mismatch");
    const int r1 = dim(), r2 = other.dim();
    GfMatrix block(p(), r1 + r2, 2 * n_);
    for (int i = 0; i < r1; ++i) {
        for (int j = 0; j < n_; ++j) {
            block(i, j) = basis_(i, j);
            block(i, n_ + j) = basis_(i, j);
        }
    }
    for (int i = 0; i < r2; ++i)
        for (int j = 0; j < n_; ++j) block(r1 + i, j) = other.basis_(i, j);
    const RrefResult r = rref(block);
    std::vector<Vec> rows;
    for (int i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n_ && left_zero; ++j) left_zero = r.mat(i, j) == 0;
        if (!left_zero) continue;
        Vec v(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) v[j] = r.mat(i, n_ + j);
        rows.push_back(std::move(v));
    }
    return span_of(p(), n_, rows);
}

bool Subspace::operator==(const Subspace& other) const {
    return n_ == other.n_ && p() == other.p() && basis_ == other.basis_;
}

bool subspace_order_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.ambient_dim(); ++j) {
            if (a.basis()(i, j) != b.basis()(i, j)) return a.basis()(i, j) < b.basis()(i, j);
        }
    }
    return false;
}

Subspace kernel_space(const GfMatrix& a) {
    const RrefResult r = rref(a);
    const std::uint32_t p = a.p();
    const int n = a.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> rows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(n), 0);
        v[f] = 1;
        for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = gf_neg(r.mat(i, f), p);
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(p, n, rows);
}

Subspace image_space(const GfMatrix& a) { return Subspace::span_of_rows(a.transposed()); }

Subspace image_of_subspace(const GfMatrix& a, const Subspace& s) {
    if (a.cols() != s.ambient_dim() || a.p() != s.p()) {
        throw DimensionMismatch("matrix/subspace ambient mismatch");
    }
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) rows.push_back(a.apply(s.basis().row(i)));
    return Subspace::span_of(a.p(), a.rows(), rows);
}

Subspace preimage_space(const GfMatrix& a, const Subspace& x) {
    if (a.rows() != x.ambient_dim() || a.p() != x.p()) {
        throw DimensionMismatch("matrix/subspace ambient mismatch");
    }
    // v lies in X iff K*v = 0 where the rows of K span the null space of the
    // basis of X; the preimage is then ker(K*A).
    const Subspace k = kernel_space(x.basis());
    return kernel_space(k.basis() * a);
}

std::optional<Vec> preimage_vector(const GfMatrix& a, const Vec& v, const Subspace& within) {
    if (a.cols() != within.ambient_dim() || a.p() != within.p()) {
        throw DimensionMismatch("matrix/subspace ambient mismatch");
    }
    if (static_cast<int>(v.size()) != a.rows()) throw DimensionMismatch("target length mismatch");
    const std::uint32_t p = a.p();
    const int d = within.dim();
    // Solve (A * W^T) y = v for coefficients y of the basis of `within`.
    GfMatrix aug(p, a.rows(), d + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < d; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < a.cols(); ++k) {
                acc += static_cast<std::uint64_t>(a(i, k)) * within.basis()(j, k);
            }
            aug(i, j) = static_cast<Fp>(acc % p);
        }
        aug(i, d) = v[i];
    }
    const RrefResult r = rref(aug);
    for (int c : r.pivot_cols) {
        if (c == d) return std::nullopt;  // inconsistent system
    }
    Vec y(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < r.rank; ++i) y[r.pivot_cols[i]] = r.mat(i, d);
    Vec u(static_cast<std::size_t>(a.cols()), 0);
    for (int j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        for (int k = 0; k < a.cols(); ++k) {
            u[k] = gf_add(u[k], gf_mul(y[j], within.basis()(j, k), p), p);
        }
    }
    return u;
}

}  // namespace jnb
