#include <doctest.h>

#include "jnb/generators.hpp"
#include "jnb/subspace.hpp"

using namespace jnb;

namespace {

GfMatrix random_matrix(std::uint32_t p, int rows, int cols, Rng& rng) {
    GfMatrix a(p, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = rng.below(p);
    return a;
}

Subspace random_subspace(std::uint32_t p, int n, Rng& rng) {
    const int k = static_cast<int>(rng.below(static_cast<std::uint32_t>(n + 1)));
    return Subspace::span_of_rows(random_matrix(p, k, n, rng));
}

}  // namespace

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(GfMatrix(4, 2, 2), InvalidInput);
    CHECK_THROWS_AS(GfMatrix(1, 2, 2), InvalidInput);
    CHECK_THROWS_AS(GfMatrix(65537, 2, 2), InvalidInput);  // prime, but over the cap
    CHECK(GfMatrix(65521, 1, 1).p() == 65521);
}

TEST_CASE("field helpers") {
    CHECK(gf_inv(3, 7) == 5);
    CHECK(gf_mul(65520, 65520, 65521) == 1);
    CHECK(gf_pow(2, 10, 65521) == 1024);
    CHECK_THROWS_AS(gf_inv(0, 5), InvalidInput);
}

TEST_CASE("rref frozen cases") {
    const GfMatrix id = GfMatrix::identity(5, 3);
    const RrefResult r1 = rref(id);
    CHECK(r1.mat == id);
    CHECK(r1.rank == 3);

    const GfMatrix zero(5, 3, 3);
    const RrefResult r0 = rref(zero);
    CHECK(r0.mat == zero);
    CHECK(r0.rank == 0);

    GfMatrix ones(2, 2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1;
    const RrefResult r = rref(ones);
    CHECK(r.rank == 1);
    CHECK(r.mat(0, 0) == 1);
    CHECK(r.mat(0, 1) == 1);
    CHECK(r.mat(1, 0) == 0);
    CHECK(r.mat(1, 1) == 0);
}

TEST_CASE("rref idempotence and rank-nullity on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
        const int rows = 1 + static_cast<int>(rng.below(6));
        const int cols = 1 + static_cast<int>(rng.below(6));
        const GfMatrix a = random_matrix(p, rows, cols, rng);
        const RrefResult r = rref(a);
        CHECK(rref(r.mat).mat == r.mat);
        if (rows == cols) {
            CHECK(kernel_space(a).dim() + image_space(a).dim() == cols);
        }
    }
}

TEST_CASE("kernel and image frozen cases") {
    const GfMatrix zero(3, 3, 3);
    CHECK(kernel_space(zero) == Subspace::full(3, 3));
    CHECK(image_space(zero) == Subspace::zero(3, 3));

    GfMatrix j3(2, 3, 3);
    j3(0, 1) = 1;
    j3(1, 2) = 1;
    const Subspace ker = kernel_space(j3);
    const Subspace im = image_space(j3);
    CHECK(ker.dim() == 1);
    CHECK(ker.contains(Vec{1, 0, 0}));
    CHECK(im.dim() == 2);
    CHECK(im.contains(Vec{1, 0, 0}));
    CHECK(im.contains(Vec{0, 1, 0}));
    CHECK_FALSE(im.contains(Vec{0, 0, 1}));

    const GfMatrix id = GfMatrix::identity(7, 4);
    CHECK(kernel_space(id) == Subspace::zero(7, 4));
    CHECK(image_space(id) == Subspace::full(7, 4));
}

TEST_CASE("preimage_vector") {
    const GfMatrix id = GfMatrix::identity(5, 3);
    const Vec v{1, 2, 3};
    CHECK(preimage_vector(id, v, Subspace::full(5, 3)) == v);

    GfMatrix j2(3, 2, 2);
    j2(0, 1) = 1;
    CHECK(preimage_vector(j2, Vec{1, 0}, Subspace::full(3, 2)) == Vec{0, 1});

    const GfMatrix zero(3, 2, 2);
    CHECK_FALSE(preimage_vector(zero, Vec{1, 0}, Subspace::full(3, 2)).has_value());

    // Restricting the solution space can make the target unreachable.
    const Subspace line = Subspace::span_of(3, 2, {Vec{1, 0}});
    CHECK_FALSE(preimage_vector(j2, Vec{1, 0}, line).has_value());
}

TEST_CASE("inverse") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 65521}[trial % 4];
        const int n = 1 + static_cast<int>(rng.below(5));
        const GfMatrix s = gen_invertible_matrix(p, n, rng);
        const auto inv = inverse(s);
        REQUIRE(inv.has_value());
        CHECK(*inv * s == GfMatrix::identity(p, n));
        CHECK(s * *inv == GfMatrix::identity(p, n));
    }
    const GfMatrix zero(2, 2, 2);
    CHECK_FALSE(inverse(zero).has_value());
}

TEST_CASE("matrix nilpotency index") {
    GfMatrix j3(2, 3, 3);
    j3(0, 1) = 1;
    j3(1, 2) = 1;
    CHECK(matrix_nilpotency_index(j3) == 3);
    CHECK(matrix_nilpotency_index(GfMatrix(5, 4, 4)) == 1);
    CHECK_FALSE(matrix_nilpotency_index(GfMatrix::identity(2, 3)).has_value());
}

TEST_CASE("subspace arithmetic satisfies the dimension laws") {
    Rng rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
        const int n = 1 + static_cast<int>(rng.below(5));
        const Subspace u = random_subspace(p, n, rng);
        const Subspace w = random_subspace(p, n, rng);
        const Subspace s = u.sum(w);
        const Subspace i = u.intersect(w);
        CHECK(s.dim() + i.dim() == u.dim() + w.dim());
        CHECK(s.contains(u));
        CHECK(s.contains(w));
        CHECK(u.contains(i));
        CHECK(w.contains(i));
        CHECK(u.sum(u) == u);
        CHECK(u.intersect(u) == u);
    }
}

TEST_CASE("preimage_space") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
        const int n = 1 + static_cast<int>(rng.below(5));
        const GfMatrix a = random_matrix(p, n, n, rng);
        const Subspace x = random_subspace(p, n, rng);
        const Subspace pre = preimage_space(a, x);
        // The image of the preimage is the reachable part of x.
        CHECK(image_of_subspace(a, pre) == x.intersect(image_space(a)));
        CHECK(pre.contains(kernel_space(a)));
        CHECK(pre.dim() == x.intersect(image_space(a)).dim() + kernel_space(a).dim());
    }
}

TEST_CASE("subspace ordering is a strict total order on canonical forms") {
    const Subspace a = Subspace::span_of(2, 2, {Vec{0, 1}});
    const Subspace b = Subspace::span_of(2, 2, {Vec{1, 0}});
    const Subspace c = Subspace::span_of(2, 2, {Vec{1, 1}});
    CHECK(subspace_order_less(a, b));
    CHECK(subspace_order_less(b, c));
    CHECK(subspace_order_less(Subspace::zero(2, 2), a));
    CHECK(subspace_order_less(c, Subspace::full(2, 2)));
    CHECK_FALSE(subspace_order_less(a, a));
}
