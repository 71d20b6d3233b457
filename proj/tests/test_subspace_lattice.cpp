#include <doctest.h>

#include "jnb/generators.hpp"
#include "jnb/subspace_lattice.hpp"

using namespace jnb;

namespace {

// Independent Gaussian binomial via the q-Pascal recurrence
// [n,k] = [n-1,k-1] + q^k [n-1,k].
std::uint64_t q_binomial(std::uint64_t q, int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) table[i][0] = 1;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t qk = 1;
        for (int j = 1; j <= i; ++j) {
            qk *= q;
            table[i][j] = table[i - 1][j - 1] + qk * table[i - 1][j];
        }
    }
    return table[n][k];
}

std::uint64_t q_subspace_total(std::uint64_t q, int n) {
    std::uint64_t total = 0;
    for (int d = 0; d <= n; ++d) total += q_binomial(q, n, d);
    return total;
}

}  // namespace

TEST_CASE("enumeration counts match the Gaussian binomial sums") {
    const SubspaceLatticeModel m22 = enumerate_subspace_lattice(2, 2);
    CHECK(m22.lattice->size() == 5);
    CHECK(m22.lattice->atoms().size() == 3);
    CHECK(m22.lattice->height() == 2);

    const SubspaceLatticeModel m23 = enumerate_subspace_lattice(2, 3);
    CHECK(m23.lattice->size() == 16);
    CHECK(m23.lattice->height() == 3);

    const SubspaceLatticeModel m31 = enumerate_subspace_lattice(3, 1);
    CHECK(m31.lattice->size() == 2);

    for (const auto& [p, n] :
         std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
        const SubspaceLatticeModel model = enumerate_subspace_lattice(p, n);
        CHECK(static_cast<std::uint64_t>(model.lattice->size()) == q_subspace_total(p, n));
        CHECK(subspace_count(p, n) == q_subspace_total(p, n));
        // Atoms are exactly the lines, height is the dimension.
        CHECK(model.lattice->atoms().size() == q_binomial(p, n, 1));
        CHECK(model.lattice->height() == n);
        for (Element a : model.lattice->atoms()) CHECK(model.elements[a].dim() == 1);
    }
}

TEST_CASE("oversized enumerations are rejected with the computed count") {
    CHECK_THROWS_WITH_AS(enumerate_subspace_lattice(2, 9),
                         doctest::Contains("elements (cap 20000)"), TooLarge);
    CHECK(subspace_count(2, 9) > 20000);
}

TEST_CASE("element order is dimension-major, then lexicographic") {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(2, 2);
    CHECK(model.lattice->labels() ==
          std::vector<std::string>{"0", "01", "10", "11", "10;01"});
    for (Element e = 0; e < model.lattice->size(); ++e) {
        CHECK(model.index_of(model.elements[e]) == e);
        CHECK(subspace_label(model.elements[e]) == model.lattice->label(e));
    }
}

TEST_CASE("labels over large primes separate entries with commas") {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(11, 2);
    CHECK(model.lattice->size() == 14);  // 1 + 12 + 1
    CHECK(model.lattice->label(model.lattice->bottom()) == "0");
    const Element line = model.index_of(Subspace::span_of(11, 2, {Vec{1, 7}}));
    CHECK(model.lattice->label(line) == "1,7");
    CHECK(model.lattice->label(model.lattice->top()) == "1,0;0,1");
}

TEST_CASE("lattice joins are sums and meets are intersections") {
    for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const SubspaceLatticeModel model = enumerate_subspace_lattice(p, n);
        const FiniteLattice& l = *model.lattice;
        for (Element x = 0; x < l.size(); ++x) {
            for (Element y = 0; y < l.size(); ++y) {
                CHECK(model.elements[l.join(x, y)] ==
                      model.elements[x].sum(model.elements[y]));
                CHECK(model.elements[l.meet(x, y)] ==
                      model.elements[x].intersect(model.elements[y]));
            }
        }
    }
}

TEST_CASE("enumerated models satisfy the structural hypotheses") {
    for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const SubspaceLatticeModel model = enumerate_subspace_lattice(p, n);
        CHECK(check_jnb1(*model.lattice).ok);
        CHECK(has_atomic_cover_property(*model.lattice).ok);
        CHECK(has_graded_chains(*model.lattice).ok);
    }
}

TEST_CASE("induced maps") {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(2, 2);
    const FiniteLattice& l = *model.lattice;

    const JoinHom zero = induced_join_hom(model, GfMatrix(2, 2, 2));
    for (Element e = 0; e < l.size(); ++e) CHECK(zero.apply(e) == l.bottom());

    const JoinHom id = induced_join_hom(model, GfMatrix::identity(2, 2));
    for (Element e = 0; e < l.size(); ++e) CHECK(id.apply(e) == e);

    GfMatrix j2(2, 2, 2);
    j2(0, 1) = 1;
    const JoinHom h = induced_join_hom(model, j2);
    CHECK(h.apply(*l.find("10;01")) == *l.find("10"));
    CHECK(h.apply(*l.find("10")) == *l.find("0"));
    CHECK(h.apply(*l.find("01")) == *l.find("10"));
    CHECK(h.apply(*l.find("11")) == *l.find("10"));
    CHECK(h.apply(*l.find("0")) == *l.find("0"));

    CHECK_THROWS_AS(induced_join_hom(model, GfMatrix(3, 2, 2)), DimensionMismatch);
    CHECK_THROWS_AS(induced_join_hom(model, GfMatrix(2, 3, 3)), DimensionMismatch);
}

TEST_CASE("cross validation on the hand-checked fixtures") {
    GfMatrix j2(2, 2, 2);
    j2(0, 1) = 1;
    const CrossValidationReport r1 = cross_validate(2, 2, j2);
    CHECK(r1.ok);
    CHECK(r1.partition == std::vector<int>{2});
    CHECK(r1.legs.size() == 6);
    for (const auto& leg : r1.legs) {
        CAPTURE(leg.name);
        CHECK(leg.ok);
    }

    const CrossValidationReport r2 = cross_validate(2, 3, GfMatrix(2, 3, 3));
    CHECK(r2.ok);
    CHECK(r2.partition == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(cross_validate(2, 2, GfMatrix::identity(2, 2)), NotNilpotent);
}

TEST_CASE("cross validation over a seeded random batch") {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(3, 2);
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const GfMatrix a = gen_nilpotent_matrix(3, 2, rng);
        const CrossValidationReport r = cross_validate(model, a);
        CAPTURE(trial);
        CHECK(r.ok);
    }
}
