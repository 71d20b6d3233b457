#include <doctest.h>

#include "fixtures.hpp"
#include "jnb/subspace_lattice.hpp"

using namespace jnb;
using namespace jnb::test;

namespace {

// Literal restatements of the two conditions, quantifier by quantifier,
// independent of the z-interval shortcut used by the library.
bool brute_jnb2(const JoinHom& h) {
    const FiniteLattice& l = h.lattice();
    for (Element x = 0; x < l.size(); ++x) {
        for (Element y = 0; y < l.size(); ++y) {
            if (!l.leq(x, y) || h.apply(x) != h.apply(y)) continue;
            bool found = false;
            for (Element u = 0; u < l.size() && !found; ++u) {
                found = h.apply(u) == l.bottom() && l.join(x, u) == y;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool brute_jnb3(const JoinHom& h) {
    const FiniteLattice& l = h.lattice();
    for (Element x = 0; x < l.size(); ++x) {
        for (Element t = 0; t < l.size(); ++t) {
            if (!l.leq(t, h.apply(x))) continue;
            bool found = false;
            for (Element u = 0; u < l.size() && !found; ++u) {
                found = l.leq(u, x) && h.apply(u) == t;
            }
            if (!found) return false;
        }
    }
    return true;
}

// Every value table on l that build_join_hom accepts.
std::vector<JoinHom> all_homs(const LatticeRef& l) {
    std::vector<JoinHom> homs;
    const int n = l->size();
    std::vector<Element> values(static_cast<std::size_t>(n), 0);
    while (true) {
        try {
            homs.push_back(build_join_hom(l, values));
        } catch (const MathError&) {
        }
        int i = n - 1;
        while (i >= 0 && values[static_cast<std::size_t>(i)] == n - 1) {
            values[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++values[static_cast<std::size_t>(i)];
    }
    return homs;
}

void check_hom_laws(const JoinHom& h) {
    const FiniteLattice& l = h.lattice();
    for (Element x = 0; x < l.size(); ++x) {
        CHECK(l.leq(h.apply(x), h.image_w()));
        CHECK((h.apply(x) == l.bottom()) == l.leq(x, h.kernel_z()));
        for (Element y = 0; y < l.size(); ++y) {
            if (l.leq(x, y)) CHECK(l.leq(h.apply(x), h.apply(y)));
        }
    }
    // The top-image sequence descends and stabilizes within height steps.
    Element prev = l.top();
    for (int i = 1; i <= l.height() + 1; ++i) {
        const Element cur = apply_power(h, l.top(), i);
        CHECK(l.leq(cur, prev));
        prev = cur;
    }
    CHECK(apply_power(h, l.top(), l.height() + 1) == h.stable_top_image());
    CHECK(h.is_nilpotent() == (h.stable_top_image() == l.bottom()));
    if (h.is_nilpotent()) {
        for (Element x = 0; x < l.size(); ++x) {
            if (l.leq(x, h.apply(x))) CHECK(x == l.bottom());
        }
    }
}

}  // namespace

TEST_CASE("zero map caches") {
    const JoinHom h = zero_map(make_b2());
    CHECK(h.image_w() == h.lattice().bottom());
    CHECK(h.kernel_z() == h.lattice().top());
    CHECK(h.nilpotency_index() == 1);
}

TEST_CASE("constant-to-atom map on the two-atom boolean lattice") {
    // a and b both map to b, so the top maps to b and the kernel is 0.
    const JoinHom h =
        make_hom(make_b2(), {{"0", "0"}, {"a", "b"}, {"b", "b"}, {"1", "b"}});
    const FiniteLattice& l = h.lattice();
    CHECK(h.image_w() == *l.find("b"));
    CHECK(h.kernel_z() == l.bottom());
    CHECK_FALSE(h.is_nilpotent());
    CHECK(h.stable_top_image() == *l.find("b"));
}

TEST_CASE("non-homomorphic tables are rejected with a witness") {
    LatticeRef l = make_b2();
    std::vector<Element> values = {*l->find("0"), *l->find("b"), *l->find("0"), *l->find("0")};
    try {
        build_join_hom(l, values);
        FAIL("expected NotJoinHom");
    } catch (const NotJoinHom& e) {
        CHECK(e.first == "a");
        CHECK(e.second == "b");
    }
    std::vector<Element> bad_zero = {*l->find("a"), *l->find("a"), *l->find("a"), *l->find("a")};
    CHECK_THROWS_AS(build_join_hom(l, bad_zero), ZeroNotFixed);
    CHECK_THROWS_AS(build_join_hom(l, std::vector<Element>{0, 0}), InvalidInput);
}

TEST_CASE("apply_power") {
    const JoinHom shift = make_chain4_shift();
    const FiniteLattice& l = shift.lattice();
    const Element top = l.top();
    CHECK(apply_power(shift, top, 0) == top);
    CHECK(apply_power(shift, top, 2) == *l.find("a"));
    CHECK(apply_power(shift, top, 3) == l.bottom());

    const JoinHom zero = zero_map(make_b2());
    CHECK(apply_power(zero, zero.lattice().top(), 1) == zero.lattice().bottom());
}

TEST_CASE("nilpotency index") {
    CHECK(zero_map(make_b2()).nilpotency_index() == 1);
    CHECK(make_chain4_shift().nilpotency_index() == 3);
    const JoinHom fixed =
        make_hom(make_b2(), {{"0", "0"}, {"a", "b"}, {"b", "b"}, {"1", "b"}});
    CHECK_FALSE(nilpotency_index(fixed).has_value());
}

TEST_CASE("hom laws hold for every join-homomorphism on the small fixtures") {
    for (const LatticeRef& l : {make_b2(), make_chain4()}) {
        const std::vector<JoinHom> homs = all_homs(l);
        CHECK(homs.size() > 1);
        for (const JoinHom& h : homs) check_hom_laws(h);
    }
}

TEST_CASE("jnb1") {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(2, 2);
    CHECK(check_jnb1(*model.lattice).ok);

    LatticeRef n5 = make_n5();
    const ElementCheck r = check_jnb1(*n5);
    CHECK_FALSE(r.ok);
    CHECK(n5->label(*r.witness) == "c");

    LatticeRef chain3 = make_chain3();
    const ElementCheck rc = check_jnb1(*chain3);
    CHECK_FALSE(rc.ok);
    CHECK(chain3->label(*rc.witness) == "M");
}

TEST_CASE("jnb2") {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(2, 2);
    GfMatrix j2(2, 2, 2);
    j2(0, 1) = 1;
    CHECK(check_jnb2(induced_join_hom(model, j2)).ok);

    const JoinHom bad =
        make_hom(make_b2(), {{"0", "0"}, {"a", "b"}, {"b", "b"}, {"1", "b"}});
    const PairCheck r = check_jnb2(bad);
    CHECK_FALSE(r.ok);
    CHECK(bad.lattice().label(r.witness->first) == "a");
    CHECK(bad.lattice().label(r.witness->second) == "1");

    CHECK(check_jnb2(zero_map(make_b3())).ok);
}

TEST_CASE("jnb3") {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(2, 2);
    GfMatrix j2(2, 2, 2);
    j2(0, 1) = 1;
    CHECK(check_jnb3(induced_join_hom(model, j2)).ok);

    const JoinHom bad =
        make_hom(make_b2(), {{"0", "0"}, {"a", "1"}, {"b", "0"}, {"1", "1"}});
    const PairCheck r = check_jnb3(bad);
    CHECK_FALSE(r.ok);
    CHECK(bad.lattice().label(r.witness->first) == "a");
    CHECK(bad.lattice().label(r.witness->second) == "b");

    CHECK(check_jnb3(zero_map(make_b3())).ok);
}

TEST_CASE("condition checkers agree with the brute-force definitions") {
    for (const LatticeRef& l : {make_b2(), make_chain4(), make_n5(), make_m3()}) {
        for (const JoinHom& h : all_homs(l)) {
            const PairCheck two = check_jnb2(h);
            const PairCheck three = check_jnb3(h);
            CHECK(two.ok == brute_jnb2(h));
            CHECK(three.ok == brute_jnb3(h));
            if (!two.ok) {
                // The reported pair really is a counterexample.
                const auto [x, y] = *two.witness;
                CHECK(h.lattice().leq(x, y));
                CHECK(h.apply(x) == h.apply(y));
                bool fixable = false;
                for (Element u = 0; u < h.lattice().size() && !fixable; ++u) {
                    fixable = h.apply(u) == h.lattice().bottom() && h.lattice().join(x, u) == y;
                }
                CHECK_FALSE(fixable);
            }
            if (!three.ok) {
                const auto [x, t] = *three.witness;
                CHECK(h.lattice().leq(t, h.apply(x)));
                bool hit = false;
                for (Element u = 0; u < h.lattice().size() && !hit; ++u) {
                    hit = h.lattice().leq(u, x) && h.apply(u) == t;
                }
                CHECK_FALSE(hit);
            }
        }
    }
}

TEST_CASE("preimages_below") {
    const JoinHom zero = zero_map(make_b2());
    CHECK(preimages_below(zero, zero.lattice().bottom(), zero.lattice().top()).size() == 4);

    const JoinHom shift = make_chain4_shift();
    const FiniteLattice& l = shift.lattice();
    CHECK(preimages_below(shift, *l.find("a"), l.top()) ==
          std::vector<Element>{*l.find("b")});
    // Targets above the image of the bound have no preimage at all.
    CHECK(preimages_below(shift, l.top(), l.top()).empty());
}

TEST_CASE("restrict_to_image") {
    const RestrictionToImage triv = restrict_to_image(zero_map(make_b2()));
    CHECK(triv.embedding.sub->size() == 1);

    const RestrictionToImage rest = restrict_to_image(make_chain4_shift());
    CHECK(rest.embedding.sub->size() == 3);
    CHECK(rest.hom.nilpotency_index() == 2);

    const SubspaceLatticeModel model = enumerate_subspace_lattice(2, 2);
    GfMatrix j2(2, 2, 2);
    j2(0, 1) = 1;
    const JoinHom induced = induced_join_hom(model, j2);
    const RestrictionToImage sub = restrict_to_image(induced);
    CHECK(sub.embedding.sub->size() == 2);
    CHECK(sub.hom.apply(sub.embedding.sub->top()) == sub.embedding.sub->bottom());

    // The restriction commutes with the embedding.
    for (const JoinHom& h : {make_chain4_shift(), induced}) {
        const RestrictionToImage r = restrict_to_image(h);
        for (Element x = 0; x < r.embedding.sub->size(); ++x) {
            CHECK(r.embedding.to_parent[r.hom.apply(x)] ==
                  h.apply(r.embedding.to_parent[x]));
        }
    }
}
