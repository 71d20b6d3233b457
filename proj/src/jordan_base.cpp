#include "jnb/jordan_base.hpp"

#include <algorithm>
#include <set>

namespace jnb {

std::vector<int> JordanNormalBase::lengths() const {
    std::vector<int> out;
    out.reserve(chains.size());
    for (const auto& c : chains) out.push_back(static_cast<int>(c.size()));
    return out;
}

int JordanNormalBase::total_atoms() const {
    int total = 0;
    for (const auto& c : chains) total += static_cast<int>(c.size());
    return total;
}

std::vector<Element> JordanNormalBase::flattened() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(total_atoms()));
    for (const auto& c : chains) out.insert(out.end(), c.begin(), c.end());
    return out;
}

JordanNormalBase make_base(const FiniteLattice& l, std::vector<std::vector<Element>> chains,
                           bool canonicalize) {
    for (const auto& chain : chains) {
        if (chain.empty()) throw InvalidInput("empty chain in base");
    }
    if (canonicalize) {
        std::stable_sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a.front() < b.front();
        });
    }
    JordanNormalBase base;
    base.chains = std::move(chains);
    Element c = l.bottom();
    for (const auto& chain : base.chains) c = l.join(c, chain.front());
    base.c_element = c;
    return base;
}

Element lift_atom(const JoinHom& h, Element a) {
    const FiniteLattice& l = h.lattice();
    Element x = -1;
    for (Element e = 0; e < l.size(); ++e) {
        if (h.apply(e) == a) {
            x = e;
            break;
        }
    }
    if (x < 0) {
        throw NoPreimage("no preimage of atom " + l.label(a));
    }
    const Bitset below = l.atoms_below(x);
    for (auto b = below.find_first(); b != Bitset::npos; b = below.find_next(b)) {
        if (h.apply(static_cast<Element>(b)) == a) return static_cast<Element>(b);
    }
    throw NoAtomPreimage("no atom below " + l.label(x) + " maps to " + l.label(a));
}

std::vector<Element> extend_kernel_chain(const JoinHom& h, Element c) {
    const FiniteLattice& l = h.lattice();
    const Element z = h.kernel_z();
    if (!l.leq(c, z)) throw InvalidInput("chain seed must lie below the kernel element");
    std::vector<Element> out;
    Element current = c;
    while (current != z) {
        Element pick = -1;
        for (Element a : l.atoms()) {
            if (l.leq(a, z) && !l.leq(a, current)) {
                pick = a;
                break;
            }
        }
        if (pick < 0) {
            throw Stalled("no kernel atom extends " + l.label(current) + " toward " + l.label(z));
        }
        out.push_back(pick);
        current = l.join(current, pick);
    }
    return out;
}

namespace {

std::vector<std::vector<Element>> compute_chains(const JoinHom& h) {
    const FiniteLattice& l = h.lattice();
    std::vector<std::vector<Element>> chains;
    if (l.size() == 1) return chains;

    if (h.image_w() != l.bottom()) {
        const RestrictionToImage rest = restrict_to_image(h);
        chains = compute_chains(rest.hom);
        for (auto& chain : chains) {
            for (Element& e : chain) e = rest.embedding.to_parent[static_cast<std::size_t>(e)];
            chain.push_back(lift_atom(h, chain.back()));
        }
    }

    Element c = l.bottom();
    for (const auto& chain : chains) c = l.join(c, chain.front());
    for (Element b : extend_kernel_chain(h, c)) chains.push_back({b});
    return chains;
}

}  // namespace

JordanNormalBase compute_jnb(const JoinHom& h, bool skip_condition_checks) {
    const FiniteLattice& l = h.lattice();
    if (!h.is_nilpotent()) {
        throw NotNilpotent("map is not nilpotent; top-image sequence stabilizes at " +
                           l.label(h.stable_top_image()));
    }
    if (!skip_condition_checks) {
        const ConditionReport report = check_jnb_conditions(h);
        if (!report.jnb1.ok) {
            throw PreconditionFailed("jnb1 fails: " + l.label(*report.jnb1.witness) +
                                     " is not a join of atoms");
        }
        if (!report.jnb2.ok) {
            throw PreconditionFailed("jnb2 fails at (" + l.label(report.jnb2.witness->first) +
                                     ", " + l.label(report.jnb2.witness->second) + ")");
        }
        if (!report.jnb3.ok) {
            throw PreconditionFailed("jnb3 fails at (" + l.label(report.jnb3.witness->first) +
                                     ", " + l.label(report.jnb3.witness->second) + ")");
        }
    }

    JordanNormalBase base;
    try {
        base = make_base(l, compute_chains(h), /*canonicalize=*/true);
    } catch (const MathError& e) {
        // With the condition checks skipped, a breakdown inside the
        // construction is a condition violation in disguise.
        throw VerificationFailed(std::string("construction failed: ") + e.what());
    }
    const VerifyResult check = verify_jnb(h, base);
    if (!check.ok) throw VerificationFailed(check.detail);
    if (!base.chains.empty() && nilpotency_from_jnb(base) != *h.nilpotency_index()) {
        throw VerificationFailed("longest chain disagrees with the nilpotency index");
    }
    return base;
}

VerifyResult verify_jnb(const JoinHom& h, const JordanNormalBase& base) {
    const FiniteLattice& l = h.lattice();
    std::set<Element> seen;
    for (const auto& chain : base.chains) {
        if (chain.empty()) return {false, "empty chain"};
        for (Element e : chain) {
            if (e < 0 || e >= l.size()) return {false, "element index out of range"};
            if (!l.is_atom(e)) return {false, "element " + l.label(e) + " is not an atom"};
            if (!seen.insert(e).second) return {false, "duplicate atom " + l.label(e)};
        }
    }

    // (1) chain-front joins strictly ascend.
    Element fronts = l.bottom();
    for (std::size_t t = 0; t < base.chains.size(); ++t) {
        const Element next = l.join(fronts, base.chains[t].front());
        if (t > 0 && next == fronts) {
            return {false, "chain-front join sequence not strictly ascending at chain " +
                               std::to_string(t + 1)};
        }
        fronts = next;
    }
    const Element c = fronts;

    // (2) appending each later atom strictly grows the running join.
    Element acc = c;
    for (std::size_t t = 0; t < base.chains.size(); ++t) {
        for (std::size_t i = 2; i <= base.chains[t].size(); ++i) {
            const Element next = l.join(acc, base.chains[t][i - 1]);
            if (next == acc) {
                return {false, "strict growth violated at (" + std::to_string(t + 1) + "," +
                                   std::to_string(i) + ")"};
            }
            acc = next;
        }
    }

    // (3) the whole family joins to the top.
    if (acc != l.top()) return {false, "total join != 1"};

    // (4) the map walks every chain downward and kills the chain front.
    for (std::size_t t = 0; t < base.chains.size(); ++t) {
        const auto& chain = base.chains[t];
        for (std::size_t i = 2; i <= chain.size(); ++i) {
            if (h.apply(chain[i - 1]) != chain[i - 2]) {
                return {false, "lambda action violated at (" + std::to_string(t + 1) + "," +
                                   std::to_string(i) + ")"};
            }
        }
        if (h.apply(chain.front()) != l.bottom()) {
            return {false, "lambda action violated at (" + std::to_string(t + 1) + ",1)"};
        }
    }
    return {true, ""};
}

bool base_is_direct_sum(const FiniteLattice& l, const JordanNormalBase& base) {
    const PairCheck cover = has_atomic_cover_property(l);
    if (!cover.ok) {
        throw HypothesesNotMet("atomic cover property fails at (" +
                               l.label(cover.witness->first) + ", " +
                               l.label(cover.witness->second) + ")");
    }
    const ElementCheck graded = has_graded_chains(l);
    if (!graded.ok) {
        throw HypothesesNotMet("maximal chains of unequal length below " +
                               l.label(*graded.witness));
    }
    if (base.chains.empty()) return true;
    return is_irredundant_join(l, base.flattened());
}

int nilpotency_from_jnb(const JordanNormalBase& base) {
    if (base.chains.empty()) throw EmptyBase("base has no chains");
    int k = 0;
    for (const auto& chain : base.chains) k = std::max(k, static_cast<int>(chain.size()));
    return k;
}

}  // namespace jnb
