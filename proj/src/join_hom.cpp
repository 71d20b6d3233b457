#include "jnb/join_hom.hpp"

namespace jnb {

JoinHom build_join_hom(LatticeRef lattice, std::vector<Element> values) {
    const FiniteLattice& l = *lattice;
    const int n = l.size();
    if (static_cast<int>(values.size()) != n) {
        throw InvalidInput("value table must be total on the lattice");
    }
    for (Element v : values) {
        if (v < 0 || v >= n) throw InvalidInput("map value out of range");
    }
    if (values[static_cast<std::size_t>(l.bottom())] != l.bottom()) {
        throw ZeroNotFixed("bottom must map to bottom");
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = x; y < n; ++y) {
            const Element lhs = values[static_cast<std::size_t>(l.join(x, y))];
            const Element rhs = l.join(values[static_cast<std::size_t>(x)],
                                       values[static_cast<std::size_t>(y)]);
            if (lhs != rhs) throw NotJoinHom(l.label(x), l.label(y));
        }
    }

    JoinHom h;
    h.lattice_ = std::move(lattice);
    h.values_ = std::move(values);
    h.image_w_ = h.values_[static_cast<std::size_t>(l.top())];

    Element z = l.bottom();
    for (Element x = 0; x < n; ++x) {
        if (h.values_[static_cast<std::size_t>(x)] == l.bottom()) z = l.join(z, x);
    }
    h.kernel_z_ = z;
    // Derived law of a complete join-homomorphism; cheap to assert outright.
    for (Element x = 0; x < n; ++x) {
        const bool kills = h.values_[static_cast<std::size_t>(x)] == l.bottom();
        if (kills != l.leq(x, z)) {
            throw Error("internal: kernel law violated at " + l.label(x));
        }
    }

    // The top-image sequence is weakly decreasing, so it stabilizes within
    // height steps; it reaches bottom exactly for nilpotent maps.
    Element prev = l.top();
    Element cur = h.image_w_;
    int k = 1;
    while (cur != l.bottom() && cur != prev) {
        prev = cur;
        cur = h.values_[static_cast<std::size_t>(cur)];
        ++k;
    }
    h.stable_top_image_ = cur;
    if (cur == l.bottom()) h.nilpotency_k_ = k;
    return h;
}

Element apply_power(const JoinHom& h, Element x, int m) {
    if (m < 0) throw InvalidInput("negative power");
    Element acc = x;
    for (int i = 0; i < m; ++i) acc = h.apply(acc);
    return acc;
}

std::optional<int> nilpotency_index(const JoinHom& h) { return h.nilpotency_index(); }

ElementCheck check_jnb1(const FiniteLattice& l) {
    // A finite lattice has finite height by construction; the substance is
    // atomisticity.
    return is_atomistic(l);
}

PairCheck check_jnb2(const JoinHom& h) {
    const FiniteLattice& l = h.lattice();
    const Element z = h.kernel_z();
    std::vector<Element> kernel_interval;
    for (Element u = 0; u < l.size(); ++u) {
        if (l.leq(u, z)) kernel_interval.push_back(u);
    }
    for (Element x = 0; x < l.size(); ++x) {
        for (Element y = 0; y < l.size(); ++y) {
            if (!l.leq(x, y) || h.apply(x) != h.apply(y)) continue;
            bool found = false;
            for (Element u : kernel_interval) {
                if (l.join(x, u) == y) {
                    found = true;
                    break;
                }
            }
            if (!found) return {false, std::make_pair(x, y)};
        }
    }
    return {true, std::nullopt};
}

PairCheck check_jnb3(const JoinHom& h) {
    const FiniteLattice& l = h.lattice();
    for (Element x = 0; x < l.size(); ++x) {
        const Element wx = h.apply(x);
        const Bitset& targets = l.down_set(wx);
        const Bitset& below = l.down_set(x);
        // Targets scanned top-down within [0, value(x)].
        for (Element t = l.size() - 1; t >= 0; --t) {
            if (!targets.test(static_cast<std::size_t>(t))) continue;
            bool found = false;
            for (auto u = below.find_first(); u != Bitset::npos; u = below.find_next(u)) {
                if (h.apply(static_cast<Element>(u)) == t) {
                    found = true;
                    break;
                }
            }
            if (!found) return {false, std::make_pair(x, t)};
        }
    }
    return {true, std::nullopt};
}

ConditionReport check_jnb_conditions(const JoinHom& h) {
    return {check_jnb1(h.lattice()), check_jnb2(h), check_jnb3(h)};
}

std::vector<Element> preimages_below(const JoinHom& h, Element target, Element bound) {
    const FiniteLattice& l = h.lattice();
    std::vector<Element> out;
    for (Element u = 0; u < l.size(); ++u) {
        if (l.leq(u, bound) && h.apply(u) == target) out.push_back(u);
    }
    return out;
}

RestrictionToImage restrict_to_image(const JoinHom& h) {
    const FiniteLattice& l = h.lattice();
    IntervalEmbedding emb = interval(l, l.bottom(), h.image_w());
    std::vector<Element> values;
    values.reserve(emb.to_parent.size());
    for (Element parent : emb.to_parent) {
        const Element image = h.apply(parent);
        const Element local = emb.from_parent[static_cast<std::size_t>(image)];
        if (local < 0) throw Error("internal: restriction leaves the interval");
        values.push_back(local);
    }
    JoinHom hom = build_join_hom(emb.sub, std::move(values));
    return {std::move(emb), std::move(hom)};
}

}  // namespace jnb
