#include "jnb/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jnb {

namespace {

// The unique least element of `candidates` w.r.t. the given up-sets, or -1.
// If a least upper bound exists it is the candidate with the largest up-set,
// so one subset test settles uniqueness.
Element least_of(const Bitset& candidates, const std::vector<Bitset>& up) {
    Element best = -1;
    std::size_t best_size = 0;
    for (auto i = candidates.find_first(); i != Bitset::npos; i = candidates.find_next(i)) {
        const std::size_t sz = up[i].count();
        if (best < 0 || sz > best_size) {
            best = static_cast<Element>(i);
            best_size = sz;
        }
    }
    if (best >= 0 && candidates.is_subset_of(up[best])) return best;
    return -1;
}

}  // namespace

LatticeRef FiniteLattice::from_order(std::vector<std::string> labels, std::vector<Bitset> up) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw InvalidInput("a lattice needs at least one element");
    if (n > kMaxLatticeSize) {
        throw TooLarge("lattice has " + std::to_string(n) + " elements (cap " +
                       std::to_string(kMaxLatticeSize) + ")");
    }
    {
        std::map<std::string, int> seen;
        for (int i = 0; i < n; ++i) {
            if (!seen.emplace(labels[i], i).second) {
                throw InvalidInput("duplicate element label: " + labels[i]);
            }
        }
    }

    auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
    FiniteLattice& l = *lattice;
    l.n_ = n;
    l.labels_ = std::move(labels);
    l.up_ = std::move(up);
    l.down_.assign(n, Bitset(n));
    for (int x = 0; x < n; ++x) {
        if (!l.up_[x].test(x)) throw InvalidInput("order is not reflexive");
        for (auto y = l.up_[x].find_first(); y != Bitset::npos; y = l.up_[x].find_next(y)) {
            l.down_[y].set(x);
        }
    }
    for (int x = 0; x < n; ++x) {
        Bitset both = l.up_[x] & l.down_[x];
        both.reset(x);
        if (both.any()) {
            const auto y = both.find_first();
            throw CycleDetected("cover cycle through " + l.labels_[x] + " and " +
                                l.labels_[y]);
        }
    }

    l.bottom_ = l.top_ = -1;
    for (int x = 0; x < n; ++x) {
        if (l.up_[x].count() == static_cast<std::size_t>(n)) l.bottom_ = x;
        if (l.down_[x].count() == static_cast<std::size_t>(n)) l.top_ = x;
    }
    if (l.bottom_ < 0 || l.top_ < 0) {
        throw NoBoundedStructure("no unique minimum/maximum element");
    }

    l.join_.assign(static_cast<std::size_t>(n) * n, 0);
    l.meet_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            Element j, m;
            if (l.up_[x].test(y)) {
                j = y;
                m = x;
            } else if (l.up_[y].test(x)) {
                j = x;
                m = y;
            } else {
                j = least_of(l.up_[x] & l.up_[y], l.up_);
                if (j < 0) throw NotALattice("least upper bound", l.labels_[x], l.labels_[y]);
                m = least_of(l.down_[x] & l.down_[y], l.down_);
                if (m < 0) throw NotALattice("greatest lower bound", l.labels_[x], l.labels_[y]);
            }
            l.join_[l.idx(x, y)] = l.join_[l.idx(y, x)] = j;
            l.meet_[l.idx(x, y)] = l.meet_[l.idx(y, x)] = m;
        }
    }

    // Transitive reduction: y covers x iff nothing sits strictly between.
    l.upper_covers_.assign(n, {});
    l.lower_covers_.assign(n, {});
    for (int x = 0; x < n; ++x) {
        Bitset strict_up = l.up_[x];
        strict_up.reset(x);
        for (auto y = strict_up.find_first(); y != Bitset::npos; y = strict_up.find_next(y)) {
            Bitset between = strict_up & l.down_[y];
            between.reset(y);
            if (between.none()) {
                l.upper_covers_[x].push_back(static_cast<Element>(y));
                l.lower_covers_[y].push_back(x);
            }
        }
    }

    l.atoms_ = l.upper_covers_[l.bottom_];
    l.atoms_mask_.resize(n);
    for (Element a : l.atoms_) l.atoms_mask_.set(a);

    // Longest chain from bottom, via the cover DAG in a topological order
    // (down-set size strictly increases along the order).
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> down_size(n);
    for (int x = 0; x < n; ++x) down_size[x] = l.down_[x].count();
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return down_size[a] != down_size[b] ? down_size[a] < down_size[b] : a < b; });
    std::vector<int> h(n, 0);
    for (int x : order) {
        for (Element y : l.upper_covers_[x]) h[y] = std::max(h[y], h[x] + 1);
    }
    l.height_ = h[l.top_];

    return lattice;
}

std::optional<Element> FiniteLattice::find(const std::string& label) const {
    for (int i = 0; i < n_; ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

bool FiniteLattice::covers(Element lower, Element upper) const {
    const auto& ups = upper_covers_[check(lower)];
    return std::binary_search(ups.begin(), ups.end(), check(upper));
}

std::vector<std::pair<Element, Element>> FiniteLattice::cover_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < n_; ++x) {
        for (Element y : upper_covers_[x]) out.emplace_back(x, y);
    }
    return out;
}

LatticeRef build_lattice(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw InvalidInput("a lattice needs at least one element");
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(labels[i], i).second) {
            throw InvalidInput("duplicate element label: " + labels[i]);
        }
    }
    std::vector<std::vector<int>> adj(n);
    for (const auto& [lo, hi] : covers) {
        const auto it_lo = index.find(lo);
        const auto it_hi = index.find(hi);
        if (it_lo == index.end()) throw InvalidInput("cover references unknown label: " + lo);
        if (it_hi == index.end()) throw InvalidInput("cover references unknown label: " + hi);
        if (it_lo->second == it_hi->second) {
            throw CycleDetected("cover pair relates " + lo + " to itself");
        }
        adj[it_lo->second].push_back(it_hi->second);
    }

    // Reflexive-transitive closure by DFS from each element.
    std::vector<Bitset> up(n, Bitset(static_cast<std::size_t>(n)));
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        up[s].set(s);
        stack.assign(1, s);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : adj[x]) {
                if (!up[s].test(y)) {
                    up[s].set(y);
                    stack.push_back(y);
                }
            }
        }
    }
    return FiniteLattice::from_order(labels, std::move(up));
}

Element join_many(const FiniteLattice& l, const std::vector<Element>& xs) {
    Element acc = l.bottom();
    for (Element x : xs) acc = l.join(acc, x);
    return acc;
}

ElementCheck is_atomistic(const FiniteLattice& l) {
    for (Element x = 0; x < l.size(); ++x) {
        Element acc = l.bottom();
        const Bitset below = l.atoms_below(x);
        for (auto a = below.find_first(); a != Bitset::npos; a = below.find_next(a)) {
            acc = l.join(acc, static_cast<Element>(a));
        }
        if (acc != x) return {false, x};
    }
    return {true, std::nullopt};
}

PairCheck has_atomic_cover_property(const FiniteLattice& l) {
    for (Element x = 0; x < l.size(); ++x) {
        for (Element a : l.atoms()) {
            const Element y = l.join(x, a);
            if (y != x && !l.covers(x, y)) return {false, std::make_pair(x, a)};
        }
    }
    return {true, std::nullopt};
}

ElementCheck has_graded_chains(const FiniteLattice& l) {
    const int n = l.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto da = l.down_set(a).count(), db = l.down_set(b).count();
        return da != db ? da < db : a < b;
    });
    std::vector<int> longest(n, 0), shortest(n, 0);
    std::vector<bool> reached(n, false);
    reached[l.bottom()] = true;
    for (int x : order) {
        for (Element y : l.upper_covers(x)) {
            if (!reached[y]) {
                longest[y] = longest[x] + 1;
                shortest[y] = shortest[x] + 1;
                reached[y] = true;
            } else {
                longest[y] = std::max(longest[y], longest[x] + 1);
                shortest[y] = std::min(shortest[y], shortest[x] + 1);
            }
        }
    }
    for (Element e = 0; e < n; ++e) {
        if (longest[e] != shortest[e]) return {false, e};
    }
    return {true, std::nullopt};
}

bool is_irredundant_join(const FiniteLattice& l, const std::vector<Element>& xs) {
    if (xs.empty()) throw InvalidInput("irredundancy of an empty join is undefined");
    const Element total = join_many(l, xs);
    for (std::size_t skip = 0; skip < xs.size(); ++skip) {
        Element acc = l.bottom();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i != skip) acc = l.join(acc, xs[i]);
        }
        if (acc == total) return false;
    }
    return true;
}

IntervalEmbedding interval(const FiniteLattice& l, Element lo, Element hi) {
    if (!l.leq(lo, hi)) {
        throw NotComparable("interval endpoints are not comparable: " + l.label(lo) +
                            " is not below " + l.label(hi));
    }
    std::vector<Element> members;
    std::vector<Element> from_parent(static_cast<std::size_t>(l.size()), -1);
    for (Element e = 0; e < l.size(); ++e) {
        if (l.leq(lo, e) && l.leq(e, hi)) {
            from_parent[e] = static_cast<Element>(members.size());
            members.push_back(e);
        }
    }
    const int m = static_cast<int>(members.size());
    std::vector<std::string> labels;
    labels.reserve(m);
    for (Element e : members) labels.push_back(l.label(e));
    std::vector<Bitset> up(m, Bitset(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (l.leq(members[i], members[j])) up[i].set(j);
        }
    }
    IntervalEmbedding emb;
    emb.sub = FiniteLattice::from_order(std::move(labels), std::move(up));
    emb.to_parent = std::move(members);
    emb.from_parent = std::move(from_parent);
    return emb;
}

}  // namespace jnb
