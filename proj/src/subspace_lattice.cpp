#include "jnb/subspace_lattice.hpp"

#include <algorithm>

namespace jnb {

namespace {

constexpr std::uint64_t kCountSaturated = std::uint64_t{1} << 63;

// Saturating helpers for the count guard.
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kCountSaturated / a) return kCountSaturated;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

}  // namespace

std::uint64_t subspace_count(std::uint32_t p, int n) {
    if (n < 0) throw InvalidInput("negative dimension");
    // [n choose d]_p via the stepwise product; every partial product is
    // itself a Gaussian binomial, so the divisions are exact.  Saturation at
    // 2^31 keeps g * num inside 64 bits; any saturated intermediate already
    // dwarfs the lattice cap.
    constexpr std::uint64_t kBig = std::uint64_t{1} << 31;
    std::uint64_t total = 0;
    for (int d = 0; d <= n; ++d) {
        std::uint64_t g = 1;
        for (int i = 0; i < d; ++i) {
            const std::uint64_t num = sat_pow(p, n - i) - 1;
            const std::uint64_t den = sat_pow(p, i + 1) - 1;
            if (num >= kBig || g >= kBig) return kCountSaturated;
            g = g * num / den;
        }
        if (g >= kBig) return kCountSaturated;
        total += g;
        if (total >= kBig) return kCountSaturated;
    }
    return total;
}

SubspaceLatticeModel enumerate_subspace_lattice(std::uint32_t p, int n) {
    if (!is_prime(p) || p > kMaxPrime) {
        throw InvalidInput("modulus must be a prime <= " + std::to_string(kMaxPrime));
    }
    if (n < 1) throw InvalidInput("dimension must be at least 1");
    const std::uint64_t count = subspace_count(p, n);
    if (count > static_cast<std::uint64_t>(kMaxLatticeSize)) {
        const std::string shown =
            count == kCountSaturated ? "more than 2^63" : std::to_string(count);
        throw TooLarge("subspace lattice of GF(" + std::to_string(p) + ")^" + std::to_string(n) +
                       " has " + shown + " elements (cap " + std::to_string(kMaxLatticeSize) +
                       ")");
    }

    // Enumerate echelon forms per pivot-column profile: the pivot block is
    // forced, every position right of a pivot and outside pivot columns is
    // free.
    std::vector<Subspace> elements;
    elements.push_back(Subspace::zero(p, n));
    std::vector<int> pivots;
    auto emit_profile = [&]() {
        const int d = static_cast<int>(pivots.size());
        std::vector<std::pair<int, int>> free_pos;  // (row, col), row-major
        for (int i = 0; i < d; ++i) {
            for (int j = pivots[i] + 1; j < n; ++j) {
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) {
                    free_pos.emplace_back(i, j);
                }
            }
        }
        GfMatrix m(p, d, n);
        for (int i = 0; i < d; ++i) m(i, pivots[i]) = 1;
        std::vector<Fp> digits(free_pos.size(), 0);
        while (true) {
            for (std::size_t k = 0; k < free_pos.size(); ++k) {
                m(free_pos[k].first, free_pos[k].second) = digits[k];
            }
            elements.push_back(Subspace::span_of_rows(m));
            // Next free-entry assignment, last position fastest.
            std::size_t k = free_pos.size();
            while (k > 0) {
                if (++digits[k - 1] < p) break;
                digits[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    };
    auto choose = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            emit_profile();
            return;
        }
        for (int c = next; c + remaining <= n; ++c) {
            pivots.push_back(c);
            self(self, c + 1, remaining - 1);
            pivots.pop_back();
        }
    };
    for (int d = 1; d <= n; ++d) choose(choose, 0, d);

    if (elements.size() != count) throw Error("internal: enumeration misses the binomial count");
    std::sort(elements.begin(), elements.end(), subspace_order_less);

    const int m = static_cast<int>(elements.size());
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const Subspace& s : elements) labels.push_back(subspace_label(s));
    std::vector<Bitset> up(m, Bitset(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (elements[i].dim() <= elements[j].dim() && elements[j].contains(elements[i])) {
                up[i].set(j);
            }
        }
    }

    SubspaceLatticeModel model;
    model.lattice = FiniteLattice::from_order(std::move(labels), std::move(up));
    model.elements = std::move(elements);
    model.p = p;
    model.dim = n;
    return model;
}

Element SubspaceLatticeModel::index_of(const Subspace& s) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), s, subspace_order_less);
    if (it == elements.end() || !(*it == s)) {
        throw InvalidInput("subspace is not an element of the model");
    }
    return static_cast<Element>(it - elements.begin());
}

std::string subspace_label(const Subspace& s) {
    if (s.dim() == 0) return "0";
    std::string out;
    for (int i = 0; i < s.dim(); ++i) {
        if (i > 0) out += ';';
        for (int j = 0; j < s.ambient_dim(); ++j) {
            if (j > 0 && s.p() > 10) out += ',';
            out += std::to_string(s.basis()(i, j));
        }
    }
    return out;
}

JoinHom induced_join_hom(const SubspaceLatticeModel& model, const GfMatrix& a) {
    if (!a.is_square() || a.rows() != model.dim || a.p() != model.p) {
        throw DimensionMismatch("matrix does not act on GF(" + std::to_string(model.p) + ")^" +
                                std::to_string(model.dim));
    }
    std::vector<Element> values;
    values.reserve(model.elements.size());
    for (const Subspace& s : model.elements) {
        values.push_back(model.index_of(image_of_subspace(a, s)));
    }
    return build_join_hom(model.lattice, std::move(values));
}

CrossValidationReport cross_validate(const SubspaceLatticeModel& model, const GfMatrix& a) {
    if (!matrix_nilpotency_index(a)) throw NotNilpotent("matrix is not nilpotent");
    const FiniteLattice& l = *model.lattice;
    CrossValidationReport report;
    auto leg = [&report](const std::string& name, bool ok, std::string detail) {
        report.legs.push_back({name, ok, std::move(detail)});
        report.ok = report.ok && ok;
    };

    const JoinHom h = induced_join_hom(model, a);

    // (1) base-existence conditions on the induced pair.
    const ConditionReport conditions = check_jnb_conditions(h);
    {
        std::string detail;
        if (!conditions.jnb1.ok) detail = "jnb1 fails at " + l.label(*conditions.jnb1.witness);
        if (!conditions.jnb2.ok) {
            detail += (detail.empty() ? "" : "; ") + std::string("jnb2 fails at (") +
                      l.label(conditions.jnb2.witness->first) + ", " +
                      l.label(conditions.jnb2.witness->second) + ")";
        }
        if (!conditions.jnb3.ok) {
            detail += (detail.empty() ? "" : "; ") + std::string("jnb3 fails at (") +
                      l.label(conditions.jnb3.witness->first) + ", " +
                      l.label(conditions.jnb3.witness->second) + ")";
        }
        leg("jnb-conditions", conditions.all_ok(), detail);
    }

    // (2) abstract base on the lattice.
    JordanNormalBase abstract_base;
    try {
        abstract_base = compute_jnb(h, /*skip_condition_checks=*/true);
        leg("abstract-base", true, "");
    } catch (const Error& e) {
        leg("abstract-base", false, e.what());
    }

    // (3) concrete chain basis.
    JordanChainBasis chain_basis;
    bool chains_ok = false;
    try {
        chain_basis = compute_jordan_chains(a);
        const VerifyResult v = verify_chain_basis(a, chain_basis);
        chains_ok = v.ok;
        leg("vector-chains", v.ok, v.detail);
    } catch (const Error& e) {
        leg("vector-chains", false, e.what());
    }

    // (4) both partitions against the kernel-dimension oracle.
    const std::vector<int> oracle = block_partition_oracle(a);
    report.partition = oracle;
    {
        const bool agree =
            abstract_base.lengths() == oracle && chain_basis.lengths() == oracle;
        leg("partition-agreement", agree,
            agree ? "" : "chain-length multisets disagree with the oracle");
    }

    // (5) spans of the chain vectors are atoms and form a valid base.
    if (chains_ok) {
        bool span_ok = true;
        std::string detail;
        std::vector<std::vector<Element>> span_chains;
        for (const auto& chain : chain_basis.chains) {
            std::vector<Element> lattice_chain;
            for (const Vec& v : chain) {
                const Subspace span = Subspace::span_of(model.p, model.dim, {v});
                const Element e = model.index_of(span);
                if (!l.is_atom(e)) {
                    span_ok = false;
                    detail = "span " + l.label(e) + " is not an atom";
                    break;
                }
                lattice_chain.push_back(e);
            }
            if (!span_ok) break;
            span_chains.push_back(std::move(lattice_chain));
        }
        if (span_ok) {
            const JordanNormalBase span_base =
                make_base(l, std::move(span_chains), /*canonicalize=*/true);
            const VerifyResult v = verify_jnb(h, span_base);
            span_ok = v.ok;
            detail = v.detail;
        }
        leg("span-correspondence", span_ok, detail);
    } else {
        leg("span-correspondence", false, "skipped: chain basis unavailable");
    }

    // (6) direct-sum certificate for the abstract base.
    try {
        const bool direct = base_is_direct_sum(l, abstract_base);
        leg("irredundant-join", direct, direct ? "" : "flattened base join is redundant");
    } catch (const Error& e) {
        leg("irredundant-join", false, e.what());
    }

    return report;
}

CrossValidationReport cross_validate(std::uint32_t p, int n, const GfMatrix& a) {
    return cross_validate(enumerate_subspace_lattice(p, n), a);
}

}  // namespace jnb
