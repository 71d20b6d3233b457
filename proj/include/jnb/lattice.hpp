#pragma once

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jnb/errors.hpp"

namespace jnb {

using Element = int;
using Bitset = boost::dynamic_bitset<>;

class FiniteLattice;
using LatticeRef = std::shared_ptr<const FiniteLattice>;

// Hard cap on the number of elements; every operation here carries full
// O(n^2) tables, which is the point at desk scale.
inline constexpr int kMaxLatticeSize = 20000;

// Explicit finite bounded lattice: full order matrix, join/meet tables,
// cover relation, atoms and height.  Immutable after construction; element
// identity is the input label order, and all tie-breaking uses the lowest
// index.
class FiniteLattice {
public:
    // Builds from a full partial order; up[x] must be the up-set {y | x <= y}
    // of a reflexive, antisymmetric, transitive relation.  Verifies bounds
    // and unique least upper / greatest lower bounds for every pair.
    static LatticeRef from_order(std::vector<std::string> labels, std::vector<Bitset> up);

    int size() const { return n_; }
    const std::string& label(Element e) const { return labels_[check(e)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Element> find(const std::string& label) const;

    bool leq(Element x, Element y) const { return up_[check(x)].test(check(y)); }
    bool lt(Element x, Element y) const { return x != y && leq(x, y); }
    Element join(Element x, Element y) const { return join_[idx(check(x), check(y))]; }
    Element meet(Element x, Element y) const { return meet_[idx(check(x), check(y))]; }

    Element bottom() const { return bottom_; }
    Element top() const { return top_; }
    const std::vector<Element>& atoms() const { return atoms_; }
    bool is_atom(Element e) const { return atoms_mask_.test(check(e)); }
    int height() const { return height_; }

    const Bitset& up_set(Element x) const { return up_[check(x)]; }
    const Bitset& down_set(Element x) const { return down_[check(x)]; }
    const Bitset& atoms_mask() const { return atoms_mask_; }
    Bitset atoms_below(Element x) const { return down_[check(x)] & atoms_mask_; }

    const std::vector<Element>& upper_covers(Element x) const { return upper_covers_[check(x)]; }
    const std::vector<Element>& lower_covers(Element x) const { return lower_covers_[check(x)]; }
    bool covers(Element lower, Element upper) const;

    // All cover pairs (x, y) with y covering x, ordered by (x, y).
    std::vector<std::pair<Element, Element>> cover_pairs() const;

private:
    FiniteLattice() = default;
    std::size_t idx(Element x, Element y) const {
        return static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y);
    }
    Element check(Element e) const {
        if (e < 0 || e >= n_) throw InvalidInput("element index out of range");
        return e;
    }

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Bitset> up_, down_;
    std::vector<Element> join_, meet_;
    std::vector<std::vector<Element>> upper_covers_, lower_covers_;
    Element bottom_ = 0, top_ = 0;
    std::vector<Element> atoms_;
    Bitset atoms_mask_;
    int height_ = 0;
};

// Builds a lattice from labels and cover pairs (lower, upper).  The order is
// the reflexive-transitive closure of the pairs; a non-minimal cover list is
// accepted and reduced.
LatticeRef build_lattice(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers);

// Least upper bound of a set of elements; the empty join is the bottom.
Element join_many(const FiniteLattice& l, const std::vector<Element>& xs);

struct ElementCheck {
    bool ok = true;
    std::optional<Element> witness;
};

struct PairCheck {
    bool ok = true;
    std::optional<std::pair<Element, Element>> witness;
};

// Every element is the join of the atoms below it; the witness is the first
// element (in index order) that is not.
ElementCheck is_atomistic(const FiniteLattice& l);

// x is covered by x v a for every x and atom a with x != x v a; witness is
// the first failing (x, atom).
PairCheck has_atomic_cover_property(const FiniteLattice& l);

// All maximal chains from bottom to any fixed element have equal length;
// witness is the first element with two maximal chains of different lengths.
ElementCheck has_graded_chains(const FiniteLattice& l);

// True iff dropping any single element of xs strictly decreases the join.
bool is_irredundant_join(const FiniteLattice& l, const std::vector<Element>& xs);

// The interval [lo, hi] as a standalone lattice plus element-index maps in
// both directions (from_parent holds -1 outside the interval).
struct IntervalEmbedding {
    LatticeRef sub;
    std::vector<Element> to_parent;
    std::vector<Element> from_parent;
};

IntervalEmbedding interval(const FiniteLattice& l, Element lo, Element hi);

}  // namespace jnb
