#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jnb/join_hom.hpp"

namespace jnb::test {

// Boolean lattice on two atoms: 0 < a,b < 1.
inline LatticeRef make_b2() {
    return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// Boolean lattice on three atoms.
inline LatticeRef make_b3() {
    return build_lattice({"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                         {{"0", "a"},
                          {"0", "b"},
                          {"0", "c"},
                          {"a", "ab"},
                          {"b", "ab"},
                          {"a", "ac"},
                          {"c", "ac"},
                          {"b", "bc"},
                          {"c", "bc"},
                          {"ab", "1"},
                          {"ac", "1"},
                          {"bc", "1"}});
}

// Pentagon: 0 < a < c < 1 and 0 < b < 1.
inline LatticeRef make_n5() {
    return build_lattice({"0", "a", "b", "c", "1"},
                         {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

// Diamond with three atoms (the subspace lattice shape of a plane).
inline LatticeRef make_m3() {
    return build_lattice({"0", "x", "y", "z", "1"},
                         {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

// Four-element chain 0 < a < b < 1.
inline LatticeRef make_chain4() {
    return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}});
}

// Three-element chain 0 < A < M, the submodule-lattice shape of a length-2
// uniserial module (not atomistic).
inline LatticeRef make_chain3() {
    return build_lattice({"0", "A", "M"}, {{"0", "A"}, {"A", "M"}});
}

// Join-homomorphism from label assignments; every element must be assigned.
inline JoinHom make_hom(LatticeRef l, const std::map<std::string, std::string>& assign) {
    std::vector<Element> values(static_cast<std::size_t>(l->size()), -1);
    for (const auto& [from, to] : assign) {
        values[static_cast<std::size_t>(*l->find(from))] = *l->find(to);
    }
    return build_join_hom(std::move(l), std::move(values));
}

inline JoinHom zero_map(LatticeRef l) {
    std::vector<Element> values(static_cast<std::size_t>(l->size()), l->bottom());
    return build_join_hom(std::move(l), std::move(values));
}

// Shift map on the four-element chain: 1 -> b -> a -> 0.
inline JoinHom make_chain4_shift() {
    return make_hom(make_chain4(), {{"0", "0"}, {"a", "0"}, {"b", "a"}, {"1", "b"}});
}

}  // namespace jnb::test
