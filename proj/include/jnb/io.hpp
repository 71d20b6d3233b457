#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jnb/jordan_base.hpp"
#include "jnb/jordan_chains.hpp"
#include "jnb/subspace_lattice.hpp"

namespace jnb {

// Textual lattice description: {"elements": [...], "covers": [[lo, hi], ...]}
// plus an optional "map" object from element label to element label.
struct LatticeFile {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    std::map<std::string, std::string> map;
    bool has_map = false;
};

LatticeFile parse_lattice_file(const std::string& text);
std::string write_lattice_file(const LatticeFile& f);

LatticeRef lattice_from_file(const LatticeFile& f);
JoinHom hom_from_file(const LatticeFile& f, LatticeRef lattice);

LatticeFile file_from_lattice(const FiniteLattice& l);
LatticeFile file_from_model(const SubspaceLatticeModel& model, const GfMatrix* induced);

// Matrix files: {"prime": p, "n": n, "rows": [[...], ...]}.
GfMatrix parse_matrix_file(const std::string& text);
std::string write_matrix_file(const GfMatrix& a);

// Base files: {"chains": [[label, ...], ...]}; chain order is preserved
// verbatim on parse so verification sees exactly what the file says.
std::string write_base_file(const FiniteLattice& l, const JordanNormalBase& base);
JordanNormalBase parse_base_file(const FiniteLattice& l, const std::string& text);

// Chain-basis files: {"prime": p, "chains": [[vector, ...], ...]}.
std::string write_chain_basis_file(const JordanChainBasis& basis);
JordanChainBasis parse_chain_basis_file(const std::string& text);

// Hasse diagram of the cover relation, bottom-to-top layout.
std::string dot_hasse(const FiniteLattice& l);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace jnb
