#include "jnb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jnb {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string require_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

const json& require_array(const json& j, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_array()) {
        throw ParseError("missing or non-array field \"" + key + "\"");
    }
    return *it;
}

}  // namespace

LatticeFile parse_lattice_file(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("top level: expected an object");
    LatticeFile f;
    const json& elements = require_array(j, "elements");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        f.elements.push_back(require_string(elements[i], "elements[" + std::to_string(i) + "]"));
    }
    const json& covers = require_array(j, "covers");
    for (std::size_t i = 0; i < covers.size(); ++i) {
        const json& pair = covers[i];
        const std::string where = "covers[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(where + ": expected a pair of labels");
        }
        f.covers.emplace_back(require_string(pair[0], where), require_string(pair[1], where));
    }
    if (const auto it = j.find("map"); it != j.end()) {
        if (!it->is_object()) throw ParseError("map: expected an object");
        f.has_map = true;
        for (const auto& [key, value] : it->items()) {
            f.map.emplace(key, require_string(value, "map[\"" + key + "\"]"));
        }
    }
    return f;
}

std::string write_lattice_file(const LatticeFile& f) {
    json j;
    j["elements"] = f.elements;
    json covers = json::array();
    for (const auto& [lo, hi] : f.covers) covers.push_back({lo, hi});
    j["covers"] = std::move(covers);
    if (f.has_map) {
        json map = json::object();
        for (const auto& [from, to] : f.map) map[from] = to;
        j["map"] = std::move(map);
    }
    return j.dump(2) + "\n";
}

LatticeRef lattice_from_file(const LatticeFile& f) { return build_lattice(f.elements, f.covers); }

JoinHom hom_from_file(const LatticeFile& f, LatticeRef lattice) {
    if (!f.has_map) throw InvalidInput("file carries no \"map\" object");
    const FiniteLattice& l = *lattice;
    std::vector<Element> values(static_cast<std::size_t>(l.size()), -1);
    for (const auto& [from, to] : f.map) {
        const auto src = l.find(from);
        if (!src) throw ParseError("map: unknown source label \"" + from + "\"");
        const auto dst = l.find(to);
        if (!dst) throw ParseError("map: unknown target label \"" + to + "\"");
        values[static_cast<std::size_t>(*src)] = *dst;
    }
    for (Element e = 0; e < l.size(); ++e) {
        if (values[static_cast<std::size_t>(e)] < 0) {
            throw ParseError("map: no value for element \"" + l.label(e) + "\"");
        }
    }
    return build_join_hom(std::move(lattice), std::move(values));
}

LatticeFile file_from_lattice(const FiniteLattice& l) {
    LatticeFile f;
    f.elements = l.labels();
    for (const auto& [lo, hi] : l.cover_pairs()) {
        f.covers.emplace_back(l.label(lo), l.label(hi));
    }
    return f;
}

LatticeFile file_from_model(const SubspaceLatticeModel& model, const GfMatrix* induced) {
    LatticeFile f = file_from_lattice(*model.lattice);
    if (induced != nullptr) {
        const JoinHom h = induced_join_hom(model, *induced);
        f.has_map = true;
        const FiniteLattice& l = *model.lattice;
        for (Element e = 0; e < l.size(); ++e) {
            f.map.emplace(l.label(e), l.label(h.apply(e)));
        }
    }
    return f;
}

GfMatrix parse_matrix_file(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("top level: expected an object");
    const auto prime_it = j.find("prime");
    if (prime_it == j.end() || !prime_it->is_number_unsigned()) {
        throw ParseError("missing or non-numeric field \"prime\"");
    }
    const auto n_it = j.find("n");
    if (n_it == j.end() || !n_it->is_number_unsigned()) {
        throw ParseError("missing or non-numeric field \"n\"");
    }
    const std::uint64_t prime = prime_it->get<std::uint64_t>();
    const std::uint64_t n = n_it->get<std::uint64_t>();
    if (prime > kMaxPrime) throw ParseError("prime exceeds " + std::to_string(kMaxPrime));
    if (n > 512) throw ParseError("matrix dimension exceeds 512");
    GfMatrix a(static_cast<std::uint32_t>(prime), static_cast<int>(n), static_cast<int>(n));
    const json& rows = require_array(j, "rows");
    if (rows.size() != n) throw ParseError("rows: expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const json& row = rows[i];
        const std::string where = "rows[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != n) {
            throw ParseError(where + ": expected " + std::to_string(n) + " entries");
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_number_unsigned()) {
                throw ParseError(where + "[" + std::to_string(k) + "]: expected a residue");
            }
            a(static_cast<int>(i), static_cast<int>(k)) =
                static_cast<Fp>(row[k].get<std::uint64_t>() % prime);
        }
    }
    return a;
}

std::string write_matrix_file(const GfMatrix& a) {
    json j;
    j["prime"] = a.p();
    j["n"] = a.rows();
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < a.cols(); ++k) row.push_back(a(i, k));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string write_base_file(const FiniteLattice& l, const JordanNormalBase& base) {
    json chains = json::array();
    for (const auto& chain : base.chains) {
        json one = json::array();
        for (Element e : chain) one.push_back(l.label(e));
        chains.push_back(std::move(one));
    }
    json j;
    j["chains"] = std::move(chains);
    return j.dump(2) + "\n";
}

JordanNormalBase parse_base_file(const FiniteLattice& l, const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("top level: expected an object");
    const json& chains = require_array(j, "chains");
    std::vector<std::vector<Element>> parsed;
    for (std::size_t t = 0; t < chains.size(); ++t) {
        const json& chain = chains[t];
        const std::string where = "chains[" + std::to_string(t) + "]";
        if (!chain.is_array() || chain.empty()) {
            throw ParseError(where + ": expected a nonempty list of labels");
        }
        std::vector<Element> one;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const std::string label =
                require_string(chain[i], where + "[" + std::to_string(i) + "]");
            const auto e = l.find(label);
            if (!e) throw ParseError(where + ": unknown label \"" + label + "\"");
            one.push_back(*e);
        }
        parsed.push_back(std::move(one));
    }
    return make_base(l, std::move(parsed), /*canonicalize=*/false);
}

std::string write_chain_basis_file(const JordanChainBasis& basis) {
    json chains = json::array();
    for (const auto& chain : basis.chains) {
        json one = json::array();
        for (const Vec& v : chain) one.push_back(v);
        chains.push_back(std::move(one));
    }
    json j;
    j["prime"] = basis.p;
    j["chains"] = std::move(chains);
    return j.dump(2) + "\n";
}

JordanChainBasis parse_chain_basis_file(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("top level: expected an object");
    const auto prime_it = j.find("prime");
    if (prime_it == j.end() || !prime_it->is_number_unsigned()) {
        throw ParseError("missing or non-numeric field \"prime\"");
    }
    JordanChainBasis basis;
    basis.p = static_cast<std::uint32_t>(prime_it->get<std::uint64_t>());
    const json& chains = require_array(j, "chains");
    int ambient = -1;
    for (std::size_t t = 0; t < chains.size(); ++t) {
        const json& chain = chains[t];
        const std::string where = "chains[" + std::to_string(t) + "]";
        if (!chain.is_array() || chain.empty()) {
            throw ParseError(where + ": expected a nonempty list of vectors");
        }
        std::vector<Vec> one;
        for (const json& vec : chain) {
            if (!vec.is_array()) throw ParseError(where + ": expected residue lists");
            Vec v;
            for (const json& entry : vec) {
                if (!entry.is_number_unsigned()) throw ParseError(where + ": expected residues");
                v.push_back(static_cast<Fp>(entry.get<std::uint64_t>() % basis.p));
            }
            if (ambient < 0) ambient = static_cast<int>(v.size());
            if (static_cast<int>(v.size()) != ambient) {
                throw ParseError(where + ": ragged vector lengths");
            }
            one.push_back(std::move(v));
        }
        basis.chains.push_back(std::move(one));
    }
    basis.ambient_dim = std::max(ambient, 0);
    return basis;
}

std::string dot_hasse(const FiniteLattice& l) {
    std::ostringstream out;
    out << "digraph lattice {\n";
    out << "  rankdir=BT;\n";
    for (Element e = 0; e < l.size(); ++e) {
        out << "  \"" << l.label(e) << "\";\n";
    }
    for (const auto& [lo, hi] : l.cover_pairs()) {
        out << "  \"" << l.label(lo) << "\" -> \"" << l.label(hi) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
    if (!out) throw InvalidInput("write failed: " + path);
}

}  // namespace jnb
