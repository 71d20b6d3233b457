#include "jnb/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jnb/generators.hpp"
#include "jnb/io.hpp"

namespace jnb {

namespace {

std::string format_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string matrix_encoding(const GfMatrix& a) {
    std::string s;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (a.p() > 10 && !s.empty()) s += ',';
            s += std::to_string(a(i, j));
        }
    }
    return s;
}

GfMatrix matrix_from_index(std::uint64_t index, std::uint32_t p, int n) {
    GfMatrix a(p, n, n);
    for (int cell = n * n - 1; cell >= 0; --cell) {
        a(cell / n, cell % n) = static_cast<Fp>(index % p);
        index /= p;
    }
    return a;
}

void print_element_check(std::ostream& out, const FiniteLattice& l, const std::string& name,
                         const ElementCheck& check) {
    if (check.ok) {
        out << name << ": ok\n";
    } else {
        out << name << ": FAIL (witness: " << l.label(*check.witness) << ")\n";
    }
}

void print_pair_check(std::ostream& out, const FiniteLattice& l, const std::string& name,
                      const PairCheck& check) {
    if (check.ok) {
        out << name << ": ok\n";
    } else {
        out << name << ": FAIL (witness: " << l.label(check.witness->first) << ", "
            << l.label(check.witness->second) << ")\n";
    }
}

int cmd_lattice_check(const std::string& path, const std::string& dot_path, std::ostream& out) {
    const LatticeFile f = parse_lattice_file(read_text_file(path));
    LatticeRef l = lattice_from_file(f);
    if (!dot_path.empty()) write_text_file(dot_path, dot_hasse(*l));
    const ElementCheck jnb1 = check_jnb1(*l);
    print_element_check(out, *l, "jnb1", jnb1);
    bool all = jnb1.ok;
    if (f.has_map) {
        const JoinHom h = hom_from_file(f, l);
        const PairCheck jnb2 = check_jnb2(h);
        const PairCheck jnb3 = check_jnb3(h);
        print_pair_check(out, *l, "jnb2", jnb2);
        print_pair_check(out, *l, "jnb3", jnb3);
        all = all && jnb2.ok && jnb3.ok;
    } else {
        out << "jnb2: skipped (no map)\n";
        out << "jnb3: skipped (no map)\n";
    }
    return all ? 0 : 1;
}

int cmd_lattice_solve(const std::string& path, const std::string& out_path, bool force,
                      std::ostream& out) {
    const LatticeFile f = parse_lattice_file(read_text_file(path));
    LatticeRef l = lattice_from_file(f);
    const JoinHom h = hom_from_file(f, l);
    const JordanNormalBase base = compute_jnb(h, force);
    out << "nilpotency index: " << *h.nilpotency_index() << "\n";
    out << "chain lengths: " << format_ints(base.lengths()) << "\n";
    for (std::size_t t = 0; t < base.chains.size(); ++t) {
        out << "chain " << (t + 1) << ":";
        for (std::size_t i = 0; i < base.chains[t].size(); ++i) {
            out << (i == 0 ? " " : " <- ") << l->label(base.chains[t][i]);
        }
        out << "\n";
    }
    const std::string text = write_base_file(*l, base);
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(out_path, text);
    }
    return 0;
}

int cmd_lattice_verify(const std::string& path, const std::string& base_path, std::ostream& out) {
    const LatticeFile f = parse_lattice_file(read_text_file(path));
    LatticeRef l = lattice_from_file(f);
    const JoinHom h = hom_from_file(f, l);
    const JordanNormalBase base = parse_base_file(*l, read_text_file(base_path));
    const VerifyResult v = verify_jnb(h, base);
    if (v.ok) {
        out << "verification: ok\n";
        return 0;
    }
    out << "verification: FAIL (" << v.detail << ")\n";
    return 1;
}

int cmd_matrix_chains(const std::string& path, const std::string& out_path, std::ostream& out) {
    const GfMatrix a = parse_matrix_file(read_text_file(path));
    const JordanChainBasis basis = compute_jordan_chains(a);
    const VerifyResult v = verify_chain_basis(a, basis);
    out << "partition: " << format_ints(basis.lengths()) << "\n";
    out << "verification: " << (v.ok ? "ok" : "FAIL (" + v.detail + ")") << "\n";
    const std::string text = write_chain_basis_file(basis);
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(out_path, text);
    }
    return v.ok ? 0 : 1;
}

int cmd_matrix_oracle(const std::string& path, std::ostream& out) {
    const GfMatrix a = parse_matrix_file(read_text_file(path));
    out << "partition: " << format_ints(block_partition_oracle(a)) << "\n";
    return 0;
}

struct CrosscheckParams {
    std::uint32_t prime = 2;
    int dim = 1;
    std::string matrix_path;
    bool exhaustive = false;
    int random_count = 0;
    std::uint64_t seed = 0;
};

int cmd_crosscheck(const CrosscheckParams& params, std::ostream& out) {
    const SubspaceLatticeModel model = enumerate_subspace_lattice(params.prime, params.dim);

    std::vector<GfMatrix> matrices;
    std::uint64_t scanned = 0;
    if (!params.matrix_path.empty()) {
        GfMatrix a = parse_matrix_file(read_text_file(params.matrix_path));
        if (a.p() != params.prime || a.rows() != params.dim) {
            throw DimensionMismatch("matrix file disagrees with --prime/--dim");
        }
        if (!matrix_nilpotency_index(a)) throw NotNilpotent("matrix is not nilpotent");
        matrices.push_back(std::move(a));
        scanned = 1;
    } else if (params.exhaustive) {
        const int cells = params.dim * params.dim;
        std::uint64_t total = 1;
        for (int i = 0; i < cells; ++i) {
            total *= params.prime;
            if (total > (std::uint64_t{1} << 20)) {
                throw TooLarge("exhaustive sweep over " + std::to_string(params.prime) + "^" +
                               std::to_string(cells) + " matrices exceeds the 2^20 guard");
            }
        }
        scanned = total;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            GfMatrix a = matrix_from_index(idx, params.prime, params.dim);
            if (matrix_nilpotency_index(a)) matrices.push_back(std::move(a));
        }
    } else {
        Rng rng(params.seed);
        for (int i = 0; i < params.random_count; ++i) {
            matrices.push_back(gen_nilpotent_matrix(params.prime, params.dim, rng));
        }
        scanned = matrices.size();
        std::sort(matrices.begin(), matrices.end(), [](const GfMatrix& a, const GfMatrix& b) {
            return matrix_encoding(a) < matrix_encoding(b);
        });
    }

    int failures = 0;
    for (const GfMatrix& a : matrices) {
        const CrossValidationReport report = cross_validate(model, a);
        if (report.ok) {
            out << "matrix " << matrix_encoding(a) << ": ok (partition "
                << format_ints(report.partition) << ")\n";
        } else {
            ++failures;
            out << "matrix " << matrix_encoding(a) << ": FAIL";
            for (const auto& leg : report.legs) {
                if (!leg.ok) out << " [" << leg.name << ": " << leg.detail << "]";
            }
            out << "\n";
        }
    }
    if (failures == 0) {
        out << "all " << matrices.size() << " nilpotent matrices passed (" << scanned
            << " scanned, p=" << params.prime << ", n=" << params.dim << ")\n";
        return 0;
    }
    out << failures << " of " << matrices.size() << " matrices failed\n";
    return 1;
}

struct GenParams {
    std::string kind;
    int dim = 0;
    int length = 0;
    std::uint32_t prime = 2;
    std::uint64_t seed = 0;
    std::string partition;
    std::string matrix_path;
    std::string out_path;
};

std::vector<int> parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidInput("bad partition entry: " + item);
        }
    }
    if (parts.empty()) throw InvalidInput("empty partition");
    return parts;
}

int cmd_gen(const GenParams& params) {
    std::string text;
    if (params.kind == "boolean") {
        text = write_lattice_file(gen_boolean_lattice(params.dim));
    } else if (params.kind == "chain") {
        text = write_lattice_file(gen_chain_lattice(params.length));
    } else if (params.kind == "subspace-lattice") {
        const SubspaceLatticeModel model = enumerate_subspace_lattice(params.prime, params.dim);
        if (params.matrix_path.empty()) {
            text = write_lattice_file(file_from_model(model, nullptr));
        } else {
            const GfMatrix a = parse_matrix_file(read_text_file(params.matrix_path));
            text = write_lattice_file(file_from_model(model, &a));
        }
    } else if (params.kind == "nilpotent-matrix") {
        text = write_matrix_file(gen_nilpotent_matrix(params.prime, params.dim, params.seed));
    } else if (params.kind == "canonical-blocks") {
        text = write_matrix_file(gen_canonical_blocks(params.prime, parse_partition(params.partition)));
    } else {
        throw InvalidInput("unknown fixture kind: " + params.kind);
    }
    write_text_file(params.out_path, text);
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jordan normal bases of finite lattices and nilpotent matrices over GF(p)"};
    app.require_subcommand(1);

    std::string in_path, base_path, out_path, dot_path;
    bool force = false;

    CLI::App* check = app.add_subcommand("lattice-check", "check the base-existence conditions");
    check->add_option("file", in_path, "lattice file (optional \"map\")")->required();
    check->add_option("--emit-dot", dot_path, "write the Hasse diagram to this path");

    CLI::App* solve = app.add_subcommand("lattice-solve", "compute a Jordan normal base");
    solve->add_option("file", in_path, "lattice file with \"map\"")->required();
    solve->add_option("-o,--output", out_path, "write the base file here (default: stdout)");
    solve->add_flag("--force", force, "skip the condition checks");

    CLI::App* verify = app.add_subcommand("lattice-verify", "verify a base file");
    verify->add_option("file", in_path, "lattice file with \"map\"")->required();
    verify->add_option("base", base_path, "base file to verify")->required();

    CLI::App* chains = app.add_subcommand("matrix-chains", "compute Jordan chains of a matrix");
    chains->add_option("file", in_path, "matrix file")->required();
    chains->add_option("-o,--output", out_path, "write the chain file here (default: stdout)");

    CLI::App* oracle = app.add_subcommand("matrix-oracle", "kernel-dimension block partition");
    oracle->add_option("file", in_path, "matrix file")->required();

    CrosscheckParams cc;
    CLI::App* crosscheck = app.add_subcommand("crosscheck", "cross-validate the two engines");
    crosscheck->add_option("--prime", cc.prime, "field characteristic")->required();
    crosscheck->add_option("--dim", cc.dim, "ambient dimension")->required();
    auto* cc_matrix = crosscheck->add_option("--matrix", cc.matrix_path, "single matrix file");
    auto* cc_exhaustive =
        crosscheck->add_flag("--exhaustive", cc.exhaustive, "sweep all nilpotent matrices");
    auto* cc_random =
        crosscheck->add_option("--random", cc.random_count, "number of random matrices");
    crosscheck->add_option("--seed", cc.seed, "seed for --random");
    cc_matrix->excludes(cc_exhaustive)->excludes(cc_random);
    cc_exhaustive->excludes(cc_random);

    GenParams gp;
    CLI::App* gen = app.add_subcommand("gen", "write a deterministic fixture file");
    gen->add_option("kind", gp.kind,
                    "boolean | chain | subspace-lattice | nilpotent-matrix | canonical-blocks")
        ->required();
    gen->add_option("--dim", gp.dim, "dimension (boolean, subspace-lattice, nilpotent-matrix)");
    gen->add_option("--length", gp.length, "chain length");
    gen->add_option("--prime", gp.prime, "field characteristic");
    gen->add_option("--seed", gp.seed, "generator seed");
    gen->add_option("--partition", gp.partition, "comma-separated block sizes");
    gen->add_option("--matrix", gp.matrix_path, "matrix file for the induced map");
    gen->add_option("-o,--output", gp.out_path, "output path")->required();

    std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_lattice_check(in_path, dot_path, out);
        if (app.got_subcommand(solve)) return cmd_lattice_solve(in_path, out_path, force, out);
        if (app.got_subcommand(verify)) return cmd_lattice_verify(in_path, base_path, out);
        if (app.got_subcommand(chains)) return cmd_matrix_chains(in_path, out_path, out);
        if (app.got_subcommand(oracle)) return cmd_matrix_oracle(in_path, out);
        if (app.got_subcommand(crosscheck)) {
            if (cc.matrix_path.empty() && !cc.exhaustive && cc.random_count <= 0) {
                throw InvalidInput("crosscheck needs --matrix, --exhaustive or --random N");
            }
            return cmd_crosscheck(cc, out);
        }
        if (app.got_subcommand(gen)) return cmd_gen(gp);
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace jnb
