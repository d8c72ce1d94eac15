// skewhad: construct, verify and search skew-Hadamard matrices built from
// cyclic supplementary difference sets via the Goethals-Seidel array.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "skewhad/datasets.hpp"
#include "skewhad/equivalence.hpp"
#include "skewhad/matrix_io.hpp"
#include "skewhad/reference.hpp"
#include "skewhad/search.hpp"
#include "skewhad/sds_io.hpp"

using namespace skewhad;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

// "-" means stdin/stdout
std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
    auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw ParseError("cannot open '" + path + "'");
    return file;
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
    if (path == "-") return std::make_unique<std::ostream>(std::cout.rdbuf());
    auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file) throw ParseError("cannot open '" + path + "' for writing");
    return file;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::vector<int> out;
    int value;
    while (in >> value) out.push_back(value);
    if (!in.eof()) throw ParseError(std::string("bad ") + what + ": '" + text + "'");
    return out;
}

// a block argument is a filename, "-", or an inline list like "1,2,4"
Block read_block_arg(int n, const std::string& arg) {
    std::string payload;
    if (arg == "-" || std::ifstream(arg).good()) {
        std::unique_ptr<std::istream> in = open_input(arg);
        std::ostringstream buf;
        buf << in->rdbuf();
        payload = buf.str();
        std::size_t pos;
        while ((pos = payload.find('#')) != std::string::npos) {
            std::size_t eol = payload.find('\n', pos);
            payload.erase(pos, eol == std::string::npos ? std::string::npos
                                                        : eol - pos);
        }
    } else {
        payload = arg;
    }
    return Block::of(n, parse_int_list(payload, "block"));
}

OrbitOrder parse_order(const std::string& name) {
    if (name == "ascending") return OrbitOrder::ascending;
    if (name == "units-first") return OrbitOrder::units_first;
    throw ParseError("unknown indexing rule '" + name + "'");
}

std::string parameter_string(const SdsQuadruple& q) {
    std::array<int, 4> k = q.cardinals();
    std::ostringstream out;
    out << "4-(" << q.v << ';' << k[0] << ',' << k[1] << ',' << k[2] << ','
        << k[3] << ';' << q.lambda << ')';
    return out.str();
}

int cmd_orbits(int n, int gen, const std::string& order_name) {
    OrbitIndexing idx =
        paired_indexing(n, Subgroup::cyclic(n, gen), parse_order(order_name));
    std::cout << "n=" << n << " gen=" << gen << " |H|=" << idx.subgroup.order()
              << " nonzero_orbits=" << idx.orbit_count()
              << " pairs=" << idx.pair_count() << " indexing=" << order_name
              << '\n';
    for (int i = 0; i < idx.orbit_count(); ++i) {
        std::cout << "alpha_" << i << " =";
        for (int e : idx.orbit(i)) std::cout << ' ' << e;
        std::cout << '\n';
    }
    return kExitPass;
}

int cmd_expand(const std::string& path) {
    std::unique_ptr<std::istream> in = open_input(path);
    SdsDocument doc = read_sds(*in);
    write_sds(std::cout, expand_document(doc));
    return kExitPass;
}

int cmd_verify(const std::string& path) {
    std::unique_ptr<std::istream> in = open_input(path);
    SdsDocument doc = read_sds(*in);
    SdsQuadruple q = resolve(doc);

    VerificationReport report = verify_sds(q);
    ParameterReport identities = parameter_identities(q);
    bool skew = is_skew_type(q.blocks[0]);

    std::cout << parameter_string(q) << '\n';
    if (report.pass) {
        std::cout << "difference counts: constant " << q.lambda << ": pass\n";
    } else {
        std::cout << "difference counts: residue "
                  << report.first_offending_residue << " occurs "
                  << report.observed_count << " times, expected " << q.lambda
                  << ": FAIL\n";
    }
    std::cout << "counting identity sum k(k-1) = lambda(v-1): "
              << (identities.counting_identity ? "pass" : "FAIL") << '\n';
    std::cout << "lambda relation lambda = sum k - v: "
              << (identities.lambda_relation ? "pass" : "FAIL") << '\n';
    std::cout << "sum of squares: " << 4 * q.v << " =";
    for (int i = 0; i < 4; ++i) {
        int r = identities.residuals[static_cast<std::size_t>(i)];
        std::cout << (i ? " + " : " ") << (r < 0 ? -r : r) << "^2";
    }
    std::cout << ": " << (identities.sum_of_squares ? "pass" : "FAIL") << '\n';
    std::cout << "block 1 skew type: " << (skew ? "yes" : "no");
    if (doc.skew_flag && !skew) std::cout << " (asserted in file: FAIL)";
    std::cout << '\n';

    bool all = report.pass && identities.counting_identity &&
               identities.lambda_relation && identities.sum_of_squares &&
               (!doc.skew_flag || skew);
    std::cout << "verdict: " << (all ? "pass" : "FAIL") << '\n';
    return all ? kExitPass : kExitVerifyFail;
}

int cmd_build(const std::string& path, const std::string& out_path,
              const std::string& format) {
    std::unique_ptr<std::istream> in = open_input(path);
    SdsQuadruple q = resolve(read_sds(*in));
    SignMatrix g = goethals_seidel(
        circulant(encode(q.blocks[0])), circulant(encode(q.blocks[1])),
        circulant(encode(q.blocks[2])), circulant(encode(q.blocks[3])));
    std::unique_ptr<std::ostream> out = open_output(out_path);
    if (format == "text")
        write_matrix_text(*out, g);
    else if (format == "bin")
        write_matrix_binary(*out, g);
    else
        throw ParseError("unknown format '" + format + "'");
    return kExitPass;
}

int cmd_check_matrix(const std::string& path, bool hadamard_only) {
    std::unique_ptr<std::istream> in = open_input(path);
    SignMatrix m = read_matrix_auto(*in);
    bool hadamard = verify_hadamard(m);
    bool skew = verify_skew(m);
    std::cout << "hadamard: " << (hadamard ? "yes" : "no") << ", skew: "
              << (skew ? "yes" : "no") << ", order " << m.order() << '\n';
    bool pass = hadamard && (hadamard_only || skew);
    return pass ? kExitPass : kExitVerifyFail;
}

int cmd_equiv(int n, const std::string& arg_a, const std::string& arg_b) {
    Block a = read_block_arg(n, arg_a);
    Block b = read_block_arg(n, arg_b);
    std::optional<AffineMap> map = find_equivalence(a, b);
    if (map) {
        std::cout << "m=" << map->multiplier << " t=" << map->translation
                  << '\n';
        return kExitPass;
    }
    std::cout << "none\n";
    return kExitVerifyFail;
}

int cmd_search(const SearchConfig& cfg, bool progress) {
    ProgressFn log;
    if (progress)
        log = [](int restart, long long step, long long obj) {
            std::cerr << "restart=" << restart << " step=" << step
                      << " obj=" << obj << '\n';
        };
    std::vector<SearchResult> results = run_search(cfg, log);
    if (results.empty()) {
        std::cerr << "no verified result within the configured budget\n";
        return kExitVerifyFail;
    }
    Subgroup h = Subgroup::cyclic(cfg.v, cfg.subgroup_generator);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const SearchResult& r = results[i];
        std::cout << "# result " << i << ": restart=" << r.restart
                  << " steps=" << r.steps << ' '
                  << parameter_string(r.quadruple) << '\n';
        SdsDocument doc;
        doc.v = cfg.v;
        doc.lambda = r.quadruple.lambda;
        doc.subgroup = h.elements;
        doc.orbit_order = cfg.orbit_order;
        for (int b = 0; b < 4; ++b) {
            doc.entries[static_cast<std::size_t>(b)].orbit_form = true;
            doc.entries[static_cast<std::size_t>(b)].values =
                r.index_sets[static_cast<std::size_t>(b)];
        }
        doc.skew_flag = cfg.skew_first_block;
        write_sds(std::cout, doc);
    }
    return kExitPass;
}

int cmd_paper(const std::string& case_id, bool explicit_form) {
    const ReferenceCase* c = find_case(case_id);
    if (!c) throw ParseError("unknown case '" + case_id + "' (have 109A, 109B, 145A, 145B, 247A, 247B)");
    std::cout << "# " << c->id << ": 4-(" << c->v << ';' << c->cardinals[0]
              << ',' << c->cardinals[1] << ',' << c->cardinals[2] << ','
              << c->cardinals[3] << ';' << c->lambda << ")\n";
    write_sds(std::cout, to_sds_document(*c, !explicit_form));
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew-Hadamard matrices from cyclic difference families"};
    app.require_subcommand(1);

    // orbits
    auto* orbits = app.add_subcommand("orbits", "print the paired orbit table");
    int orbits_n = 0, orbits_gen = 1;
    std::string orbits_order = "ascending";
    orbits->add_option("--n", orbits_n, "modulus")->required();
    orbits->add_option("--gen", orbits_gen, "subgroup generator")->required();
    orbits->add_option("--indexing", orbits_order,
                       "ascending | units-first (default ascending)");

    // expand
    auto* expand_cmd =
        app.add_subcommand("expand", "resolve orbit form to explicit blocks");
    std::string expand_in = "-";
    expand_cmd->add_option("file", expand_in, "SDS file ('-' = stdin)");

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "check the SDS property, parameter identities and skewness");
    std::string verify_in = "-";
    verify_cmd->add_option("file", verify_in, "SDS file ('-' = stdin)");

    // build
    auto* build_cmd =
        app.add_subcommand("build", "assemble the Goethals-Seidel matrix");
    std::string build_in = "-", build_out = "-", build_format = "text";
    build_cmd->add_option("file", build_in, "SDS file ('-' = stdin)");
    build_cmd->add_option("-o,--output", build_out, "output file ('-' = stdout)");
    build_cmd->add_option("--format", build_format, "text | bin (default text)");

    // check-matrix
    auto* check_cmd = app.add_subcommand(
        "check-matrix", "verify the Hadamard and skew properties");
    std::string check_in = "-";
    bool hadamard_only = false;
    check_cmd->add_option("file", check_in, "matrix file ('-' = stdin)");
    check_cmd->add_flag("--hadamard-only", hadamard_only,
                        "do not require skewness for exit code 0");

    // equiv
    auto* equiv_cmd = app.add_subcommand(
        "equiv", "search all affine maps x -> m*x + t between two blocks");
    int equiv_n = 0;
    std::string equiv_a, equiv_b;
    equiv_cmd->add_option("--n", equiv_n, "modulus")->required();
    equiv_cmd->add_option("blockA", equiv_a, "file, '-', or inline list")->required();
    equiv_cmd->add_option("blockB", equiv_b, "file, '-', or inline list")->required();

    // search
    auto* search_cmd =
        app.add_subcommand("search", "hunt for SDS over unions of H-orbits");
    SearchConfig cfg;
    std::string cardinals_text, search_order = "ascending";
    bool no_skew = false, progress = false, run_all = false;
    search_cmd->add_option("--v", cfg.v, "modulus")->required();
    search_cmd->add_option("--gen", cfg.subgroup_generator,
                           "subgroup generator (default 1)");
    search_cmd->add_option("--seed", cfg.seed, "RNG seed (default 0)");
    search_cmd->add_option("--restarts", cfg.max_restarts,
                           "restart budget (default 64)");
    search_cmd->add_option("--steps", cfg.max_steps_per_restart,
                           "step budget per restart (default 2000)");
    search_cmd->add_option("--budget", cfg.time_budget_seconds,
                           "wall-clock budget in seconds (0 = unlimited)");
    int lambda_value = 0;
    CLI::Option* lambda_opt = search_cmd->add_option(
        "--lambda", lambda_value, "fix lambda instead of deriving it");
    search_cmd->add_option("--cardinals", cardinals_text,
                           "fix block sizes, e.g. 6,7,4,4");
    search_cmd->add_option("--plateau", cfg.plateau_cap,
                           "sideways-move cap (default 50)");
    search_cmd->add_option("--indexing", search_order,
                           "ascending | units-first (default ascending)");
    search_cmd->add_flag("--no-skew", no_skew, "drop the skew constraint on block 1");
    search_cmd->add_flag("--all", run_all, "run every restart, even after a hit");
    search_cmd->add_flag("--progress", progress,
                         "log 'restart=<r> step=<s> obj=<o>' lines to stderr");

    // paper
    auto* paper_cmd = app.add_subcommand(
        "paper", "emit one of the bundled reference cases as an SDS file");
    std::string case_id;
    bool explicit_form = false;
    paper_cmd->add_option("--case", case_id, "109A|109B|145A|145B|247A|247B")
        ->required();
    paper_cmd->add_flag("--explicit", explicit_form,
                        "emit explicit elements instead of orbit indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        self_check(); // embedded tables must agree with themselves

        if (orbits->parsed()) return cmd_orbits(orbits_n, orbits_gen, orbits_order);
        if (expand_cmd->parsed()) return cmd_expand(expand_in);
        if (verify_cmd->parsed()) return cmd_verify(verify_in);
        if (build_cmd->parsed()) return cmd_build(build_in, build_out, build_format);
        if (check_cmd->parsed()) return cmd_check_matrix(check_in, hadamard_only);
        if (equiv_cmd->parsed()) return cmd_equiv(equiv_n, equiv_a, equiv_b);
        if (search_cmd->parsed()) {
            if (lambda_opt->count()) cfg.lambda_target = lambda_value;
            if (!cardinals_text.empty()) {
                std::vector<int> k = parse_int_list(cardinals_text, "cardinals");
                if (k.size() != 4) throw ParseError("--cardinals needs 4 values");
                cfg.cardinal_targets = {{k[0], k[1], k[2], k[3]}};
            }
            cfg.orbit_order = parse_order(search_order);
            cfg.skew_first_block = !no_skew;
            cfg.stop_on_success = !run_all;
            return cmd_search(cfg, progress);
        }
        if (paper_cmd->parsed()) return cmd_paper(case_id, explicit_form);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
