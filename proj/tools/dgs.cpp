#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include <dgs/dgs.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 2;
constexpr int exit_level_bound = 10;
constexpr int exit_inconclusive = 11;
constexpr int exit_not_cospectral = 12;

bool use_color() {
    return isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& s, const char* code) {
    if (!use_color())
        return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

std::string verdict_line(dgs::VerdictKind k) {
    switch (k) {
    case dgs::VerdictKind::CertifiedDgs:
        return paint("certified-dgs", "32");
    case dgs::VerdictKind::LevelBound:
        return paint("level-bound", "33");
    default:
        return paint("inconclusive", "33");
    }
}

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_source(const std::string& arg) {
    if (arg == "-")
        return read_stream(std::cin);
    std::ifstream f(arg);
    if (f.good())
        return read_stream(f);
    return arg; // literal value
}

dgs::Graph load_graph(const std::string& arg) {
    std::string text = read_source(arg);
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos)
        throw dgs::MalformedGraph6("empty graph input");
    if (text[start] == '{')
        return dgs::graph_from_json(text);
    const auto end = text.find_first_of("\r\n", start);
    return dgs::parse_graph6(text.substr(start, end == std::string::npos
                                                    ? std::string::npos
                                                    : end - start));
}

void deliver(const std::string& output, const std::string& content) {
    if (output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(output);
    if (!f)
        throw dgs::Error("cannot open output file " + output);
    f << content;
}

int verdict_exit_code(dgs::VerdictKind k) {
    switch (k) {
    case dgs::VerdictKind::CertifiedDgs:
        return exit_ok;
    case dgs::VerdictKind::LevelBound:
        return exit_level_bound;
    default:
        return exit_inconclusive;
    }
}

struct AnalyzeArgs {
    std::string input = "-";
    bool json = false;
    std::string output;
    unsigned budget_ms = 5000;
    std::vector<std::uint64_t> primes;
    std::string dump_w;
    std::string dump_what;
};

int run_analyze(const AnalyzeArgs& args) {
    const dgs::Graph g = load_graph(args.input);
    const dgs::DgsVerdict v = dgs::certify(g, args.budget_ms);

    if (!args.dump_w.empty()) {
        std::ofstream f(args.dump_w);
        if (!f)
            throw dgs::Error("cannot open output file " + args.dump_w);
        dgs::write_matrix_text(f, dgs::walk_matrix(g));
    }
    if (!args.dump_what.empty()) {
        const std::uint64_t p = args.primes.empty() ? 2 : args.primes.front();
        const auto ann = dgs::annihilator_poly(g, p);
        std::ofstream f(args.dump_what);
        if (!f)
            throw dgs::Error("cannot open output file " + args.dump_what);
        dgs::write_matrix_text(f, dgs::hat_walk_matrix(g, ann));
    }

    if (args.json) {
        deliver(args.output, dgs::verdict_json(v).dump(2) + "\n");
        return verdict_exit_code(v.kind);
    }

    std::ostringstream out;
    out << "graph: " << dgs::emit_graph6(g) << "  order " << g.order()
        << "  edges " << g.edge_count() << "\n";
    out << "verdict: " << verdict_line(v.kind) << "\n";
    out << "det(W): " << v.det_w.get_str() << "\n";
    out << "snf(W):";
    for (const mpz_class& d : v.snf_w)
        out << " " << d.get_str();
    out << "\n";
    if (v.bound) {
        out << "level bound: " << v.bound->divisor.get_str()
            << (v.bound->complete ? "" : " (incomplete factorization)")
            << "\n";
        for (const auto& e : v.bound->provenance)
            out << "  " << e.prime.get_str() << ": " << e.exponent << " -> "
                << e.reduced << " (" << e.rule << ")\n";
    }
    for (const std::string& note : v.notes)
        out << "note: " << note << "\n";

    if (v.det_w != 0) {
        const auto by_det = dgs::det_squarefree_certificate(g, args.budget_ms);
        const auto by_snf = dgs::snf_profile_certificate(g, args.budget_ms);
        out << "certificates:\n";
        out << "  determinant: " << dgs::to_string(by_det.outcome) << " ("
            << by_det.reason << ")\n";
        out << "  snf-profile: " << dgs::to_string(by_snf.outcome) << " ("
            << by_snf.reason << ")\n";
    }
    for (std::uint64_t p : args.primes) {
        const std::size_t r = dgs::rank_mod_p(dgs::walk_matrix(g), p);
        out << "p=" << p << ": rank " << r << " of " << g.order();
        const auto ann = dgs::annihilator_poly(g, p);
        out << ", annihilator coeffs";
        for (std::uint64_t a : ann.coeffs)
            out << " " << a;
        out << " 1";
        const auto hat_d = dgs::snf(dgs::hat_walk_matrix(g, ann)).d;
        out << ", snf(reduced W):";
        for (const mpz_class& d : hat_d)
            out << " " << d.get_str();
        out << "\n";
    }
    deliver(args.output, out.str());
    return verdict_exit_code(v.kind);
}

struct PairArgs {
    std::string input_a;
    std::string input_b;
    bool json = false;
    std::string output;
    unsigned budget_ms = 5000;
};

int run_pair(const PairArgs& args) {
    const dgs::Graph a = load_graph(args.input_a);
    const dgs::Graph b = load_graph(args.input_b);
    const bool cosp = dgs::generalized_cospectral(a, b);

    std::optional<dgs::RroMatrix> rro;
    std::optional<dgs::LevelDivisibilityReport> div;
    if (cosp) {
        try {
            rro = dgs::recover_q(a, b);
            div = dgs::level_divisibility_check(a, b, args.budget_ms);
        } catch (const dgs::SingularWalkMatrix&) {
        }
    }

    if (args.json) {
        deliver(args.output,
                dgs::pair_json(a, b, cosp, rro ? &*rro : nullptr,
                               div ? &*div : nullptr)
                        .dump(2) +
                    "\n");
    } else {
        std::ostringstream out;
        out << "graphs: " << dgs::emit_graph6(a) << " " << dgs::emit_graph6(b)
            << "\n";
        out << "generalized cospectral: " << (cosp ? "yes" : "no") << "\n";
        if (cosp && !rro) {
            out << "note: walk matrix is singular; the rational orthogonal "
                   "matrix is not unique\n";
        }
        if (rro) {
            out << "level: " << rro->lvl.get_str() << "\n";
            out << "q (" << rro->lvl.get_str() << " * Q):\n";
            for (std::size_t i = 0; i < rro->q.rows(); ++i) {
                out << " ";
                for (std::size_t j = 0; j < rro->q.cols(); ++j) {
                    mpq_class scaled = rro->q(i, j) * rro->lvl;
                    out << " " << scaled.get_num().get_str();
                }
                out << "\n";
            }
        }
        if (div) {
            out << "level divides gcd of last invariant factors ("
                << div->gcd_last_factors.get_str()
                << "): " << (div->divides_last_factors ? "yes" : "no") << "\n";
            out << "level divides gcd of level bounds ("
                << div->gcd_level_bounds.get_str()
                << "): " << (div->divides_level_bounds ? "yes" : "no") << "\n";
        }
        deliver(args.output, out.str());
    }
    if (!cosp)
        return exit_not_cospectral;
    if (!rro)
        return exit_inconclusive;
    return exit_ok;
}

struct CensusArgs {
    std::size_t order = 0;
    bool json = false;
    bool dedup = false;
    bool force = false;
    bool progress = false;
    unsigned jobs = 1;
    std::string output;
    std::string pairs_out;
    unsigned budget_ms = 1000;
};

int run_census(const CensusArgs& args) {
    if (args.order == 8 && !args.force)
        throw dgs::SizeLimitExceeded(
            "a census at order 8 takes a while; pass --force to run it");
    dgs::CensusOptions opt;
    opt.jobs = args.jobs;
    opt.dedup = args.dedup;
    opt.factor_budget_ms = args.budget_ms;
    if (args.progress) {
        opt.on_progress = [](std::size_t done, std::size_t total) {
            std::cerr << "\rcensus: " << (100 * done / total) << "%"
                      << (done == total ? "\n" : "") << std::flush;
        };
    }
    const dgs::CensusResult r = dgs::census(args.order, opt);

    auto pair_lines = [&r] {
        std::ostringstream out;
        for (const auto& p : r.pairs) {
            out << p.a << " " << p.b << " "
                << (p.lvl ? p.lvl->get_str() : "-") << "\n";
        }
        return out.str();
    };

    if (!args.pairs_out.empty()) {
        std::ofstream f(args.pairs_out);
        if (!f)
            throw dgs::Error("cannot open output file " + args.pairs_out);
        f << pair_lines();
    }

    if (args.json) {
        deliver(args.output, dgs::census_json(r).dump(2) + "\n");
        return exit_ok;
    }

    std::ostringstream out;
    out << "order " << r.order << ": " << r.labeled_total
        << " labeled graphs, " << r.classes.size()
        << " isomorphism classes, " << r.mate_buckets.size()
        << " mate buckets, " << r.pairs.size() << " pairs, "
        << r.certified_classes << " certified classes\n";
    if (!r.mates_listing.empty()) {
        out << "mates" << (args.dedup ? " (one per class)" : "") << ":\n";
        for (const std::string& g6 : r.mates_listing)
            out << g6 << "\n";
    }
    if (!r.pairs.empty()) {
        out << "pairs:\n";
        out << pair_lines();
    }
    deliver(args.output, out.str());
    return exit_ok;
}

struct SnfArgs {
    std::string input = "-";
    bool json = false;
    bool transforms = false;
    std::string output;
};

int run_snf(const SnfArgs& args) {
    const std::string text = read_source(args.input);
    const dgs::IntMatrix m = dgs::read_matrix_text(text);
    const dgs::SnfDecomposition dec = dgs::snf(m, args.transforms);

    if (args.json) {
        nlohmann::json j;
        j["d"] = nlohmann::json::array();
        for (const mpz_class& d : dec.d)
            j["d"].push_back(dgs::to_decimal(d));
        if (args.transforms) {
            auto dump = [](const dgs::IntMatrix& x) {
                std::ostringstream s;
                dgs::write_matrix_text(s, x);
                return s.str();
            };
            j["u"] = dump(*dec.u);
            j["v"] = dump(*dec.v);
        }
        deliver(args.output, j.dump(2) + "\n");
        return exit_ok;
    }

    std::ostringstream out;
    out << "d:";
    for (const mpz_class& d : dec.d)
        out << " " << d.get_str();
    out << "\n";
    if (args.transforms) {
        out << "u:\n";
        dgs::write_matrix_text(out, *dec.u);
        out << "v:\n";
        dgs::write_matrix_text(out, *dec.v);
    }
    deliver(args.output, out.str());
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for deciding whether a graph is "
                 "determined by its generalized spectrum"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read option defaults from a file");

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "certify a single graph or bound the level of its mates");
    analyze->add_option("graph", analyze_args.input,
                        "graph6 string, JSON graph, file, or - for stdin");
    analyze->add_flag("--json", analyze_args.json, "emit JSON");
    analyze->add_option("-o,--output", analyze_args.output,
                        "write the report to a file");
    analyze->add_option("--factor-budget", analyze_args.budget_ms,
                        "factorization budget in milliseconds");
    analyze->add_option("--prime", analyze_args.primes,
                        "print rank/annihilator diagnostics for this prime "
                        "(repeatable)");
    analyze->add_option("--dump-w", analyze_args.dump_w,
                        "write the walk matrix to a file");
    analyze->add_option("--dump-what", analyze_args.dump_what,
                        "write the reduced walk matrix (first --prime, "
                        "default 2) to a file");

    PairArgs pair_args;
    CLI::App* pair = app.add_subcommand(
        "pair", "recover and verify the rational orthogonal matrix linking "
                "two generalized-cospectral graphs");
    pair->add_option("a", pair_args.input_a, "first graph")->required();
    pair->add_option("b", pair_args.input_b, "second graph")->required();
    pair->add_flag("--json", pair_args.json, "emit JSON");
    pair->add_option("-o,--output", pair_args.output,
                     "write the report to a file");
    pair->add_option("--factor-budget", pair_args.budget_ms,
                     "factorization budget in milliseconds");

    CensusArgs census_args;
    CLI::App* census = app.add_subcommand(
        "census", "survey all graphs of a given order and audit the "
                  "certificates against ground truth");
    census->add_option("n", census_args.order, "graph order (1..8)")
        ->required();
    census->add_flag("--json", census_args.json, "emit JSON");
    census->add_flag("--dedup", census_args.dedup,
                     "list one representative per mate class instead of "
                     "every labeled graph");
    census->add_flag("--force", census_args.force,
                     "allow the order-8 census");
    census->add_flag("--progress", census_args.progress,
                     "print progress to stderr");
    census->add_option("--jobs", census_args.jobs, "worker threads");
    census->add_option("-o,--output", census_args.output,
                       "write the report to a file");
    census->add_option("--pairs-out", census_args.pairs_out,
                       "write mate pair lines (g6a g6b level) to a file");
    census->add_option("--factor-budget", census_args.budget_ms,
                       "factorization budget in milliseconds");

    SnfArgs snf_args;
    CLI::App* snf_cmd = app.add_subcommand(
        "snf", "Smith normal form of an integer matrix in matrix text "
               "format");
    snf_cmd->add_option("matrix", snf_args.input,
                        "matrix text file or - for stdin");
    snf_cmd->add_flag("--json", snf_args.json, "emit JSON");
    snf_cmd->add_flag("--transforms", snf_args.transforms,
                      "also print unimodular U and V with input = U S V");
    snf_cmd->add_option("-o,--output", snf_args.output,
                        "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        if (*analyze)
            return run_analyze(analyze_args);
        if (*pair)
            return run_pair(pair_args);
        if (*census)
            return run_census(census_args);
        return run_snf(snf_args);
    } catch (const dgs::AuditContradiction& e) {
        std::cerr << "audit contradiction: " << e.what() << "\n";
        return 1;
    } catch (const dgs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
