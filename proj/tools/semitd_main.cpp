// semitd: minimum semitotal dominating sets on strongly chordal graphs.
//
// Exit codes: 0 success / valid, 1 invalid (check, seo verify),
// 2 parse or usage error, 3 not strongly chordal, 4 bad ordering file,
// 5 instance too large for the oracle.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semitd/bench.hpp"
#include "semitd/errors.hpp"
#include "semitd/generators.hpp"
#include "semitd/graph.hpp"
#include "semitd/io.hpp"
#include "semitd/oracle.hpp"
#include "semitd/ordering.hpp"
#include "semitd/semitotal.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_parse = 2;
constexpr int exit_not_strongly_chordal = 3;
constexpr int exit_bad_ordering = 4;
constexpr int exit_too_large = 5;

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw semitd::parse_error(semitd::parse_errc::malformed_header, 0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// The ordering argument may be a file holding one ordering line, or the
// line itself ("1 4 2 3").
std::string ordering_text(const std::string& arg)
{
    std::ifstream in(arg);
    if (!in)
        return arg;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* step_name(semitd::step_kind k)
{
    using semitd::step_kind;
    switch (k) {
    case step_kind::none: return "none";
    case step_kind::select_pending: return "select-pending";
    case step_kind::select_paired: return "select-paired";
    case step_kind::select_last: return "select-last";
    case step_kind::clear_mark: return "clear-mark";
    case step_kind::pair_last: return "pair-last";
    case step_kind::pair_forward: return "pair-forward";
    }
    return "?";
}

void print_trace(const semitd::SemiTdResult& result)
{
    for (const auto& ev : result.trace) {
        std::cerr << "i=" << ev.position + 1 << " case=" << step_name(ev.kind);
        if (ev.selected >= 0)
            std::cerr << " select=" << ev.selected + 1;
        if (ev.paired >= 0)
            std::cerr << " pair=" << ev.paired + 1;
        if (ev.kind == semitd::step_kind::select_pending
            || ev.kind == semitd::step_kind::select_paired)
            std::cerr << " candidates=" << ev.candidates;
        if (ev.marks_set)
            std::cerr << " mark+=" << ev.marks_set;
        if (ev.marks_cleared)
            std::cerr << " mark-=" << ev.marks_cleared;
        std::cerr << '\n';
    }
}

int cmd_solve(const std::string& graph_path, const std::string& seo_arg, bool trace)
{
    semitd::Graph g = semitd::load_graph(graph_path);

    semitd::SeoOrdering seo;
    if (seo_arg.empty()) {
        seo = semitd::find_seo(g);
    } else {
        std::vector<int> order;
        try {
            order = semitd::parse_ordering_line(ordering_text(seo_arg), g.vertex_count());
            if (!semitd::verify_seo(g, order)) {
                std::cerr << "error: ordering is not a strong elimination ordering\n";
                return exit_bad_ordering;
            }
        } catch (const std::exception& e) {
            std::cerr << "error: bad ordering: " << e.what() << '\n';
            return exit_bad_ordering;
        }
        seo = semitd::SeoOrdering::build(g, std::move(order));
    }

    semitd::SolveOptions opts;
    opts.verify_ordering = false;  // both paths above are already verified
    opts.trace = trace;
    auto result = semitd::solve(g, seo, opts);
    if (trace)
        print_trace(result);
    std::cout << result.size << '\n' << semitd::format_vertex_set(result.set) << '\n';
    return exit_ok;
}

int cmd_check(const std::string& graph_path, const std::string& set_path)
{
    semitd::Graph g = semitd::load_graph(graph_path);
    auto set = semitd::parse_vertex_set_line(read_text_file(set_path), g.vertex_count());
    auto check = semitd::check_semitotal_dominating(g, set);
    switch (check.status) {
    case semitd::semitotal_status::valid:
        std::cout << "ok\n";
        return exit_ok;
    case semitd::semitotal_status::not_dominating:
        std::cout << "invalid: domination (vertex " << check.witness + 1 << " uncovered)\n";
        return exit_invalid;
    case semitd::semitotal_status::unpaired_member:
        std::cout << "invalid: partner (vertex " << check.witness + 1
                  << " has no other member within distance 2)\n";
        return exit_invalid;
    case semitd::semitotal_status::undefined:
        std::cerr << "error: graph has an isolated vertex; instance is invalid\n";
        return exit_parse;
    }
    return exit_parse;
}

int cmd_seo(const std::string& sub, const std::string& graph_path, const std::string& seo_arg)
{
    semitd::Graph g = semitd::load_graph(graph_path);
    if (sub == "find") {
        auto seo = semitd::find_seo(g);
        std::cout << semitd::format_ordering(seo.order) << '\n';
        return exit_ok;
    }
    std::vector<int> order;
    try {
        order = semitd::parse_ordering_line(ordering_text(seo_arg), g.vertex_count());
    } catch (const std::exception& e) {
        std::cerr << "error: bad ordering: " << e.what() << '\n';
        return exit_bad_ordering;
    }
    bool ok = false;
    try {
        ok = semitd::verify_seo(g, order);
    } catch (const semitd::not_a_permutation& e) {
        std::cerr << "error: bad ordering: " << e.what() << '\n';
        return exit_bad_ordering;
    }
    std::cout << (ok ? "valid\n" : "invalid\n");
    return ok ? exit_ok : exit_invalid;
}

int cmd_oracle(const std::string& graph_path)
{
    semitd::Graph g = semitd::load_graph(graph_path);
    auto report = semitd::oracle_report(g);
    std::cout << report.gamma << ' ' << report.gamma_t2 << ' ' << report.gamma_t << '\n';
    std::cout << "gamma: " << semitd::format_vertex_set(report.gamma_witness) << '\n';
    std::cout << "gamma_t2: " << semitd::format_vertex_set(report.gamma_t2_witness) << '\n';
    std::cout << "gamma_t: " << semitd::format_vertex_set(report.gamma_t_witness) << '\n';
    return exit_ok;
}

int cmd_gen(const std::string& family_arg, int n, std::uint64_t seed, const std::string& out,
            double scale, int max_clique)
{
    auto family = semitd::parse_family(family_arg);
    if (!family) {
        std::cerr << "error: unknown family \"" << family_arg << "\"\n";
        return exit_parse;
    }
    semitd::GenSpec spec;
    spec.family = *family;
    spec.n = n;
    spec.seed = seed;
    spec.scale = scale;
    spec.max_clique = max_clique;
    semitd::Graph g = semitd::generate(spec);
    if (out == "-") {
        semitd::write_edge_list(g, std::cout);
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "error: cannot write " << out << '\n';
            return exit_parse;
        }
        semitd::write_edge_list(g, f);
    }
    return exit_ok;
}

int cmd_bench(const std::string& family_arg, const std::string& sizes_arg, std::uint64_t seed,
              const std::string& out_path, int reps)
{
    auto family = semitd::parse_family(family_arg);
    if (!family) {
        std::cerr << "error: unknown family \"" << family_arg << "\"\n";
        return exit_parse;
    }
    std::vector<int> sizes;
    std::stringstream ss(sizes_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || p != tok.data() + tok.size() || value < 3) {
            std::cerr << "error: bad size \"" << tok << "\"\n";
            return exit_parse;
        }
        sizes.push_back(value);
    }
    if (sizes.empty()) {
        std::cerr << "error: no sizes given\n";
        return exit_parse;
    }

    std::vector<semitd::BenchRow> rows;
    rows.reserve(sizes.size());
    for (int size : sizes) {
        rows.push_back(semitd::run_bench_row(*family, size, seed, reps));
        const auto& r = rows.back();
        std::cerr << "n=" << r.n << " m=" << r.m << " seo_ms=" << r.seo_ms
                  << " solve_ms=" << r.solve_ms << " size=" << r.result_size << '\n';
    }

    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return exit_parse;
    }
    semitd::write_bench_csv(rows, f);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"minimum semitotal domination on strongly chordal graphs"};
    app.require_subcommand(1);

    std::string graph_path, seo_arg, set_path, seo_sub;
    std::string family_arg, sizes_arg, out_path = "-";
    std::uint64_t seed = 0;
    int n = 0, max_clique = 5, reps = 3;
    double scale = 4.0;
    bool trace = false;

    auto* solve = app.add_subcommand("solve", "compute a minimum semitotal dominating set");
    solve->add_option("graph", graph_path, "edge-list or DIMACS file")->required();
    solve->add_option("--seo", seo_arg, "ordering file or inline \"1 4 2 3\" (found if absent)");
    solve->add_flag("--trace", trace, "print per-iteration events to stderr");

    auto* check = app.add_subcommand("check", "validate a semitotal dominating set");
    check->add_option("graph", graph_path, "edge-list or DIMACS file")->required();
    check->add_option("set", set_path, "file with one line of 1-based ids")->required();

    auto* seo = app.add_subcommand("seo", "find or verify strong elimination orderings");
    seo->add_option("sub", seo_sub, "find | verify")
        ->required()
        ->check(CLI::IsMember({"find", "verify"}));
    seo->add_option("graph", graph_path, "edge-list or DIMACS file")->required();
    seo->add_option("ordering", seo_arg, "ordering file or inline line (verify)");

    auto* oracle = app.add_subcommand("oracle", "exhaustive domination numbers (n <= 24)");
    oracle->add_option("graph", graph_path, "edge-list or DIMACS file")->required();

    auto* gen = app.add_subcommand("gen", "generate a strongly chordal instance");
    gen->add_option("family", family_arg, "tree | interval | block")->required();
    gen->add_option("n", n, "vertex count")->required()->check(CLI::Range(3, 1 << 28));
    gen->add_option("seed", seed, "64-bit seed")->required();
    gen->add_option("out", out_path, "output path, - for stdout");
    gen->add_option("--scale", scale, "interval density knob (m tracks scale*n)");
    gen->add_option("--max-clique", max_clique, "block size bound")->check(CLI::Range(2, 1 << 20));

    auto* bench = app.add_subcommand("bench", "time find_seo and solve over a size ladder");
    bench->add_option("family", family_arg, "tree | interval | block")->required();
    bench->add_option("sizes", sizes_arg, "comma-separated vertex counts")->required();
    bench->add_option("seed", seed, "64-bit seed")->required();
    bench->add_option("out", out_path, "CSV output path")->required();
    bench->add_option("--reps", reps, "solve repetitions per row (best kept)")
        ->check(CLI::Range(1, 100));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse;
    }

    try {
        if (solve->parsed())
            return cmd_solve(graph_path, seo_arg, trace);
        if (check->parsed())
            return cmd_check(graph_path, set_path);
        if (seo->parsed()) {
            if (seo_sub == "verify" && seo_arg.empty()) {
                std::cerr << "error: verify needs an ordering\n";
                return exit_parse;
            }
            return cmd_seo(seo_sub, graph_path, seo_arg);
        }
        if (oracle->parsed())
            return cmd_oracle(graph_path);
        if (gen->parsed())
            return cmd_gen(family_arg, n, seed, out_path, scale, max_clique);
        if (bench->parsed())
            return cmd_bench(family_arg, sizes_arg, seed, out_path, reps);
    } catch (const semitd::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const semitd::not_strongly_chordal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_not_strongly_chordal;
    } catch (const semitd::too_large& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_too_large;
    } catch (const semitd::unverified_ordering& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_ordering;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
    return exit_parse;
}
