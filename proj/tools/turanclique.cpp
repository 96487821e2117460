// Command-line front end: solve, compress, generate, verify, bench.
// stdout carries JSON (CSV for bench); diagnostics go to stderr.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/compression.hpp"
#include "turan/generators.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"
#include "turan/report.hpp"
#include "turan/solver.hpp"
#include "turan/turan_math.hpp"

using namespace turan;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_budget = 2;

using Clock = std::chrono::steady_clock;

std::int64_t ns_since(Clock::time_point t)
{
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t).count();
}

void print(const json &j)
{
    std::cout << j.dump() << '\n';
}

int fail(const std::string &message, json extra = json::object())
{
    std::cerr << "error: " << message << '\n';
    extra["schema"] = report::schema_version;
    extra["error"] = message;
    print(extra);
    return exit_error;
}

struct GraphArgs {
    std::string path;
    std::string format = "dimacs";

    void add(CLI::App *app)
    {
        app->add_option("--graph", path, "input graph file")->required()->check(CLI::ExistingFile);
        app->add_option("--format", format, "dimacs or edge-list")
            ->check(CLI::IsMember({"dimacs", "edge-list"}));
    }

    Graph load() const { return read_graph_file(path, parse_format(format)); }
};

struct SolveArgs {
    GraphArgs graph;
    std::optional<std::int64_t> r, ell;
    EdgeCount k = 0;
    bool is_mode = false;
    std::int64_t t = 1;
    std::uint64_t budget = default_node_budget;
    unsigned threads = 1;
    bool emit_partition = false;
    bool emit_trace = false;
};

int run_solve(const SolveArgs &a)
{
    const SolverOptions options{a.budget, std::max(1U, a.threads)};
    try {
        const auto g = a.graph.load();
        Decision d;
        if (a.is_mode) {
            d = solve_turan_is(g, a.t, options);
        } else {
            if (!a.r || !a.ell)
                return fail("--r and --ell are required unless --is-mode is given");
            d = solve_turan_clique(TuranCliqueInstance(g, *a.r, a.k, *a.ell), options);
        }
        print(report::decision_json(d, a.emit_partition, a.emit_trace));
        return exit_ok;
    } catch (const InvalidInstance &e) {
        json extra = json::object();
        if (e.slack())
            extra["slack"] = *e.slack();
        return fail(e.what(), extra);
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << '\n';
        print({{"schema", report::schema_version}, {"error", "budget_exceeded"}, {"budget", e.budget()}});
        return exit_budget;
    }
}

struct CompressArgs {
    GraphArgs graph;
    std::int64_t r = 0, ell = 0;
    EdgeCount k = 0;
    bool emit_partition = false;
};

int run_compress(const CompressArgs &a)
{
    try {
        const TuranCliqueInstance inst(a.graph.load(), a.r, a.k, a.ell);
        const auto start = Clock::now();
        const auto work = inst.tau() > 1 ? shift_parameters(inst) : inst;
        const auto result = compress_clique(work);
        const auto wall = ns_since(start);
        auto out = report::compression_json(inst, result, wall, a.emit_partition);
        out["shifted"] = inst.tau() > 1;
        print(out);
        return exit_ok;
    } catch (const InvalidInstance &e) {
        json extra = json::object();
        if (e.slack())
            extra["slack"] = *e.slack();
        return fail(e.what(), extra);
    }
}

struct GenerateArgs {
    std::string family;
    std::int64_t n = 0, r = 0, ell = 0, xi = 1, tau = 2;
    EdgeCount k = 0;
    std::uint64_t seed = 1;
    std::string source;
    std::string source_format = "dimacs";
    std::string variant = "tau-zero";
    std::string out;
};

int run_generate(const GenerateArgs &a)
{
    std::optional<GeneratedInstance> gen;
    if (a.family == "perturbed") {
        gen = gen_perturbed_turan(a.n, a.r, a.k, a.seed);
    } else if (a.family == "planted") {
        gen = gen_planted(a.n, a.r, a.k, a.seed);
    } else {
        if (a.source.empty())
            return fail("--source is required for reduction families");
        const auto g = read_graph_file(a.source, parse_format(a.source_format));
        if (a.family == "xi-reduction")
            gen = gen_reduction_fixed_xi(g, a.ell, a.xi,
                                         a.variant == "k-zero" ? XiVariant::k_zero : XiVariant::tau_zero);
        else
            gen = gen_reduction_fixed_tau(g, a.ell, a.tau);
    }

    const auto sidecar = report::generated_json(*gen);
    std::ofstream graph_out(a.out);
    if (!graph_out)
        return fail("cannot write " + a.out);
    write_graph(graph_out, gen->instance.graph(), GraphFormat::dimacs);
    std::ofstream side_out(a.out + ".json");
    side_out << sidecar.dump(2) << '\n';
    print(sidecar);
    return exit_ok;
}

struct VerifyArgs {
    bool turan_table = false;
    std::int64_t max_n = 7;
    GraphArgs graph_args;
    std::vector<Vertex> witness;
    std::int64_t ell = 0;
    std::string mode = "clique";
};

int run_turan_table(std::int64_t max_n)
{
    if (max_n < 1 || max_n > oracle::extremal_cap)
        return fail("--max-n must be in 1..7");
    json rows = json::array();
    bool all = true;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto table = oracle::extremal_table(n);
        for (const auto &entry : table) {
            const auto formula = turan_edge_count(n, entry.r);
            const bool match = formula == entry.max_edges;
            json row{{"n", n}, {"r", entry.r}, {"turan", formula}, {"oracle", entry.max_edges}, {"match", match}};
            bool unique = true;
            if (n <= oracle::uniqueness_cap) {
                const auto turan_form = oracle::canonical_form(oracle::to_small_graph(build_turan_graph(n, entry.r)));
                unique = entry.maximizer_forms.size() == 1 && entry.maximizer_forms[0] == turan_form;
                row["unique_maximizer"] = unique;
            }
            all = all && match && unique;
            rows.push_back(row);
        }
    }
    print({{"schema", report::schema_version}, {"pass", all}, {"rows", rows}});
    return all ? exit_ok : exit_error;
}

int run_verify(const VerifyArgs &a, bool have_graph)
{
    if (a.turan_table)
        return run_turan_table(a.max_n);
    if (!have_graph)
        return fail("verify needs --turan-table or --graph with --witness");
    const auto g = a.graph_args.load();
    const auto mode = a.mode == "is" ? WitnessMode::independent_set : WitnessMode::clique;
    try {
        const bool valid = verify_witness(g, a.witness, a.ell, mode);
        print({{"schema", report::schema_version}, {"valid", valid}});
        return valid ? exit_ok : exit_error;
    } catch (const GraphError &e) {
        return fail(e.what());
    }
}

struct BenchArgs {
    std::string mode = "clique";
    std::vector<std::int64_t> sizes{500, 1000, 2000};
    std::vector<EdgeCount> ks{5, 10};
    std::vector<std::int64_t> ts{1, 2};
    std::vector<double> densities{0.5, 0.7, 0.9};
    std::int64_t r = 0;
    int repeats = 5;
    std::uint64_t seed = 1;
    std::uint64_t budget = default_node_budget;
};

template <typename T>
T median(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

int run_bench(const BenchArgs &a)
{
    const SolverOptions options{a.budget, 1};
    const int reps = std::max(1, a.repeats);
    std::cout << "# schema: " << report::schema_version << '\n';
    if (a.mode == "clique") {
        std::cout << "n,m,k,compress_ns,kernel_vertices,solve_ns\n";
        for (auto n : a.sizes)
            for (auto k : a.ks) {
                const std::int64_t r = a.r > 0 ? a.r : std::max<std::int64_t>(2, n / 10);
                const auto gen = gen_perturbed_turan(n, r, k, a.seed);
                std::vector<std::int64_t> compress_ns, solve_ns;
                std::size_t kernel = 0;
                for (int i = 0; i < reps; ++i) {
                    const auto start = Clock::now();
                    const auto c = compress_clique(gen.instance);
                    compress_ns.push_back(ns_since(start));
                    kernel = c.kernel.vertex_count();
                    solve_ns.push_back(solve_turan_clique(gen.instance, options).stats.wall_ns);
                }
                std::cout << n << ',' << gen.instance.m() << ',' << k << ',' << median(compress_ns) << ','
                          << kernel << ',' << median(solve_ns) << '\n';
            }
    } else {
        std::cout << "n,m,t,d,td2,kernel_vertices,compress_ns,solve_ns\n";
        for (auto n : a.sizes)
            for (double p : a.densities)
                for (auto t : a.ts) {
                    const auto g = random_graph(static_cast<std::size_t>(n), p, a.seed);
                    std::vector<std::int64_t> compress_ns, solve_ns;
                    std::size_t kernel = 0;
                    double d = 0;
                    for (int i = 0; i < reps; ++i) {
                        const auto start = Clock::now();
                        const auto c = compress_independent_set(g, t);
                        compress_ns.push_back(ns_since(start));
                        kernel = c.clique.kernel.vertex_count();
                        d = boost::rational_cast<double>(c.avg_degree);
                        solve_ns.push_back(solve_turan_is(g, t, options).stats.wall_ns);
                    }
                    std::ostringstream row;
                    row << std::setprecision(6) << n << ',' << g.edge_count() << ',' << t << ',' << d << ','
                        << static_cast<double>(t) * d * d << ',' << kernel << ',' << median(compress_ns) << ','
                        << median(solve_ns);
                    std::cout << row.str() << '\n';
                }
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Clique search for graphs near the Turán edge bound"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto *solve_cmd = app.add_subcommand("solve", "decide a clique or independent-set instance");
    solve.graph.add(solve_cmd);
    solve_cmd->add_option("--r", solve.r, "Turán part count");
    solve_cmd->add_option("--k", solve.k, "edge deficit budget")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--ell", solve.ell, "clique size");
    auto *is_flag = solve_cmd->add_flag("--is-mode", solve.is_mode, "independent set above n/(d+1)");
    solve_cmd->add_option("--t", solve.t, "excess over ceil(n/(d+1))")->needs(is_flag);
    solve_cmd->add_option("--budget", solve.budget, "search node budget")->envname("TURANCLIQUE_BUDGET");
    solve_cmd->add_option("--threads", solve.threads, "search threads");
    solve_cmd->add_flag("--emit-partition", solve.emit_partition);
    solve_cmd->add_flag("--emit-trace", solve.emit_trace);

    CompressArgs compress;
    auto *compress_cmd = app.add_subcommand("compress", "compress an instance and report the kernel");
    compress.graph.add(compress_cmd);
    compress_cmd->add_option("--r", compress.r)->required();
    compress_cmd->add_option("--k", compress.k)->check(CLI::NonNegativeNumber);
    compress_cmd->add_option("--ell", compress.ell)->required();
    compress_cmd->add_flag("--emit-partition", compress.emit_partition);

    GenerateArgs generate;
    auto *generate_cmd = app.add_subcommand("generate", "write a generated instance as DIMACS plus a JSON sidecar");
    generate_cmd->add_option("--family", generate.family)
        ->required()
        ->check(CLI::IsMember({"perturbed", "planted", "xi-reduction", "tau-reduction"}));
    generate_cmd->add_option("--n", generate.n);
    generate_cmd->add_option("--r", generate.r);
    generate_cmd->add_option("--k", generate.k);
    generate_cmd->add_option("--seed", generate.seed);
    generate_cmd->add_option("--source", generate.source, "source Clique graph for reductions");
    generate_cmd->add_option("--source-format", generate.source_format)
        ->check(CLI::IsMember({"dimacs", "edge-list"}));
    generate_cmd->add_option("--ell", generate.ell);
    generate_cmd->add_option("--xi", generate.xi);
    generate_cmd->add_option("--tau", generate.tau);
    generate_cmd->add_option("--variant", generate.variant)->check(CLI::IsMember({"tau-zero", "k-zero"}));
    generate_cmd->add_option("--out", generate.out, "DIMACS output path; the sidecar is <out>.json")->required();

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "check the Turán table or a witness");
    verify_cmd->add_flag("--turan-table", verify.turan_table);
    verify_cmd->add_option("--max-n", verify.max_n);
    auto *verify_graph = verify_cmd->add_option("--graph", verify.graph_args.path)->check(CLI::ExistingFile);
    verify_cmd->add_option("--format", verify.graph_args.format)->check(CLI::IsMember({"dimacs", "edge-list"}));
    verify_cmd->add_option("--witness", verify.witness, "comma-separated 0-based ids")->delimiter(',');
    verify_cmd->add_option("--ell", verify.ell);
    verify_cmd->add_option("--mode", verify.mode)->check(CLI::IsMember({"clique", "is"}));

    BenchArgs bench;
    auto *bench_cmd = app.add_subcommand("bench", "timing table as CSV");
    bench_cmd->add_option("--mode", bench.mode)->check(CLI::IsMember({"clique", "is"}));
    bench_cmd->add_option("--sizes", bench.sizes)->delimiter(',');
    bench_cmd->add_option("--k", bench.ks)->delimiter(',');
    bench_cmd->add_option("--t", bench.ts)->delimiter(',');
    bench_cmd->add_option("--densities", bench.densities)->delimiter(',');
    bench_cmd->add_option("--r", bench.r, "part count (default n/10)");
    bench_cmd->add_option("--repeats", bench.repeats);
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_option("--budget", bench.budget)->envname("TURANCLIQUE_BUDGET");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? exit_ok : exit_error;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve);
        if (*compress_cmd)
            return run_compress(compress);
        if (*generate_cmd)
            return run_generate(generate);
        if (*verify_cmd)
            return run_verify(verify, verify_graph->count() > 0);
        return run_bench(bench);
    } catch (const std::exception &e) {
        return fail(e.what());
    }
}
