#include "gcol/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "gcol/bench.hpp"
#include "gcol/engine.hpp"
#include "gcol/generate.hpp"
#include "gcol/matrix_market.hpp"
#include "gcol/verify.hpp"

namespace gcol::cli {

namespace {

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct InputArgs {
    std::string input;
    std::string gen;

    GraphSource source() const {
        GraphSource s;
        if (!gen.empty())
            s.gen = parse_gen_spec(gen);
        else
            s.path = input;
        return s;
    }
};

void add_input_options(CLI::App* cmd, InputArgs& in, bool allow_gen) {
    auto* input = cmd->add_option("--input", in.input, "Matrix Market file (rows are nets, columns are vertices)");
    if (allow_gen) {
        auto* gen = cmd->add_option("--gen", in.gen, "Random bipartite graph 'n,m,d,seed' instead of a file");
        input->excludes(gen);
        gen->excludes(input);
        cmd->callback([input, gen] {
            if (input->count() + gen->count() == 0) throw CLI::RequiredError("--input or --gen");
        });
    } else {
        input->required();
    }
}

struct ColorArgs {
    InputArgs in;
    std::string problem = "bgpc";
    std::string algo = "N1-N2";
    std::string balance = "none";
    std::string order = "natural";
    std::uint64_t seed = 0;
    int threads = default_threads();
    std::optional<std::size_t> chunk;
    int max_iters = 100;
    std::string stats_path;
    std::string coloring_path;
};

struct VerifyArgs {
    std::string input;
    std::string coloring;
    std::string problem = "bgpc";
};

struct GenerateArgs {
    std::string gen;
    std::string output;
    bool symmetric = false;
};

struct BenchArgs {
    std::vector<std::string> inputs;
    std::vector<std::string> gens;
    std::string problem = "bgpc";
    std::vector<std::string> algos{"V-V"};
    std::vector<std::string> balances{"none"};
    std::vector<std::string> orders{"natural"};
    std::vector<int> threads{1};
    int trials = 1;
    std::optional<std::size_t> chunk;
    std::uint64_t seed = 0;
    int max_iters = 100;
    std::string output;
    std::string summary;
};

template <class Graph>
std::optional<Violation> verify_any(const Graph& g, std::span<const Color> colors) {
    if constexpr (std::is_same_v<Graph, BipartiteGraph>)
        return verify_bgpc(g, colors);
    else
        return verify_d2gc(g, colors);
}

template <class Graph>
int color_graph(const Graph& g, const ColorArgs& a, const std::string& label, std::ostream& out, std::ostream& err) {
    const OrderKind order_kind = parse_order_kind(a.order);
    const VertexOrder order = make_order(g, order_kind, a.seed);
    StrategySchedule schedule = attach_balancer(preset(a.algo), parse_balance_mode(a.balance));
    if (a.chunk) schedule.chunk_size = *a.chunk;
    schedule.max_iterations = a.max_iters;

    RunResult result = run(g, order, schedule, a.threads);
    if (auto bad = verify_any(g, result.coloring.view())) {
        err << "verification failed: " << *bad << '\n';
        return kVerifyFailed;
    }

    if (!a.coloring_path.empty()) {
        std::ofstream f(a.coloring_path);
        if (!f) throw std::runtime_error("cannot write '" + a.coloring_path + "'");
        for (Color c : result.coloring.view()) f << c << '\n';
        if (!f) throw std::runtime_error("error writing '" + a.coloring_path + "'");
    }
    if (!a.stats_path.empty()) {
        nlohmann::json j = result.stats;
        j["graph"] = label;
        j["order"] = std::string(to_string(order_kind));
        j["chunk_size"] = schedule.chunk_size;
        std::ofstream f(a.stats_path);
        if (!f) throw std::runtime_error("cannot write '" + a.stats_path + "'");
        f << j.dump(2) << '\n';
    }
    const auto& s = result.stats;
    out << label << ": " << s.problem << ' ' << s.algorithm << " balance=" << s.balance << " threads=" << s.workers
        << " colors=" << s.num_colors << " iterations=" << s.iterations.size() << " time_ms=" << s.total_ms
        << (s.fallback_used ? " (sequential fallback)" : "") << '\n';
    return kOk;
}

int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
    const GraphSource source = a.in.source();
    if (parse_problem(a.problem) == Problem::d2gc) return color_graph(load_unipartite(source), a, source.label(), out, err);
    return color_graph(load_bipartite(source), a, source.label(), out, err);
}

std::vector<Color> read_coloring_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<Color> colors;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::istringstream is(line);
        long long c;
        std::string rest;
        if (!(is >> c) || (is >> rest) || c < kUncolored || c > INT32_MAX)
            throw std::runtime_error(path + ": line " + std::to_string(lineno) + ": expected one color");
        colors.push_back(static_cast<Color>(c));
    }
    return colors;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const BipartiteGraph g = load_matrix_market_file(a.input).graph;
    const std::vector<Color> colors = read_coloring_file(a.coloring);
    if (colors.size() != static_cast<std::size_t>(g.num_vertices())) {
        err << "coloring has " << colors.size() << " entries, graph has " << g.num_vertices() << " vertices\n";
        return kUsageOrIo;
    }
    std::optional<Violation> bad;
    if (parse_problem(a.problem) == Problem::d2gc)
        bad = verify_d2gc(to_unipartite(g), colors);
    else
        bad = verify_bgpc(g, colors);
    if (bad) {
        out << "invalid: " << *bad << '\n';
        return kVerifyFailed;
    }
    out << "valid: " << count_distinct_colors(colors) << " colors\n";
    return kOk;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    const GenSpec spec = parse_gen_spec(a.gen);
    BipartiteGraph g = generate_random_bipartite(spec.vertices, spec.nets, spec.avg_net_size, spec.seed);
    if (a.symmetric) g = symmetrize(g);
    if (a.output.empty()) {
        write_matrix_market(out, g);
        return kOk;
    }
    std::ofstream f(a.output);
    if (!f) throw std::runtime_error("cannot write '" + a.output + "'");
    write_matrix_market(f, g);
    return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    BenchConfig config;
    for (const auto& p : a.inputs) config.graphs.push_back(GraphSource{p, std::nullopt});
    for (const auto& g : a.gens) config.graphs.push_back(GraphSource{"", parse_gen_spec(g)});
    if (config.graphs.empty()) throw std::invalid_argument("bench needs at least one --input or --gen");
    config.problem = parse_problem(a.problem);
    config.presets = a.algos;
    config.balances.clear();
    for (const auto& b : a.balances) config.balances.push_back(parse_balance_mode(b));
    config.orders.clear();
    for (const auto& o : a.orders) config.orders.push_back(parse_order_kind(o));
    config.threads = a.threads;
    config.trials = a.trials;
    config.chunk_size = a.chunk;
    config.seed = a.seed;
    config.max_iterations = a.max_iters;

    std::ofstream file;
    std::ostream* csv = &out;
    if (!a.output.empty()) {
        file.open(a.output);
        if (!file) throw std::runtime_error("cannot write '" + a.output + "'");
        csv = &file;
    }
    write_csv_header(*csv);
    BenchReport report = run_bench(config, [&](const BenchRow& row) { write_csv_row(*csv, row); });

    if (!a.summary.empty()) {
        std::ofstream f(a.summary);
        if (!f) throw std::runtime_error("cannot write '" + a.summary + "'");
        write_summary_csv(f, report.summary);
    } else {
        write_summary_csv(a.output.empty() ? err : out, report.summary);
    }
    return kOk;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Speculative parallel bipartite-graph partial coloring and distance-2 coloring", "gcol"};
    app.require_subcommand(1);
    const auto algo_names = preset_names();

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "Color a graph and verify the result");
    add_input_options(color_cmd, color.in, true);
    color_cmd->add_option("--problem", color.problem, "bgpc or d2gc")->check(CLI::IsMember({"bgpc", "d2gc"}));
    color_cmd->add_option("--algo", color.algo, "Algorithm preset")->check(CLI::IsMember(algo_names));
    color_cmd->add_option("--balance", color.balance, "none, b1 or b2")->check(CLI::IsMember({"none", "b1", "b2"}));
    color_cmd->add_option("--order", color.order, "natural, smallest-last or random")
        ->check(CLI::IsMember({"natural", "smallest-last", "random"}));
    color_cmd->add_option("--seed", color.seed, "Seed for --order random");
    color_cmd->add_option("--threads", color.threads, "Worker threads")->check(CLI::PositiveNumber);
    color_cmd->add_option("--chunk", color.chunk, "Override the preset's dynamic chunk size")
        ->check(CLI::PositiveNumber);
    color_cmd->add_option("--max-iters", color.max_iters, "Iterations before the sequential fallback")
        ->check(CLI::NonNegativeNumber);
    color_cmd->add_option("--stats", color.stats_path, "Write run statistics as JSON");
    color_cmd->add_option("--write-coloring", color.coloring_path, "Write one color per line");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file against a matrix");
    verify_cmd->add_option("--input", verify.input, "Matrix Market file")->required();
    verify_cmd->add_option("--coloring", verify.coloring, "One color per line")->required();
    verify_cmd->add_option("--problem", verify.problem, "bgpc or d2gc")->check(CLI::IsMember({"bgpc", "d2gc"}));

    GenerateArgs generate;
    auto* gen_cmd = app.add_subcommand("generate", "Write a random bipartite pattern as Matrix Market");
    gen_cmd->add_option("--gen", generate.gen, "'n,m,d,seed'")->required();
    gen_cmd->add_option("--output", generate.output, "Output file (default stdout)");
    gen_cmd->add_flag("--symmetric", generate.symmetric, "Symmetrize a square pattern (A + A^T)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run an experiment grid and emit CSV");
    bench_cmd->add_option("--input", bench.inputs, "Matrix Market files")->delimiter(',');
    bench_cmd->add_option("--gen", bench.gens, "Generator specs 'n,m,d,seed' (repeatable)");
    bench_cmd->add_option("--problem", bench.problem, "bgpc or d2gc")->check(CLI::IsMember({"bgpc", "d2gc"}));
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated presets")
        ->delimiter(',')
        ->check(CLI::IsMember(algo_names));
    bench_cmd->add_option("--balance", bench.balances, "Comma-separated balance modes")
        ->delimiter(',')
        ->check(CLI::IsMember({"none", "b1", "b2"}));
    bench_cmd->add_option("--order", bench.orders, "Comma-separated orders")
        ->delimiter(',')
        ->check(CLI::IsMember({"natural", "smallest-last", "random"}));
    bench_cmd->add_option("--threads", bench.threads, "Comma-separated thread counts")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--trials", bench.trials, "Trials per cell")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--chunk", bench.chunk, "Override every preset's chunk size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "Seed for --order random");
    bench_cmd->add_option("--max-iters", bench.max_iters, "Iterations before the sequential fallback")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--output", bench.output, "CSV file (default stdout)");
    bench_cmd->add_option("--summary", bench.summary, "Summary CSV file");

    std::vector<std::string> argv_storage = args;
    if (argv_storage.empty()) argv_storage.emplace_back("gcol");
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const CLI::App* shown = &app;
        for (const CLI::App* sub : app.get_subcommands()) shown = sub;
        if (e.get_exit_code() == 0) {
            out << shown->help();
            return kOk;
        }
        err << "error: " << e.what() << "\n\n" << shown->help();
        return kUsageOrIo;
    }

    try {
        if (color_cmd->parsed()) return cmd_color(color, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
        if (gen_cmd->parsed()) return cmd_generate(generate, out);
        if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
    } catch (const SymmetryError& e) {
        err << "error: " << e.what() << '\n';
        return kAsymmetric;
    } catch (const VerificationFailure& e) {
        err << "error: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }
    return kUsageOrIo;
}

}  // namespace gcol::cli
