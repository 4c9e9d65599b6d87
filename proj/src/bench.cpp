#include "gcol/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "gcol/generate.hpp"
#include "gcol/matrix_market.hpp"
#include "gcol/verify.hpp"

namespace gcol {

std::string GenSpec::label() const {
    std::ostringstream os;
    os << "gen:" << vertices << ',' << nets << ',' << avg_net_size << ',' << seed;
    return os.str();
}

GenSpec parse_gen_spec(const std::string& text) {
    std::vector<std::uint64_t> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::uint64_t value = 0;
        const char* first = text.data() + start;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last)
            throw std::invalid_argument("generator spec must be 'n,m,d,seed', got '" + text + "'");
        parts.push_back(value);
        start = comma + 1;
    }
    if (parts.size() != 4) throw std::invalid_argument("generator spec must be 'n,m,d,seed', got '" + text + "'");
    for (int i = 0; i < 3; ++i)
        if (parts[i] > static_cast<std::uint64_t>(INT32_MAX))
            throw std::invalid_argument("generator count too large in '" + text + "'");
    return GenSpec{static_cast<VertexId>(parts[0]), static_cast<NetId>(parts[1]), static_cast<VertexId>(parts[2]),
                   parts[3]};
}

std::string GraphSource::label() const {
    if (gen) return gen->label();
    return std::filesystem::path(path).filename().string();
}

BipartiteGraph load_bipartite(const GraphSource& source) {
    if (source.gen)
        return generate_random_bipartite(source.gen->vertices, source.gen->nets, source.gen->avg_net_size,
                                         source.gen->seed);
    return load_matrix_market_file(source.path).graph;
}

UnipartiteGraph load_unipartite(const GraphSource& source) {
    BipartiteGraph g = load_bipartite(source);
    if (source.gen) {
        if (g.num_nets() != g.num_vertices())
            throw SymmetryError("distance-2 coloring of a generated graph needs n == m", g.num_nets(),
                                g.num_vertices());
        g = symmetrize(g);
    }
    return to_unipartite(g);
}

namespace {

using CellKey = std::tuple<std::string, std::string, std::string, int>;  // preset, balance, order, threads

struct CellMeans {
    double ms = 0.0;
    double colors = 0.0;
    int count = 0;
};

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_optional(const std::optional<double>& v) {
    if (!v) return "";
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << *v;
    return os.str();
}

template <class Graph>
void bench_graph(const Graph& g, const std::string& label, const BenchConfig& config, BenchReport& report,
                 const std::function<void(const BenchRow&)>& on_row) {
    for (OrderKind order_kind : config.orders) {
        const VertexOrder order = make_order(g, order_kind, config.seed);
        for (const std::string& preset_name : config.presets) {
            for (BalanceMode balance : config.balances) {
                StrategySchedule schedule = attach_balancer(preset(preset_name), balance);
                if (config.chunk_size) schedule.chunk_size = *config.chunk_size;
                schedule.max_iterations = config.max_iterations;
                for (int threads : config.threads) {
                    for (int trial = 0; trial < config.trials; ++trial) {
                        RunResult result = run(g, order, schedule, threads);
                        std::optional<Violation> bad;
                        if constexpr (std::is_same_v<Graph, BipartiteGraph>)
                            bad = verify_bgpc(g, result.coloring.view());
                        else
                            bad = verify_d2gc(g, result.coloring.view());
                        if (bad) {
                            std::ostringstream os;
                            os << "invalid coloring for " << label << " " << schedule.name << " threads=" << threads
                               << " trial=" << trial << ": " << *bad;
                            throw VerificationFailure(os.str());
                        }
                        BenchRow row;
                        row.graph = label;
                        row.preset = schedule.name;
                        row.balance = std::string(to_string(balance));
                        row.order = std::string(to_string(order_kind));
                        row.threads = threads;
                        row.trial = trial;
                        row.total_ms = result.stats.total_ms;
                        row.iterations = static_cast<int>(result.stats.iterations.size());
                        row.colors = result.stats.num_colors;
                        row.stddev_card = result.stats.stddev_cardinality;
                        for (const auto& it : result.stats.iterations) row.per_iter_ms.push_back(it.total_ms);
                        if (on_row) on_row(row);
                        report.rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
}

}  // namespace

BenchReport run_bench(const BenchConfig& config, const std::function<void(const BenchRow&)>& on_row) {
    if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
    for (int t : config.threads)
        if (t < 1) throw std::invalid_argument("thread counts must be at least 1");
    for (const auto& name : config.presets) (void)preset(name);  // reject unknown names up front

    BenchReport report;
    for (const GraphSource& source : config.graphs) {
        const std::string label = source.label();
        if (config.problem == Problem::bgpc)
            bench_graph(load_bipartite(source), label, config, report, on_row);
        else
            bench_graph(load_unipartite(source), label, config, report, on_row);
    }
    report.summary = summarize(report.rows);
    return report;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRow>& rows) {
    // per graph, per cell: mean time and colors over trials
    std::map<CellKey, std::map<std::string, CellMeans>> cells;
    std::vector<CellKey> cell_order;
    for (const BenchRow& r : rows) {
        CellKey key{r.preset, r.balance, r.order, r.threads};
        auto [it, inserted] = cells.try_emplace(key);
        if (inserted) cell_order.push_back(key);
        CellMeans& m = it->second[r.graph];
        m.ms += r.total_ms;
        m.colors += static_cast<double>(r.colors);
        ++m.count;
    }
    for (auto& [key, per_graph] : cells)
        for (auto& [graph, m] : per_graph) {
            m.ms /= m.count;
            m.colors /= m.count;
        }

    auto lookup = [&](const CellKey& key, const std::string& graph) -> const CellMeans* {
        auto it = cells.find(key);
        if (it == cells.end()) return nullptr;
        auto jt = it->second.find(graph);
        return jt == it->second.end() ? nullptr : &jt->second;
    };
    constexpr double kMinMs = 1e-6;

    std::vector<SummaryRow> out;
    for (const CellKey& key : cell_order) {
        const auto& [preset_name, balance, order, threads] = key;
        SummaryRow s{preset_name, balance, order, threads, 0, {}, {}, {}};
        double log_colors = 0.0, log_seq = 0.0, log_par = 0.0;
        int n_colors = 0, n_seq = 0, n_par = 0;
        for (const auto& [graph, m] : cells.at(key)) {
            ++s.graphs;
            if (const CellMeans* par = lookup({"V-V", "none", order, threads}, graph)) {
                log_colors += std::log(m.colors / par->colors);
                log_par += std::log(std::max(par->ms, kMinMs) / std::max(m.ms, kMinMs));
                ++n_colors;
                ++n_par;
            }
            if (const CellMeans* seq = lookup({"V-V", "none", order, 1}, graph)) {
                log_seq += std::log(std::max(seq->ms, kMinMs) / std::max(m.ms, kMinMs));
                ++n_seq;
            }
        }
        if (n_colors) s.normalized_colors = std::exp(log_colors / n_colors);
        if (n_par) s.speedup_vs_vv = std::exp(log_par / n_par);
        if (n_seq) s.speedup_vs_sequential = std::exp(log_seq / n_seq);
        out.push_back(std::move(s));
    }
    return out;
}

void write_csv_header(std::ostream& os) {
    os << "graph,preset,balance,order,threads,trial,total_ms,iters,colors,stddev_card,per_iter_ms\n";
}

void write_csv_row(std::ostream& os, const BenchRow& row) {
    std::ostringstream iters;
    iters << std::fixed << std::setprecision(3);
    for (std::size_t i = 0; i < row.per_iter_ms.size(); ++i) {
        if (i) iters << ';';
        iters << row.per_iter_ms[i];
    }
    std::ostringstream line;
    line << quoted(row.graph) << ',' << quoted(row.preset) << ',' << quoted(row.balance) << ',' << quoted(row.order)
         << ',' << row.threads << ',' << row.trial << ',' << std::fixed << std::setprecision(3) << row.total_ms << ','
         << row.iterations << ',' << row.colors << ',' << std::setprecision(4) << row.stddev_card << ','
         << quoted(iters.str()) << '\n';
    os << line.str() << std::flush;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& summary) {
    os << "preset,balance,order,threads,graphs,normalized_colors,speedup_vs_sequential_vv,speedup_vs_vv\n";
    for (const SummaryRow& s : summary) {
        os << quoted(s.preset) << ',' << quoted(s.balance) << ',' << quoted(s.order) << ',' << s.threads << ','
           << s.graphs << ',' << format_optional(s.normalized_colors) << ','
           << format_optional(s.speedup_vs_sequential) << ',' << format_optional(s.speedup_vs_vv) << '\n';
    }
}

}  // namespace gcol
