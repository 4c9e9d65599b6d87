#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcol/balance.hpp"
#include "gcol/engine.hpp"
#include "gcol/graph.hpp"
#include "gcol/ordering.hpp"

namespace gcol {

/// Parameters of generate_random_bipartite, written "n,m,d,seed".
struct GenSpec {
    VertexId vertices = 0;
    NetId nets = 0;
    VertexId avg_net_size = 0;
    std::uint64_t seed = 0;

    std::string label() const;
};

/// Throws std::invalid_argument when the text is not four comma-separated
/// non-negative integers.
GenSpec parse_gen_spec(const std::string& text);

/// A matrix file or a generator call.
struct GraphSource {
    std::string path;
    std::optional<GenSpec> gen;

    std::string label() const;
};

/// Loads or generates the bipartite pattern of a source.
BipartiteGraph load_bipartite(const GraphSource& source);

/// Graph for distance-2 coloring. Files must be square and structurally
/// symmetric (SymmetryError otherwise); generated patterns are square
/// generator output made symmetric as A ∪ Aᵀ.
UnipartiteGraph load_unipartite(const GraphSource& source);

/// Raised when a finished run fails the independent verifier.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BenchConfig {
    std::vector<GraphSource> graphs;
    Problem problem = Problem::bgpc;
    std::vector<std::string> presets{"V-V"};
    std::vector<BalanceMode> balances{BalanceMode::none};
    std::vector<OrderKind> orders{OrderKind::natural};
    std::vector<int> threads{1};
    int trials = 1;
    std::optional<std::size_t> chunk_size;  // overrides every preset's chunk
    std::uint64_t seed = 0;                 // random order seed
    int max_iterations = 100;
};

struct BenchRow {
    std::string graph;
    std::string preset;
    std::string balance;
    std::string order;
    int threads = 1;
    int trial = 0;
    double total_ms = 0.0;
    int iterations = 0;
    std::int64_t colors = 0;
    double stddev_card = 0.0;
    std::vector<double> per_iter_ms;
};

/// Geometric means over graphs for one (preset, balance, order, threads)
/// cell. Baselines are V-V without balancing under the same order: the
/// single-thread cell for `speedup_vs_sequential`, the same thread count for
/// `speedup_vs_vv` and `normalized_colors`. Empty when the baseline cell is
/// not part of the grid.
struct SummaryRow {
    std::string preset;
    std::string balance;
    std::string order;
    int threads = 1;
    int graphs = 0;
    std::optional<double> normalized_colors;
    std::optional<double> speedup_vs_sequential;
    std::optional<double> speedup_vs_vv;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<SummaryRow> summary;
};

/// Runs every cell of the grid serially, verifying each coloring. Throws
/// VerificationFailure on the first invalid coloring. `on_row` is called as
/// soon as each row is available.
BenchReport run_bench(const BenchConfig& config, const std::function<void(const BenchRow&)>& on_row = {});

std::vector<SummaryRow> summarize(const std::vector<BenchRow>& rows);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const BenchRow& row);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& summary);

}  // namespace gcol
