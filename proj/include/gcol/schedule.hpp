#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gcol/balance.hpp"

namespace gcol {

enum class PhaseKind { vertex, net };

/// How the next work queue is assembled by vertex-based conflict removal.
enum class QueueMode {
    shared_append,  // every conflicting vertex is appended to one shared queue
    local_merge,    // per-worker buffers concatenated at the barrier
};

/// Which net-based BGPC coloring kernel runs in net coloring iterations.
enum class NetColoringKernel {
    reverse_first_fit,  // two-pass kernel with descending colors from |vtxs(v)| - 1
    first_fit_v1,       // single-pass most-optimistic kernel with a monotone cursor
};

std::string_view to_string(PhaseKind k);

/// Per-iteration strategy choice. Iterations are numbered from 1.
struct StrategySchedule {
    std::string name;
    int net_coloring_iterations = 0;   // net coloring on iterations 1..k
    int net_removal_iterations = 0;    // net conflict removal on iterations 1..k
    bool net_removal_always = false;   // V-Ninf
    /// Chunk grain for dynamic work claiming; 0 means a static split into
    /// ceil(n / workers) blocks.
    std::size_t chunk_size = 64;
    QueueMode queue_mode = QueueMode::local_merge;
    BalanceMode balance = BalanceMode::none;
    NetColoringKernel net_kernel = NetColoringKernel::reverse_first_fit;
    int max_iterations = 100;

    PhaseKind coloring_strategy(int iteration) const {
        return iteration <= net_coloring_iterations ? PhaseKind::net : PhaseKind::vertex;
    }
    PhaseKind conflict_strategy(int iteration) const {
        return net_removal_always || iteration <= net_removal_iterations ? PhaseKind::net : PhaseKind::vertex;
    }
};

/// V-V, V-V-64, V-V-64D, V-Ninf, V-N1, V-N2, N1-N2, N2-N2.
const std::vector<std::string>& preset_names();

/// Throws std::invalid_argument on an unknown name. "V-N∞" is accepted as an
/// alias of V-Ninf.
StrategySchedule preset(std::string_view name);

/// Returns `schedule` with its coloring policy replaced by `mode`.
StrategySchedule attach_balancer(StrategySchedule schedule, BalanceMode mode);

}  // namespace gcol
