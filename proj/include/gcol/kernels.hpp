#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gcol/balance.hpp"
#include "gcol/coloring.hpp"
#include "gcol/forbidden.hpp"
#include "gcol/graph.hpp"
#include "gcol/schedule.hpp"

namespace gcol {

/// Everything a worker mutates during a phase. Allocated once per run; the
/// forbidden marker is stamp-cleared and the local queue is length-reset.
struct WorkerScratch {
    explicit WorkerScratch(std::size_t forbidden_capacity) : forbidden(forbidden_capacity) {}

    ForbiddenMarker forbidden;
    std::vector<VertexId> local;  // W_local of the net kernels
    std::vector<VertexId> next;   // private slice of the next work queue
    BalancerState balance;
};

/// Parallel settings shared by one run's phases plus the per-worker scratch.
struct PhaseContext {
    PhaseContext(int workers, std::size_t forbidden_capacity);

    int workers = 1;
    std::size_t chunk_size = 64;  // 0 = static split
    BalanceMode policy = BalanceMode::none;
    QueueMode queue_mode = QueueMode::local_merge;
    std::vector<WorkerScratch> scratch;
};

/// Initial forbidden-marker capacity for a graph: the distance-2 degree bound
/// (clamped to twice the vertex count) plus two.
std::size_t initial_forbidden_capacity(const BipartiteGraph& g);
std::size_t initial_forbidden_capacity(const UnipartiteGraph& g);

// Bipartite partial coloring.

/// Colors every w in `work` from the colors seen through nets(w).
void bgpc_color_vertex(const BipartiteGraph& g, std::span<const VertexId> work, Coloring& colors, PhaseContext& ctx);

/// Returns the members of `work` that share a net with a smaller id of the
/// same color (or are Uncolored). Colors are left untouched.
std::vector<VertexId> bgpc_remove_conflicts_vertex(const BipartiteGraph& g, std::span<const VertexId> work,
                                                   Coloring& colors, PhaseContext& ctx);

/// Single-pass net coloring: per net, first-fit from a monotone cursor for
/// every Uncolored or locally duplicated member. Ignores the balance policy.
void bgpc_color_net_v1(const BipartiteGraph& g, Coloring& colors, PhaseContext& ctx);

/// Two-pass net coloring with reverse first-fit from |vtxs(v)| - 1, or with
/// the context's balancing policy when one is set.
void bgpc_color_net(const BipartiteGraph& g, Coloring& colors, PhaseContext& ctx);

/// Per net, later holders of an already seen color are reset to Uncolored.
/// Returns all Uncolored vertices in ascending order.
std::vector<VertexId> bgpc_remove_conflicts_net(const BipartiteGraph& g, Coloring& colors, PhaseContext& ctx);

// Distance-2 coloring.

void d2gc_color_vertex(const UnipartiteGraph& g, std::span<const VertexId> work, Coloring& colors, PhaseContext& ctx);

std::vector<VertexId> d2gc_remove_conflicts_vertex(const UnipartiteGraph& g, std::span<const VertexId> work,
                                                   Coloring& colors, PhaseContext& ctx);

/// Net-style coloring over closed neighborhoods; reverse first-fit starts at
/// |nbor(v)| since v itself competes for a color.
void d2gc_color_net(const UnipartiteGraph& g, Coloring& colors, PhaseContext& ctx);

std::vector<VertexId> d2gc_remove_conflicts_net(const UnipartiteGraph& g, Coloring& colors, PhaseContext& ctx);

}  // namespace gcol
