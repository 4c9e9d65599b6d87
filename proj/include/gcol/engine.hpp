#pragma once

#include "gcol/coloring.hpp"
#include "gcol/graph.hpp"
#include "gcol/ordering.hpp"
#include "gcol/schedule.hpp"
#include "gcol/stats.hpp"

namespace gcol {

enum class Problem { bgpc, d2gc };

std::string_view to_string(Problem p);
Problem parse_problem(std::string_view name);

struct RunResult {
    Coloring coloring;
    ColoringStats stats;
};

/**
 * Speculative iterate-color-fix driver.
 *
 * Starting from W = order.perm, each iteration runs the schedule's coloring
 * phase, a barrier, then its conflict-removal phase, and continues with the
 * returned queue until it is empty. Vertex-based removal keeps stale colors of
 * requeued vertices; net-based removal resets them and the next queue is the
 * Uncolored set. If more than schedule.max_iterations iterations would be
 * needed, the remaining queue is finished by one sequential first-fit pass and
 * stats.fallback_used is set.
 *
 * Throws std::invalid_argument when workers < 1 or the order does not match
 * the graph.
 */
RunResult run(const BipartiteGraph& g, const VertexOrder& order, const StrategySchedule& schedule, int workers);
RunResult run(const UnipartiteGraph& g, const VertexOrder& order, const StrategySchedule& schedule, int workers);

}  // namespace gcol
