#include "gcol/engine.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gcol/kernels.hpp"
#include "parallel.hpp"

namespace gcol {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

struct BipartiteOps {
    static constexpr Problem problem = Problem::bgpc;
    const BipartiteGraph& g;

    void color_vertex(std::span<const VertexId> w, Coloring& c, PhaseContext& ctx) const {
        bgpc_color_vertex(g, w, c, ctx);
    }
    void color_net(Coloring& c, PhaseContext& ctx, NetColoringKernel kernel) const {
        if (kernel == NetColoringKernel::first_fit_v1)
            bgpc_color_net_v1(g, c, ctx);
        else
            bgpc_color_net(g, c, ctx);
    }
    std::vector<VertexId> remove_vertex(std::span<const VertexId> w, Coloring& c, PhaseContext& ctx) const {
        return bgpc_remove_conflicts_vertex(g, w, c, ctx);
    }
    std::vector<VertexId> remove_net(Coloring& c, PhaseContext& ctx) const {
        return bgpc_remove_conflicts_net(g, c, ctx);
    }
    std::size_t net_count() const { return static_cast<std::size_t>(g.num_nets()); }
};

struct UnipartiteOps {
    static constexpr Problem problem = Problem::d2gc;
    const UnipartiteGraph& g;

    void color_vertex(std::span<const VertexId> w, Coloring& c, PhaseContext& ctx) const {
        d2gc_color_vertex(g, w, c, ctx);
    }
    void color_net(Coloring& c, PhaseContext& ctx, NetColoringKernel) const { d2gc_color_net(g, c, ctx); }
    std::vector<VertexId> remove_vertex(std::span<const VertexId> w, Coloring& c, PhaseContext& ctx) const {
        return d2gc_remove_conflicts_vertex(g, w, c, ctx);
    }
    std::vector<VertexId> remove_net(Coloring& c, PhaseContext& ctx) const {
        return d2gc_remove_conflicts_net(g, c, ctx);
    }
    std::size_t net_count() const { return static_cast<std::size_t>(g.num_vertices()); }
};

template <class Graph, class Ops>
RunResult drive(const Graph& g, Ops ops, const VertexOrder& order, const StrategySchedule& schedule, int workers) {
    if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
    const VertexId n = g.num_vertices();
    if (order.size() != static_cast<std::size_t>(n) || !order.is_permutation())
        throw std::invalid_argument("vertex order is not a permutation of the graph's vertices");

    RunResult result{Coloring(n), {}};
    Coloring& colors = result.coloring;
    PhaseContext ctx(workers, initial_forbidden_capacity(g));
    ctx.chunk_size = schedule.chunk_size;
    ctx.policy = schedule.balance;
    ctx.queue_mode = schedule.queue_mode;

    std::vector<IterationRecord> records;
    bool fallback = false;
    std::size_t fallback_vertices = 0;

    const auto run_start = Clock::now();
    std::vector<VertexId> work = order.perm;
    for (int iteration = 1; !work.empty(); ++iteration) {
        if (iteration > schedule.max_iterations) {
            // Sequential vertex-based first-fit over what is left always
            // yields a valid coloring in one pass.
            fallback = true;
            fallback_vertices = work.size();
            PhaseContext seq(1, initial_forbidden_capacity(g));
            seq.chunk_size = 0;
            ops.color_vertex(work, colors, seq);
            break;
        }

        IterationRecord rec;
        rec.iteration = iteration;
        rec.coloring = schedule.coloring_strategy(iteration);
        rec.removal = schedule.conflict_strategy(iteration);
        rec.queue_before = work.size();

        const auto t0 = Clock::now();
        if (rec.coloring == PhaseKind::net) {
            rec.grain = detail::grain_for(ops.net_count(), workers, schedule.chunk_size);
            ops.color_net(colors, ctx, schedule.net_kernel);
        } else {
            rec.grain = detail::grain_for(work.size(), workers, schedule.chunk_size);
            ops.color_vertex(work, colors, ctx);
        }
        const auto t1 = Clock::now();

        std::vector<VertexId> next;
        if (rec.removal == PhaseKind::net) {
            next = ops.remove_net(colors, ctx);
        } else if (rec.coloring == PhaseKind::net) {
            // net coloring may have touched any vertex
            std::vector<VertexId> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            next = ops.remove_vertex(all, colors, ctx);
        } else {
            next = ops.remove_vertex(work, colors, ctx);
        }
        const auto t2 = Clock::now();

        rec.coloring_ms = ms_between(t0, t1);
        rec.removal_ms = ms_between(t1, t2);
        rec.total_ms = ms_between(t0, t2);
        rec.queue_after = next.size();
        records.push_back(rec);
        work = std::move(next);
    }
    const double total_ms = ms_between(run_start, Clock::now());

    result.stats = color_stats(colors);
    result.stats.problem = std::string(to_string(Ops::problem));
    result.stats.algorithm = schedule.name;
    result.stats.balance = std::string(to_string(schedule.balance));
    result.stats.workers = workers;
    result.stats.iterations = std::move(records);
    result.stats.total_ms = total_ms;
    result.stats.fallback_used = fallback;
    result.stats.fallback_vertices = fallback_vertices;
    return result;
}

}  // namespace

std::string_view to_string(Problem p) { return p == Problem::d2gc ? "d2gc" : "bgpc"; }

Problem parse_problem(std::string_view name) {
    if (name == "bgpc") return Problem::bgpc;
    if (name == "d2gc") return Problem::d2gc;
    throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

RunResult run(const BipartiteGraph& g, const VertexOrder& order, const StrategySchedule& schedule, int workers) {
    return drive(g, BipartiteOps{g}, order, schedule, workers);
}

RunResult run(const UnipartiteGraph& g, const VertexOrder& order, const StrategySchedule& schedule, int workers) {
    return drive(g, UnipartiteOps{g}, order, schedule, workers);
}

}  // namespace gcol
