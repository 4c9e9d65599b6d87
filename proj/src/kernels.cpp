#include "gcol/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "parallel.hpp"

namespace gcol {

using detail::for_each_claimed;

PhaseContext::PhaseContext(int workers_, std::size_t forbidden_capacity) : workers(workers_) {
    if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
    scratch.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) scratch.emplace_back(forbidden_capacity);
}

namespace {

std::size_t clamp_capacity(std::int64_t bound, VertexId n) {
    const std::int64_t cap = std::min<std::int64_t>(bound, 2 * static_cast<std::int64_t>(n));
    return static_cast<std::size_t>(std::max<std::int64_t>(cap, 0)) + 2;
}

[[noreturn]] void negative_color(const char* kernel, std::int64_t owner, VertexId vertex) {
    std::fprintf(stderr, "gcol: %s assigned a negative color to vertex %d while processing %lld\n", kernel, vertex,
                 static_cast<long long>(owner));
    std::abort();
}

/// Runs the removal predicate over `work` and assembles the next queue in
/// the context's queue mode.
template <class IsConflict>
std::vector<VertexId> collect_conflicts(std::span<const VertexId> work, PhaseContext& ctx, IsConflict&& is_conflict) {
    if (ctx.queue_mode == QueueMode::shared_append) {
        detail::SharedQueue queue(work.size());
        for_each_claimed(work.size(), ctx.workers, ctx.chunk_size, [&](int, std::size_t i) {
            if (is_conflict(work[i])) queue.push(work[i]);
        });
        return std::move(queue).take();
    }
    for (auto& s : ctx.scratch) s.next.clear();
    for_each_claimed(work.size(), ctx.workers, ctx.chunk_size, [&](int t, std::size_t i) {
        if (is_conflict(work[i])) ctx.scratch[t].next.push_back(work[i]);
    });
    std::vector<VertexId> out;
    for (auto& s : ctx.scratch) out.insert(out.end(), s.next.begin(), s.next.end());
    return out;
}

std::vector<VertexId> gather(const Coloring& colors, PhaseContext& ctx) {
    std::vector<std::vector<VertexId>> buffers(static_cast<std::size_t>(ctx.workers));
    for (std::size_t t = 0; t < buffers.size(); ++t) buffers[t].swap(ctx.scratch[t].next);
    auto out = detail::gather_uncolored(colors, ctx.workers, buffers);
    for (std::size_t t = 0; t < buffers.size(); ++t) buffers[t].swap(ctx.scratch[t].next);
    return out;
}

/// Assigns colors to the collected W_local of one net / closed neighborhood.
/// With no balancing policy this is reverse first-fit from `start`.
void assign_local(WorkerScratch& s, Coloring& colors, BalanceMode policy, Color start, const char* kernel,
                  std::int64_t owner) {
    if (policy == BalanceMode::none) {
        Color col = start;
        for (VertexId u : s.local) {
            while (s.forbidden.contains(col)) --col;
            if (col < 0) negative_color(kernel, owner, u);
            colors.store(u, col);
            --col;
        }
        return;
    }
    for (VertexId u : s.local) {
        const Color col = select_color(policy, s.forbidden, u, s.balance);
        colors.store(u, col);
        s.forbidden.insert(col);
    }
}

}  // namespace

std::size_t initial_forbidden_capacity(const BipartiteGraph& g) {
    return clamp_capacity(degree_stats(g).max_d2_degree_bound, g.num_vertices());
}

std::size_t initial_forbidden_capacity(const UnipartiteGraph& g) {
    return clamp_capacity(degree_stats(g).max_d2_degree_bound, g.num_vertices());
}

void bgpc_color_vertex(const BipartiteGraph& g, std::span<const VertexId> work, Coloring& colors, PhaseContext& ctx) {
    for_each_claimed(work.size(), ctx.workers, ctx.chunk_size, [&](int t, std::size_t i) {
        WorkerScratch& s = ctx.scratch[t];
        const VertexId w = work[i];
        s.forbidden.clear();
        for (NetId v : g.nets(w)) {
            for (VertexId u : g.vtxs(v)) {
                if (u == w) continue;
                const Color c = colors.load(u);
                if (c != kUncolored) s.forbidden.insert(c);
            }
        }
        colors.store(w, select_color(ctx.policy, s.forbidden, w, s.balance));
    });
}

std::vector<VertexId> bgpc_remove_conflicts_vertex(const BipartiteGraph& g, std::span<const VertexId> work,
                                                   Coloring& colors, PhaseContext& ctx) {
    return collect_conflicts(work, ctx, [&](VertexId w) {
        const Color cw = colors.load(w);
        if (cw == kUncolored) return true;
        for (NetId v : g.nets(w))
            for (VertexId u : g.vtxs(v))
                if (u < w && colors.load(u) == cw) return true;
        return false;
    });
}

void bgpc_color_net_v1(const BipartiteGraph& g, Coloring& colors, PhaseContext& ctx) {
    for_each_claimed(static_cast<std::size_t>(g.num_nets()), ctx.workers, ctx.chunk_size, [&](int t, std::size_t i) {
        ForbiddenMarker& forbidden = ctx.scratch[t].forbidden;
        forbidden.clear();
        Color cursor = 0;  // monotone within the net
        for (VertexId u : g.vtxs(static_cast<NetId>(i))) {
            Color c = colors.load(u);
            if (c == kUncolored || forbidden.contains(c)) {
                while (forbidden.contains(cursor)) ++cursor;
                c = cursor;
                colors.store(u, c);
            }
            forbidden.insert(c);
        }
    });
}

void bgpc_color_net(const BipartiteGraph& g, Coloring& colors, PhaseContext& ctx) {
    for_each_claimed(static_cast<std::size_t>(g.num_nets()), ctx.workers, ctx.chunk_size, [&](int t, std::size_t i) {
        WorkerScratch& s = ctx.scratch[t];
        const auto net = static_cast<NetId>(i);
        const auto members = g.vtxs(net);
        s.forbidden.clear();
        s.local.clear();
        for (VertexId u : members) {
            const Color c = colors.load(u);
            if (c != kUncolored && !s.forbidden.contains(c))
                s.forbidden.insert(c);
            else
                s.local.push_back(u);
        }
        assign_local(s, colors, ctx.policy, static_cast<Color>(members.size()) - 1, "bgpc_color_net", net);
    });
}

std::vector<VertexId> bgpc_remove_conflicts_net(const BipartiteGraph& g, Coloring& colors, PhaseContext& ctx) {
    for_each_claimed(static_cast<std::size_t>(g.num_nets()), ctx.workers, ctx.chunk_size, [&](int t, std::size_t i) {
        ForbiddenMarker& forbidden = ctx.scratch[t].forbidden;
        forbidden.clear();
        for (VertexId u : g.vtxs(static_cast<NetId>(i))) {
            const Color c = colors.load(u);
            if (c == kUncolored) continue;
            if (forbidden.contains(c))
                colors.store(u, kUncolored);
            else
                forbidden.insert(c);
        }
    });
    return gather(colors, ctx);
}

void d2gc_color_vertex(const UnipartiteGraph& g, std::span<const VertexId> work, Coloring& colors, PhaseContext& ctx) {
    for_each_claimed(work.size(), ctx.workers, ctx.chunk_size, [&](int t, std::size_t i) {
        WorkerScratch& s = ctx.scratch[t];
        const VertexId w = work[i];
        s.forbidden.clear();
        for (VertexId u : g.nbor(w)) {
            const Color c = colors.load(u);
            if (c != kUncolored) s.forbidden.insert(c);
            for (VertexId x : g.nbor(u)) {
                if (x == w) continue;
                const Color cx = colors.load(x);
                if (cx != kUncolored) s.forbidden.insert(cx);
            }
        }
        colors.store(w, select_color(ctx.policy, s.forbidden, w, s.balance));
    });
}

std::vector<VertexId> d2gc_remove_conflicts_vertex(const UnipartiteGraph& g, std::span<const VertexId> work,
                                                   Coloring& colors, PhaseContext& ctx) {
    return collect_conflicts(work, ctx, [&](VertexId w) {
        const Color cw = colors.load(w);
        if (cw == kUncolored) return true;
        for (VertexId u : g.nbor(w)) {
            if (u < w && colors.load(u) == cw) return true;
            for (VertexId x : g.nbor(u))
                if (x < w && colors.load(x) == cw) return true;
        }
        return false;
    });
}

void d2gc_color_net(const UnipartiteGraph& g, Coloring& colors, PhaseContext& ctx) {
    for_each_claimed(static_cast<std::size_t>(g.num_vertices()), ctx.workers, ctx.chunk_size,
                     [&](int t, std::size_t i) {
                         WorkerScratch& s = ctx.scratch[t];
                         const auto v = static_cast<VertexId>(i);
                         const auto adj = g.nbor(v);
                         s.forbidden.clear();
                         s.local.clear();
                         const Color cv = colors.load(v);
                         if (cv != kUncolored)
                             s.forbidden.insert(cv);
                         else
                             s.local.push_back(v);
                         for (VertexId u : adj) {
                             const Color c = colors.load(u);
                             if (c != kUncolored && !s.forbidden.contains(c))
                                 s.forbidden.insert(c);
                             else
                                 s.local.push_back(u);
                         }
                         assign_local(s, colors, ctx.policy, static_cast<Color>(adj.size()), "d2gc_color_net", v);
                     });
}

std::vector<VertexId> d2gc_remove_conflicts_net(const UnipartiteGraph& g, Coloring& colors, PhaseContext& ctx) {
    for_each_claimed(static_cast<std::size_t>(g.num_vertices()), ctx.workers, ctx.chunk_size,
                     [&](int t, std::size_t i) {
                         ForbiddenMarker& forbidden = ctx.scratch[t].forbidden;
                         const auto v = static_cast<VertexId>(i);
                         forbidden.clear();
                         const Color cv = colors.load(v);
                         if (cv != kUncolored) forbidden.insert(cv);
                         for (VertexId u : g.nbor(v)) {
                             const Color c = colors.load(u);
                             if (c == kUncolored) continue;
                             if (forbidden.contains(c))
                                 colors.store(u, kUncolored);
                             else
                                 forbidden.insert(c);
                         }
                     });
    return gather(colors, ctx);
}

}  // namespace gcol
