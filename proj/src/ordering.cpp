#include "gcol/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace gcol {

namespace {

// Visits every distinct vertex at distance <= 2 from u (u excluded).
class TwoHopWalker {
public:
    explicit TwoHopWalker(VertexId n) : stamp_(static_cast<std::size_t>(n), 0) {}

    template <class Visit>
    void walk(const BipartiteGraph& g, VertexId u, Visit&& visit) {
        next_epoch(u);
        for (NetId v : g.nets(u))
            for (VertexId x : g.vtxs(v)) offer(x, visit);
    }

    template <class Visit>
    void walk(const UnipartiteGraph& g, VertexId u, Visit&& visit) {
        next_epoch(u);
        for (VertexId x : g.nbor(u)) {
            offer(x, visit);
            for (VertexId y : g.nbor(x)) offer(y, visit);
        }
    }

private:
    void next_epoch(VertexId u) {
        ++epoch_;
        stamp_[u] = epoch_;
    }

    template <class Visit>
    void offer(VertexId x, Visit& visit) {
        if (stamp_[x] == epoch_) return;
        stamp_[x] = epoch_;
        visit(x);
    }

    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
};

template <class Graph>
VertexOrder smallest_last_impl(const Graph& g) {
    const VertexId n = g.num_vertices();
    TwoHopWalker walker(n);
    std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
    std::int64_t max_degree = 0;
    for (VertexId u = 0; u < n; ++u) {
        walker.walk(g, u, [&](VertexId) { ++degree[u]; });
        max_degree = std::max(max_degree, degree[u]);
    }

    // bucket[d] holds the live vertices of current degree d, ordered by id
    std::vector<std::set<VertexId>> bucket(static_cast<std::size_t>(max_degree) + 1);
    for (VertexId u = 0; u < n; ++u) bucket[degree[u]].insert(u);

    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<VertexId> peeled;
    peeled.reserve(static_cast<std::size_t>(n));
    std::int64_t low = 0;
    while (static_cast<VertexId>(peeled.size()) < n) {
        while (bucket[low].empty()) ++low;
        const VertexId u = *bucket[low].begin();
        bucket[low].erase(bucket[low].begin());
        removed[u] = true;
        peeled.push_back(u);
        walker.walk(g, u, [&](VertexId x) {
            if (removed[x]) return;
            bucket[degree[x]].erase(x);
            --degree[x];
            bucket[degree[x]].insert(x);
        });
        // neighbours drop by at most one
        low = std::max<std::int64_t>(low - 1, 0);
    }
    std::reverse(peeled.begin(), peeled.end());
    return VertexOrder{std::move(peeled)};
}

}  // namespace

bool VertexOrder::is_permutation() const {
    std::vector<bool> seen(perm.size(), false);
    for (VertexId v : perm) {
        if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::string_view to_string(OrderKind k) {
    switch (k) {
        case OrderKind::smallest_last: return "smallest-last";
        case OrderKind::random: return "random";
        case OrderKind::natural: break;
    }
    return "natural";
}

OrderKind parse_order_kind(std::string_view name) {
    if (name == "natural") return OrderKind::natural;
    if (name == "smallest-last") return OrderKind::smallest_last;
    if (name == "random") return OrderKind::random;
    throw std::invalid_argument("unknown order '" + std::string(name) + "'");
}

VertexOrder natural_order(VertexId n) {
    VertexOrder order;
    order.perm.resize(static_cast<std::size_t>(std::max<VertexId>(n, 0)));
    std::iota(order.perm.begin(), order.perm.end(), 0);
    return order;
}

VertexOrder random_order(VertexId n, std::uint64_t seed) {
    VertexOrder order = natural_order(n);
    std::mt19937_64 rng(seed);
    std::shuffle(order.perm.begin(), order.perm.end(), rng);
    return order;
}

VertexOrder smallest_last_order(const BipartiteGraph& g) { return smallest_last_impl(g); }
VertexOrder smallest_last_order(const UnipartiteGraph& g) { return smallest_last_impl(g); }

}  // namespace gcol
