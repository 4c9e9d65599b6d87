#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// perm[i] is the id of the i-th vertex to process.
struct VertexOrder {
    std::vector<VertexId> perm;

    std::size_t size() const { return perm.size(); }
    bool is_permutation() const;
};

enum class OrderKind { natural, smallest_last, random };

std::string_view to_string(OrderKind k);
/// Throws std::invalid_argument on an unknown name.
OrderKind parse_order_kind(std::string_view name);

VertexOrder natural_order(VertexId n);
VertexOrder random_order(VertexId n, std::uint64_t seed);

/// Smallest-last order over distinct distance-2 degrees: repeatedly peel a
/// vertex of minimum current degree (smallest id on ties), then reverse the
/// peeling sequence.
VertexOrder smallest_last_order(const BipartiteGraph& g);
VertexOrder smallest_last_order(const UnipartiteGraph& g);

template <class Graph>
VertexOrder make_order(const Graph& g, OrderKind kind, std::uint64_t seed = 0) {
    switch (kind) {
        case OrderKind::smallest_last: return smallest_last_order(g);
        case OrderKind::random: return random_order(g.num_vertices(), seed);
        case OrderKind::natural: break;
    }
    return natural_order(g.num_vertices());
}

}  // namespace gcol
