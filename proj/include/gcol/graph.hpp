#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcol {

using VertexId = std::int32_t;
using NetId = std::int32_t;
using EdgeIndex = std::int64_t;

/// Thrown when a square matrix is not structurally symmetric (or not square).
class SymmetryError : public std::runtime_error {
public:
    SymmetryError(const std::string& what, VertexId row, VertexId col)
        : std::runtime_error(what), row_(row), col_(col) {}

    VertexId row() const { return row_; }
    VertexId col() const { return col_; }

private:
    VertexId row_;
    VertexId col_;
};

/**
 * Bipartite graph stored as two CSR views over the same edge set.
 *
 * Vertices (V_A) are the entities being colored; nets (V_B) define the
 * neighborhoods. vtxs(v) lists the vertices of net v in insertion order,
 * nets(u) lists the nets of vertex u in ascending net id.
 */
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Builds from per-net member lists. Duplicate members inside a net are
    /// dropped keeping the first occurrence. Throws std::invalid_argument on
    /// out-of-range ids.
    static BipartiteGraph from_nets(VertexId num_vertices,
                                    const std::vector<std::vector<VertexId>>& nets);

    /// Builds from (net, vertex) pairs in the given order; duplicates are
    /// collapsed. `collapsed`, when non-null, receives the number dropped.
    static BipartiteGraph from_pairs(NetId num_nets, VertexId num_vertices,
                                     std::span<const std::pair<NetId, VertexId>> pairs,
                                     std::size_t* collapsed = nullptr);

    VertexId num_vertices() const { return num_vertices_; }
    NetId num_nets() const { return num_nets_; }
    EdgeIndex num_edges() const { return static_cast<EdgeIndex>(net_members_.size()); }

    std::span<const VertexId> vtxs(NetId v) const {
        return {net_members_.data() + net_offsets_[v],
                static_cast<std::size_t>(net_offsets_[v + 1] - net_offsets_[v])};
    }
    std::span<const NetId> nets(VertexId u) const {
        return {vertex_nets_.data() + vertex_offsets_[u],
                static_cast<std::size_t>(vertex_offsets_[u + 1] - vertex_offsets_[u])};
    }

    std::span<const EdgeIndex> net_offsets() const { return net_offsets_; }
    std::span<const VertexId> net_members() const { return net_members_; }
    std::span<const EdgeIndex> vertex_offsets() const { return vertex_offsets_; }
    std::span<const NetId> vertex_nets() const { return vertex_nets_; }

    /// Full structural check; returns a description of the first broken
    /// invariant, or nullopt.
    std::optional<std::string> check_invariants() const;

private:
    void build_vertex_view();

    VertexId num_vertices_ = 0;
    NetId num_nets_ = 0;
    std::vector<EdgeIndex> net_offsets_{0};
    std::vector<VertexId> net_members_;
    std::vector<EdgeIndex> vertex_offsets_{0};
    std::vector<NetId> vertex_nets_;
};

/// Symmetric adjacency CSR without self-loops, used for distance-2 coloring.
class UnipartiteGraph {
public:
    UnipartiteGraph() = default;

    /// Undirected edge list; each edge is stored in both directions in the
    /// order given. Self-loops and repeated edges are dropped.
    static UnipartiteGraph from_edges(VertexId num_vertices,
                                      std::span<const std::pair<VertexId, VertexId>> edges);

    /// Adopts prebuilt CSR arrays. Throws std::invalid_argument when they do
    /// not satisfy the invariants.
    static UnipartiteGraph from_csr(std::vector<EdgeIndex> offsets, std::vector<VertexId> adjacency);

    VertexId num_vertices() const { return static_cast<VertexId>(offsets_.size() - 1); }
    EdgeIndex num_arcs() const { return static_cast<EdgeIndex>(adjacency_.size()); }

    std::span<const VertexId> nbor(VertexId v) const {
        return {adjacency_.data() + offsets_[v],
                static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }

    std::span<const EdgeIndex> offsets() const { return offsets_; }
    std::span<const VertexId> adjacency() const { return adjacency_; }

    std::optional<std::string> check_invariants() const;

private:
    std::vector<EdgeIndex> offsets_{0};
    std::vector<VertexId> adjacency_;
};

struct DegreeStats {
    std::int64_t max_net_size = 0;
    std::int64_t max_vertex_degree = 0;
    /// Largest per-vertex sum of (|neighbor list| - 1) over the lists it lives in.
    std::int64_t max_d2_degree_bound = 0;
    double mean_net_size = 0.0;
    double stddev_net_size = 0.0;
};

DegreeStats degree_stats(const BipartiteGraph& g);

/// For a unipartite graph the "nets" are the closed neighborhoods: the
/// net-size fields describe |nbor(v)| and the d2 bound is Σ |nbor(u)| over u ∈ nbor(v).
DegreeStats degree_stats(const UnipartiteGraph& g);

/// Interprets a square, structurally symmetric pattern as an undirected graph
/// (diagonal dropped). Throws SymmetryError otherwise.
UnipartiteGraph to_unipartite(const BipartiteGraph& g);

/// Square pattern A ∪ Aᵀ. Throws std::invalid_argument when not square.
BipartiteGraph symmetrize(const BipartiteGraph& g);

}  // namespace gcol
