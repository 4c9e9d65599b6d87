#include "gcol/graph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gcol {

namespace {

std::string describe_pair(const char* what, std::int64_t a, std::int64_t b) {
    std::ostringstream os;
    os << what << " (" << a << ", " << b << ")";
    return os.str();
}

}  // namespace

BipartiteGraph BipartiteGraph::from_nets(VertexId num_vertices,
                                         const std::vector<std::vector<VertexId>>& nets) {
    if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
    BipartiteGraph g;
    g.num_vertices_ = num_vertices;
    g.num_nets_ = static_cast<NetId>(nets.size());
    g.net_offsets_.assign(1, 0);
    g.net_offsets_.reserve(nets.size() + 1);

    // last_seen[u] == net id + 1 when u was already added to the current net
    std::vector<NetId> last_seen(static_cast<std::size_t>(num_vertices), 0);
    for (NetId v = 0; v < g.num_nets_; ++v) {
        for (VertexId u : nets[v]) {
            if (u < 0 || u >= num_vertices)
                throw std::invalid_argument(describe_pair("vertex id out of range in net", v, u));
            if (last_seen[u] == v + 1) continue;
            last_seen[u] = v + 1;
            g.net_members_.push_back(u);
        }
        g.net_offsets_.push_back(static_cast<EdgeIndex>(g.net_members_.size()));
    }
    g.build_vertex_view();
    return g;
}

BipartiteGraph BipartiteGraph::from_pairs(NetId num_nets, VertexId num_vertices,
                                          std::span<const std::pair<NetId, VertexId>> pairs,
                                          std::size_t* collapsed) {
    if (num_nets < 0 || num_vertices < 0) throw std::invalid_argument("negative dimension");
    std::vector<std::vector<VertexId>> nets(static_cast<std::size_t>(num_nets));
    for (auto [v, u] : pairs) {
        if (v < 0 || v >= num_nets)
            throw std::invalid_argument(describe_pair("net id out of range", v, u));
        nets[v].push_back(u);
    }
    BipartiteGraph g = from_nets(num_vertices, nets);
    if (collapsed) *collapsed = pairs.size() - g.net_members_.size();
    return g;
}

void BipartiteGraph::build_vertex_view() {
    vertex_offsets_.assign(static_cast<std::size_t>(num_vertices_) + 1, 0);
    for (VertexId u : net_members_) ++vertex_offsets_[u + 1];
    for (VertexId u = 0; u < num_vertices_; ++u) vertex_offsets_[u + 1] += vertex_offsets_[u];

    vertex_nets_.resize(net_members_.size());
    std::vector<EdgeIndex> cursor(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
    for (NetId v = 0; v < num_nets_; ++v)
        for (VertexId u : vtxs(v)) vertex_nets_[cursor[u]++] = v;
}

std::optional<std::string> BipartiteGraph::check_invariants() const {
    auto check_offsets = [](std::span<const EdgeIndex> off, std::size_t count,
                            std::size_t flat) -> std::optional<std::string> {
        if (off.size() != count + 1) return "offset array has wrong length";
        if (off.front() != 0) return "offset array does not start at 0";
        for (std::size_t i = 0; i + 1 < off.size(); ++i)
            if (off[i] > off[i + 1]) return describe_pair("offsets decrease at", i, i + 1);
        if (static_cast<std::size_t>(off.back()) != flat) return "last offset differs from flat length";
        return std::nullopt;
    };
    if (auto e = check_offsets(net_offsets_, num_nets_, net_members_.size())) return "net view: " + *e;
    if (auto e = check_offsets(vertex_offsets_, num_vertices_, vertex_nets_.size()))
        return "vertex view: " + *e;
    if (net_members_.size() != vertex_nets_.size()) return "edge counts differ between views";

    std::vector<std::int64_t> seen(static_cast<std::size_t>(std::max(num_vertices_, num_nets_)), -1);
    for (NetId v = 0; v < num_nets_; ++v) {
        for (VertexId u : vtxs(v)) {
            if (u < 0 || u >= num_vertices_) return describe_pair("vertex id out of range in net", v, u);
            if (seen[u] == v) return describe_pair("duplicate member in net", v, u);
            seen[u] = v;
        }
    }
    std::fill(seen.begin(), seen.end(), -1);
    for (VertexId u = 0; u < num_vertices_; ++u) {
        for (NetId v : nets(u)) {
            if (v < 0 || v >= num_nets_) return describe_pair("net id out of range at vertex", u, v);
            if (seen[v] == u) return describe_pair("duplicate net at vertex", u, v);
            seen[v] = u;
        }
    }
    // u ∈ vtxs(v) ⇔ v ∈ nets(u): every net entry must be matched in the
    // vertex view, and the totals are already equal.
    for (NetId v = 0; v < num_nets_; ++v) {
        for (VertexId u : vtxs(v)) {
            auto ns = nets(u);
            if (std::find(ns.begin(), ns.end(), v) == ns.end())
                return describe_pair("net lists vertex missing from vertex view", v, u);
        }
    }
    return std::nullopt;
}

UnipartiteGraph UnipartiteGraph::from_edges(VertexId num_vertices,
                                            std::span<const std::pair<VertexId, VertexId>> edges) {
    if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(num_vertices));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
            throw std::invalid_argument(describe_pair("edge endpoint out of range", a, b));
        if (a == b) continue;
        if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    UnipartiteGraph g;
    g.offsets_.assign(1, 0);
    for (auto& list : adj) {
        g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
        g.offsets_.push_back(static_cast<EdgeIndex>(g.adjacency_.size()));
    }
    return g;
}

UnipartiteGraph UnipartiteGraph::from_csr(std::vector<EdgeIndex> offsets, std::vector<VertexId> adjacency) {
    UnipartiteGraph g;
    g.offsets_ = std::move(offsets);
    g.adjacency_ = std::move(adjacency);
    if (g.offsets_.empty()) throw std::invalid_argument("offset array is empty");
    if (auto e = g.check_invariants()) throw std::invalid_argument(*e);
    return g;
}

std::optional<std::string> UnipartiteGraph::check_invariants() const {
    if (offsets_.empty() || offsets_.front() != 0) return "offset array does not start at 0";
    for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
        if (offsets_[i] > offsets_[i + 1]) return describe_pair("offsets decrease at", i, i + 1);
    if (static_cast<std::size_t>(offsets_.back()) != adjacency_.size())
        return "last offset differs from adjacency length";

    const VertexId n = num_vertices();
    std::vector<VertexId> seen(static_cast<std::size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : nbor(v)) {
            if (u < 0 || u >= n) return describe_pair("neighbor out of range", v, u);
            if (u == v) return describe_pair("self-loop", v, u);
            if (seen[u] == v) return describe_pair("duplicate neighbor", v, u);
            seen[u] = v;
        }
    }
    // symmetry via sorted copies of each list
    std::vector<std::vector<VertexId>> sorted(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        auto list = nbor(v);
        sorted[v].assign(list.begin(), list.end());
        std::sort(sorted[v].begin(), sorted[v].end());
    }
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : sorted[v])
            if (!std::binary_search(sorted[u].begin(), sorted[u].end(), v))
                return describe_pair("asymmetric arc", v, u);
    return std::nullopt;
}

DegreeStats degree_stats(const BipartiteGraph& g) {
    DegreeStats s;
    const NetId m = g.num_nets();
    double sum = 0.0;
    for (NetId v = 0; v < m; ++v) {
        const auto size = static_cast<std::int64_t>(g.vtxs(v).size());
        s.max_net_size = std::max(s.max_net_size, size);
        sum += static_cast<double>(size);
    }
    if (m > 0) {
        s.mean_net_size = sum / m;
        double sq = 0.0;
        for (NetId v = 0; v < m; ++v) {
            const double d = static_cast<double>(g.vtxs(v).size()) - s.mean_net_size;
            sq += d * d;
        }
        s.stddev_net_size = std::sqrt(sq / m);
    }
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const auto ns = g.nets(u);
        s.max_vertex_degree = std::max(s.max_vertex_degree, static_cast<std::int64_t>(ns.size()));
        std::int64_t bound = 0;
        for (NetId v : ns) bound += static_cast<std::int64_t>(g.vtxs(v).size()) - 1;
        s.max_d2_degree_bound = std::max(s.max_d2_degree_bound, bound);
    }
    return s;
}

DegreeStats degree_stats(const UnipartiteGraph& g) {
    DegreeStats s;
    const VertexId n = g.num_vertices();
    double sum = 0.0;
    for (VertexId v = 0; v < n; ++v) {
        const auto deg = static_cast<std::int64_t>(g.nbor(v).size());
        s.max_vertex_degree = std::max(s.max_vertex_degree, deg);
        sum += static_cast<double>(deg);
    }
    s.max_net_size = s.max_vertex_degree;
    if (n > 0) {
        s.mean_net_size = sum / n;
        double sq = 0.0;
        for (VertexId v = 0; v < n; ++v) {
            const double d = static_cast<double>(g.nbor(v).size()) - s.mean_net_size;
            sq += d * d;
        }
        s.stddev_net_size = std::sqrt(sq / n);
    }
    for (VertexId v = 0; v < n; ++v) {
        const auto adj = g.nbor(v);
        auto bound = static_cast<std::int64_t>(adj.size());
        for (VertexId u : adj) bound += static_cast<std::int64_t>(g.nbor(u).size()) - 1;
        s.max_d2_degree_bound = std::max(s.max_d2_degree_bound, bound);
    }
    return s;
}

UnipartiteGraph to_unipartite(const BipartiteGraph& g) {
    if (g.num_nets() != g.num_vertices()) {
        std::ostringstream os;
        os << "matrix is not square (" << g.num_nets() << " x " << g.num_vertices() << ")";
        throw SymmetryError(os.str(), g.num_nets(), g.num_vertices());
    }
    const VertexId n = g.num_vertices();
    // Row i is vtxs(i); column i is nets(i) (sorted). Symmetric iff they agree as sets.
    std::vector<VertexId> row;
    for (VertexId i = 0; i < n; ++i) {
        auto r = g.vtxs(i);
        row.assign(r.begin(), r.end());
        std::sort(row.begin(), row.end());
        auto col = g.nets(i);
        if (std::equal(row.begin(), row.end(), col.begin(), col.end())) continue;
        // first entry present on one side only
        auto rit = row.begin();
        auto cit = col.begin();
        while (rit != row.end() && cit != col.end() && *rit == *cit) { ++rit; ++cit; }
        VertexId a;
        VertexId b;
        if (cit == col.end() || (rit != row.end() && *rit < *cit)) {
            a = i; b = *rit;  // (i, j) present, (j, i) missing
        } else {
            a = *cit; b = i;  // (j, i) present, (i, j) missing
        }
        std::ostringstream os;
        os << "matrix is not structurally symmetric: entry (" << a + 1 << ", " << b + 1
           << ") has no mirror (" << b + 1 << ", " << a + 1 << ")";
        throw SymmetryError(os.str(), a, b);
    }

    std::vector<EdgeIndex> offsets(1, 0);
    std::vector<VertexId> adjacency;
    adjacency.reserve(static_cast<std::size_t>(g.num_edges()));
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j : g.vtxs(i))
            if (j != i) adjacency.push_back(j);
        offsets.push_back(static_cast<EdgeIndex>(adjacency.size()));
    }
    return UnipartiteGraph::from_csr(std::move(offsets), std::move(adjacency));
}

BipartiteGraph symmetrize(const BipartiteGraph& g) {
    if (g.num_nets() != g.num_vertices()) throw std::invalid_argument("symmetrize needs a square pattern");
    std::vector<std::vector<VertexId>> rows(static_cast<std::size_t>(g.num_nets()));
    for (NetId i = 0; i < g.num_nets(); ++i) {
        auto r = g.vtxs(i);
        rows[i].assign(r.begin(), r.end());
    }
    for (NetId i = 0; i < g.num_nets(); ++i)
        for (VertexId j : g.vtxs(i)) rows[j].push_back(i);
    return BipartiteGraph::from_nets(g.num_vertices(), rows);
}

}  // namespace gcol
