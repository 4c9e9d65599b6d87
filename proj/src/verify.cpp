#include "gcol/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gcol {

namespace {

// color -> vertex holding it in the current group; valid when epoch matches
class ColorOwners {
public:
    explicit ColorOwners(std::span<const Color> colors) {
        Color top = -1;
        for (Color c : colors) top = std::max(top, c);
        epoch_of_.assign(static_cast<std::size_t>(top + 1), 0);
        owner_.assign(static_cast<std::size_t>(top + 1), -1);
    }

    void reset() { ++epoch_; }

    /// Claims color c for v; returns the earlier holder when c is taken.
    std::optional<VertexId> claim(Color c, VertexId v) {
        if (epoch_of_[c] == epoch_) return owner_[c];
        epoch_of_[c] = epoch_;
        owner_[c] = v;
        return std::nullopt;
    }

private:
    std::vector<std::uint64_t> epoch_of_;
    std::vector<VertexId> owner_;
    std::uint64_t epoch_ = 0;
};

std::optional<Violation> first_uncolored(std::span<const Color> colors) {
    for (std::size_t v = 0; v < colors.size(); ++v)
        if (colors[v] < 0) return Violation{ViolationKind::uncolored, static_cast<VertexId>(v), -1, -1};
    return std::nullopt;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Violation& v) {
    switch (v.kind) {
        case ViolationKind::uncolored:
            return os << "uncolored vertex " << v.first;
        case ViolationKind::bgpc_conflict:
            return os << "bgpc-conflict: vertices " << v.first << " and " << v.second << " share net " << v.via;
        case ViolationKind::d2_conflict:
            if (v.via < 0) return os << "d2-conflict: adjacent vertices " << v.first << " and " << v.second;
            return os << "d2-conflict: vertices " << v.first << " and " << v.second << " via " << v.via;
    }
    return os;
}

std::optional<Violation> verify_bgpc(const BipartiteGraph& g, std::span<const Color> colors, bool partial) {
    if (colors.size() != static_cast<std::size_t>(g.num_vertices()))
        throw std::invalid_argument("coloring length differs from the vertex count");
    if (!partial)
        if (auto u = first_uncolored(colors)) return u;

    ColorOwners owners(colors);
    for (NetId net = 0; net < g.num_nets(); ++net) {
        owners.reset();
        for (VertexId u : g.vtxs(net)) {
            if (colors[u] < 0) continue;
            if (auto prev = owners.claim(colors[u], u))
                return Violation{ViolationKind::bgpc_conflict, *prev, u, net};
        }
    }
    return std::nullopt;
}

std::optional<Violation> verify_d2gc(const UnipartiteGraph& g, std::span<const Color> colors, bool partial) {
    if (colors.size() != static_cast<std::size_t>(g.num_vertices()))
        throw std::invalid_argument("coloring length differs from the vertex count");
    if (!partial)
        if (auto u = first_uncolored(colors)) return u;

    // Any two vertices at distance <= 2 lie together in some closed
    // neighbourhood {v} ∪ nbor(v); check each one for repeated colors.
    ColorOwners owners(colors);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        owners.reset();
        if (colors[v] >= 0) owners.claim(colors[v], v);
        for (VertexId u : g.nbor(v)) {
            if (colors[u] < 0) continue;
            if (auto prev = owners.claim(colors[u], u)) {
                if (*prev == v) return Violation{ViolationKind::d2_conflict, std::min(v, u), std::max(v, u), -1};
                return Violation{ViolationKind::d2_conflict, std::min(*prev, u), std::max(*prev, u), v};
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexId> d2_neighborhood(const BipartiteGraph& g, VertexId v) {
    std::set<VertexId> out;
    for (NetId net : g.nets(v))
        for (VertexId u : g.vtxs(net))
            if (u != v) out.insert(u);
    return {out.begin(), out.end()};
}

std::vector<VertexId> d2_neighborhood(const UnipartiteGraph& g, VertexId v) {
    std::set<VertexId> out;
    for (VertexId u : g.nbor(v)) {
        out.insert(u);
        for (VertexId x : g.nbor(u))
            if (x != v) out.insert(x);
    }
    return {out.begin(), out.end()};
}

std::int64_t count_distinct_colors(std::span<const Color> colors) {
    std::set<Color> seen;
    for (Color c : colors)
        if (c >= 0) seen.insert(c);
    return static_cast<std::int64_t>(seen.size());
}

}  // namespace gcol
