#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "gcol/coloring.hpp"
#include "gcol/graph.hpp"

namespace gcol {

enum class ViolationKind { uncolored, bgpc_conflict, d2_conflict };

/// A re-checkable witness. For bgpc_conflict `via` is the shared net; for
/// d2_conflict it is the common neighbour, or -1 when the two are adjacent.
/// For uncolored only `first` is meaningful.
struct Violation {
    ViolationKind kind = ViolationKind::uncolored;
    VertexId first = -1;
    VertexId second = -1;
    std::int64_t via = -1;

    bool operator==(const Violation&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Violation& v);

/// nullopt when every net's colored members are pairwise distinct. With
/// `partial`, Uncolored slots are skipped instead of reported.
std::optional<Violation> verify_bgpc(const BipartiteGraph& g, std::span<const Color> colors, bool partial = false);

/// nullopt when no two vertices within distance two share a color.
std::optional<Violation> verify_d2gc(const UnipartiteGraph& g, std::span<const Color> colors, bool partial = false);

/// Sorted distance-<=2 neighbourhood of v, v excluded.
std::vector<VertexId> d2_neighborhood(const BipartiteGraph& g, VertexId v);
std::vector<VertexId> d2_neighborhood(const UnipartiteGraph& g, VertexId v);

/// Number of distinct colors, ignoring Uncolored slots.
std::int64_t count_distinct_colors(std::span<const Color> colors);

}  // namespace gcol
