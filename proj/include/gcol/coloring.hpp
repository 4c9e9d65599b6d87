#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

/// Per-vertex color slots. During parallel phases every slot is accessed
/// through load()/store(), which are relaxed element-atomic operations; no
/// ordering between slots is implied and phases are separated by barriers.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(VertexId n, Color fill = kUncolored) : colors_(static_cast<std::size_t>(n), fill) {}
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    VertexId size() const { return static_cast<VertexId>(colors_.size()); }

    Color load(VertexId v) const {
        return std::atomic_ref<Color>(const_cast<Color&>(colors_[v])).load(std::memory_order_relaxed);
    }
    void store(VertexId v, Color c) { std::atomic_ref<Color>(colors_[v]).store(c, std::memory_order_relaxed); }

    /// Plain access, only valid outside parallel phases.
    Color operator[](VertexId v) const { return colors_[v]; }
    Color& operator[](VertexId v) { return colors_[v]; }

    std::span<const Color> view() const { return colors_; }
    const std::vector<Color>& values() const { return colors_; }

    bool operator==(const Coloring&) const = default;

private:
    std::vector<Color> colors_;
};

}  // namespace gcol
