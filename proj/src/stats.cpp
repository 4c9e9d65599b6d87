#include "gcol/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace gcol {

ColoringStats color_stats(const Coloring& colors) {
    ColoringStats s;
    s.num_vertices = colors.size();
    for (VertexId v = 0; v < colors.size(); ++v) {
        const Color c = colors[v];
        if (c == kUncolored) throw std::invalid_argument("vertex " + std::to_string(v) + " is uncolored");
        if (c < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " has a negative color");
        ++s.class_cardinalities[c];
    }
    s.num_colors = static_cast<std::int64_t>(s.class_cardinalities.size());
    if (s.num_colors == 0) return s;

    s.mean_cardinality = static_cast<double>(s.num_vertices) / static_cast<double>(s.num_colors);
    double sq = 0.0;
    for (const auto& [color, count] : s.class_cardinalities) {
        const double d = static_cast<double>(count) - s.mean_cardinality;
        sq += d * d;
    }
    s.stddev_cardinality = std::sqrt(sq / static_cast<double>(s.num_colors));
    return s;
}

void to_json(nlohmann::json& j, const IterationRecord& r) {
    j = nlohmann::json{{"iteration", r.iteration},
                       {"coloring", to_string(r.coloring)},
                       {"removal", to_string(r.removal)},
                       {"coloring_ms", r.coloring_ms},
                       {"removal_ms", r.removal_ms},
                       {"total_ms", r.total_ms},
                       {"queue_before", r.queue_before},
                       {"queue_after", r.queue_after},
                       {"grain", r.grain}};
}

void to_json(nlohmann::json& j, const ColoringStats& s) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [color, count] : s.class_cardinalities) hist[std::to_string(color)] = count;
    j = nlohmann::json{{"num_vertices", s.num_vertices},
                       {"num_colors", s.num_colors},
                       {"class_cardinalities", hist},
                       {"mean_cardinality", s.mean_cardinality},
                       {"stddev_cardinality", s.stddev_cardinality},
                       {"problem", s.problem},
                       {"algorithm", s.algorithm},
                       {"balance", s.balance},
                       {"workers", s.workers},
                       {"iterations", s.iterations},
                       {"total_ms", s.total_ms},
                       {"fallback_used", s.fallback_used},
                       {"fallback_vertices", s.fallback_vertices}};
}

}  // namespace gcol
