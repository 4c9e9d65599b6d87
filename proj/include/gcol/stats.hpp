#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcol/coloring.hpp"
#include "gcol/schedule.hpp"

namespace gcol {

/// One speculative iteration: a coloring phase followed by conflict removal.
struct IterationRecord {
    int iteration = 0;  // 1-based
    PhaseKind coloring = PhaseKind::vertex;
    PhaseKind removal = PhaseKind::vertex;
    double coloring_ms = 0.0;
    double removal_ms = 0.0;
    double total_ms = 0.0;
    std::size_t queue_before = 0;  // |W|
    std::size_t queue_after = 0;   // |W_next|
    std::size_t grain = 0;         // effective chunk size of the coloring phase
};

struct ColoringStats {
    // cardinality part
    std::int64_t num_vertices = 0;
    std::int64_t num_colors = 0;
    std::map<Color, std::int64_t> class_cardinalities;
    double mean_cardinality = 0.0;
    double stddev_cardinality = 0.0;  // population standard deviation

    // run part, filled by the engine
    std::string algorithm;
    std::string balance;
    std::string problem;
    int workers = 0;
    std::vector<IterationRecord> iterations;
    double total_ms = 0.0;
    bool fallback_used = false;
    std::size_t fallback_vertices = 0;
};

/// Histogram, class count, mean and population std-dev of the class sizes.
/// Throws std::invalid_argument when a slot is Uncolored.
ColoringStats color_stats(const Coloring& colors);

void to_json(nlohmann::json& j, const IterationRecord& r);
void to_json(nlohmann::json& j, const ColoringStats& s);

}  // namespace gcol
