#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gcol/coloring.hpp"

namespace gcol {

/**
 * Constant-time clearable color set.
 *
 * Color f is in the set iff mark[f] == stamp. clear() just advances the
 * stamp, so the marker array is never rewritten except on stamp wrap-around.
 * Capacity doubles whenever a color past the end is inserted; lookups past
 * the end report "not forbidden".
 */
class ForbiddenMarker {
public:
    explicit ForbiddenMarker(std::size_t capacity = 16) : mark_(std::max<std::size_t>(capacity, 1), 0) {}

    void clear() {
        if (++stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
    }

    void insert(Color c) {
        const auto i = static_cast<std::size_t>(c);
        if (i >= mark_.size()) grow(i + 1);
        mark_[i] = stamp_;
    }

    bool contains(Color c) const {
        const auto i = static_cast<std::size_t>(c);
        return c >= 0 && i < mark_.size() && mark_[i] == stamp_;
    }

    std::size_t capacity() const { return mark_.size(); }

private:
    void grow(std::size_t needed) {
        std::size_t cap = mark_.size();
        while (cap < needed) cap *= 2;
        mark_.resize(cap, 0);
    }

    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 1;
};

}  // namespace gcol
