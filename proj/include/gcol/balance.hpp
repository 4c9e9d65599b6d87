#pragma once

#include <algorithm>
#include <concepts>
#include <string_view>

#include "gcol/coloring.hpp"

namespace gcol {

enum class BalanceMode { none, b1, b2 };

std::string_view to_string(BalanceMode m);
/// Throws std::invalid_argument on an unknown name.
BalanceMode parse_balance_mode(std::string_view name);

template <class F>
concept ForbiddenSet = requires(const F& f, Color c) {
    { f.contains(c) } -> std::convertible_to<bool>;
};

/// Worker-private balancing state; lives for a whole driver run.
struct BalancerState {
    Color col_max = 0;
    Color col_next = 0;
};

/// Smallest color not in `forbidden`.
template <ForbiddenSet F>
Color select_first_fit(const F& forbidden, Color start = 0) {
    Color col = start;
    while (forbidden.contains(col)) ++col;
    return col;
}

/// B1: even ids descend from col_max (falling back to an ascending search
/// above col_max when the whole range is forbidden), odd ids use first-fit.
template <ForbiddenSet F>
Color select_color_b1(const F& forbidden, VertexId id, BalancerState& state) {
    Color col;
    if (id % 2 == 0) {
        col = state.col_max;
        while (col >= 0 && forbidden.contains(col)) --col;
        if (col == -1) col = select_first_fit(forbidden, state.col_max + 1);
    } else {
        col = select_first_fit(forbidden);
    }
    state.col_max = std::max(state.col_max, col);
    return col;
}

/// B2: ascend from col_next, wrap to first-fit when the result leaves
/// [0, col_max]; col_next is capped at col_max / 3 + 1 (integer division).
template <ForbiddenSet F>
Color select_color_b2(const F& forbidden, BalancerState& state) {
    Color col = select_first_fit(forbidden, state.col_next);
    if (col > state.col_max) col = select_first_fit(forbidden);
    state.col_max = std::max(state.col_max, col);
    state.col_next = std::min(col + 1, state.col_max / 3 + 1);
    return col;
}

/// Policy dispatch used by every coloring kernel.
template <ForbiddenSet F>
Color select_color(BalanceMode mode, const F& forbidden, VertexId id, BalancerState& state) {
    switch (mode) {
        case BalanceMode::b1: return select_color_b1(forbidden, id, state);
        case BalanceMode::b2: return select_color_b2(forbidden, state);
        case BalanceMode::none: break;
    }
    return select_first_fit(forbidden);
}

}  // namespace gcol
