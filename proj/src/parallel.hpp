#pragma once

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <span>
#include <vector>

#include "gcol/coloring.hpp"

namespace gcol::detail {

inline std::size_t grain_for(std::size_t n, int workers, std::size_t chunk) {
    if (chunk > 0) return chunk;
    const auto w = static_cast<std::size_t>(std::max(workers, 1));
    return std::max<std::size_t>((n + w - 1) / w, 1);
}

/// Runs body(worker, i) for i in [0, n). Workers claim blocks of `chunk`
/// indices from a shared cursor; chunk == 0 gives one ceil(n / workers) block
/// per claim. A single worker walks the range in order.
template <class Body>
void for_each_claimed(std::size_t n, int workers, std::size_t chunk, Body&& body) {
    if (n == 0) return;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(0, i);
        return;
    }
    const std::size_t grain = grain_for(n, workers, chunk);
    std::atomic<std::size_t> cursor{0};
#pragma omp parallel num_threads(workers)
    {
        const int worker = omp_get_thread_num();
        for (;;) {
            const std::size_t begin = cursor.fetch_add(grain, std::memory_order_relaxed);
            if (begin >= n) break;
            const std::size_t end = std::min(n, begin + grain);
            for (std::size_t i = begin; i < end; ++i) body(worker, i);
        }
    }
}

/// Appends from many workers into one preallocated queue.
class SharedQueue {
public:
    explicit SharedQueue(std::size_t capacity) : items_(capacity) {}

    void push(VertexId v) { items_[tail_.fetch_add(1, std::memory_order_relaxed)] = v; }

    std::vector<VertexId> take() && {
        items_.resize(tail_.load());
        return std::move(items_);
    }

private:
    std::vector<VertexId> items_;
    std::atomic<std::size_t> tail_{0};
};

/// Collects every Uncolored slot; static blocks per worker, concatenated in
/// worker order, so the result is ascending.
template <class Buffers>
std::vector<VertexId> gather_uncolored(const Coloring& colors, int workers, Buffers& buffers) {
    const VertexId n = colors.size();
    for (auto& b : buffers) b.clear();
#pragma omp parallel for schedule(static) num_threads(std::max(workers, 1))
    for (VertexId v = 0; v < n; ++v)
        if (colors.load(v) == kUncolored) buffers[omp_get_thread_num()].push_back(v);
    std::vector<VertexId> out;
    std::size_t total = 0;
    for (auto& b : buffers) total += b.size();
    out.reserve(total);
    for (auto& b : buffers) out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace gcol::detail
