#include "gcol/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace gcol {

BipartiteGraph generate_random_bipartite(VertexId num_vertices, NetId num_nets, VertexId avg_net_size,
                                         std::uint64_t seed) {
    if (num_vertices <= 0 || num_nets <= 0 || avg_net_size <= 0)
        throw std::invalid_argument("generator counts must be positive");
    if (avg_net_size > num_vertices) throw std::invalid_argument("average net size exceeds the vertex count");

    std::mt19937_64 rng(seed);
    const VertexId half_width = std::min(avg_net_size - 1, num_vertices - avg_net_size);
    std::uniform_int_distribution<VertexId> size_dist(avg_net_size - half_width, avg_net_size + half_width);

    std::vector<std::vector<VertexId>> nets(static_cast<std::size_t>(num_nets));
    std::unordered_set<VertexId> chosen;
    for (auto& net : nets) {
        const VertexId size = size_dist(rng);
        net.reserve(static_cast<std::size_t>(size));
        chosen.clear();
        // Floyd's sampling: `size` distinct ids out of [0, num_vertices)
        for (VertexId j = num_vertices - size; j < num_vertices; ++j) {
            const VertexId t = std::uniform_int_distribution<VertexId>(0, j)(rng);
            const VertexId pick = chosen.insert(t).second ? t : j;
            if (pick == j) chosen.insert(j);
            net.push_back(pick);
        }
        std::shuffle(net.begin(), net.end(), rng);
    }
    return BipartiteGraph::from_nets(num_vertices, nets);
}

}  // namespace gcol
