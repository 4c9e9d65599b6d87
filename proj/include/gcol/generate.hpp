#pragma once

#include <cstdint>

#include "gcol/graph.hpp"

namespace gcol {

/// Random bipartite graph with `num_nets` nets whose sizes are drawn uniformly
/// from a window centred on `avg_net_size` and clipped to [1, num_vertices];
/// members of each net are sampled without replacement. Deterministic in `seed`.
BipartiteGraph generate_random_bipartite(VertexId num_vertices, NetId num_nets, VertexId avg_net_size,
                                         std::uint64_t seed);

}  // namespace gcol
