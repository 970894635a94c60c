#pragma once

#include <cstdint>
#include <vector>

#include "hyperflower/tiling.hpp"

namespace hyperflower::detail {

// Closes a cycle of vertices on one side with a new outer cycle.
//
// `ring` is ordered so that the side being filled lies to the right of each
// directed edge ring[j] -> ring[j+1]. `outward[j]` is the number of triangles
// to attach at ring[j] on that side and must be >= 2. Vertex ring[j] receives
// outward[j] - 1 outer neighbours, consecutive vertices share one, so the new
// ring has sum(outward[j] - 2) vertices. New vertex ids start at next_id.
std::vector<std::uint32_t> grow_ring(const std::vector<std::uint32_t>& ring,
                                     const std::vector<int>& outward, std::uint32_t& next_id,
                                     std::vector<Triangle>& faces);

}  // namespace hyperflower::detail
