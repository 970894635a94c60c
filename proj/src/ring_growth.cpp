#include "ring_growth.hpp"

#include <string>

#include "hyperflower/error.hpp"

namespace hyperflower::detail {

std::vector<std::uint32_t> grow_ring(const std::vector<std::uint32_t>& ring,
                                     const std::vector<int>& outward, std::uint32_t& next_id,
                                     std::vector<Triangle>& faces) {
  const std::size_t n = ring.size();
  if (n < 3 || outward.size() != n) throw MeshError("grow_ring: ring needs at least 3 vertices");

  // fan[j] lists the outer neighbours of ring[j] in ring order; its last entry
  // is the apex over edge (ring[j], ring[j+1]) and equals fan[j+1].front().
  std::vector<std::vector<std::uint32_t>> fan(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (outward[j] < 2) {
      throw MeshError("grow_ring: vertex " + std::to_string(ring[j]) +
                      " needs at least two outward triangles");
    }
    fan[j].resize(static_cast<std::size_t>(outward[j] - 1));
    for (int a = 0; a < outward[j] - 2; ++a) fan[j][static_cast<std::size_t>(a)] = next_id++;
  }
  for (std::size_t j = 0; j < n; ++j) fan[j].back() = fan[(j + 1) % n].front();

  std::vector<std::uint32_t> next;
  for (std::size_t j = 0; j < n; ++j) {
    next.insert(next.end(), fan[j].begin(), fan[j].end() - 1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = ring[j];
    const auto& u = fan[j];
    for (std::size_t a = 0; a + 1 < u.size(); ++a) faces.push_back({v, u[a], u[a + 1]});
    faces.push_back({ring[(j + 1) % n], v, u.back()});
  }
  return next;
}

}  // namespace hyperflower::detail
