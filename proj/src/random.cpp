#include "glc/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::vector<Colour> Rng::subset(std::size_t k, std::size_t palette) {
  if (k > palette) throw std::invalid_argument("subset larger than palette");
  std::vector<Colour> pool(palette);
  std::iota(pool.begin(), pool.end(), Colour{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + below(palette - i)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

ListAssignment random_list_assignment(std::size_t vertex_count, std::size_t k,
                                      std::size_t palette, Rng& rng) {
  std::vector<std::vector<Colour>> lists(vertex_count);
  for (auto& list : lists) list = rng.subset(k, palette);
  return ListAssignment(std::move(lists));
}

Graph random_graph(std::size_t n, std::uint64_t numerator, std::uint64_t denominator, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(numerator, denominator)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_forest(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    if (rng.chance(3, 4)) edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  }
  return Graph(n, edges);
}

VertexSet random_vertex_subset(std::size_t vertex_count, Rng& rng) {
  VertexSet s;
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (rng.chance(1, 2)) s.push_back(v);
  }
  return s;
}

}  // namespace glc
