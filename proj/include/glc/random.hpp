#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "glc/colour_engine.hpp"
#include "glc/graph.hpp"

namespace glc {

/// Seeded generator with portable bounded draws (no std distributions, whose
/// output differs between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }
  /// Sorted uniform k-subset of {0..palette-1}.
  std::vector<Colour> subset(std::size_t k, std::size_t palette);

 private:
  std::mt19937_64 engine_;
};

/// Every vertex receives a uniform k-subset of {0..palette-1}.
ListAssignment random_list_assignment(std::size_t vertex_count, std::size_t k,
                                      std::size_t palette, Rng& rng);

/// G(n, p) with p = numerator / denominator.
Graph random_graph(std::size_t n, std::uint64_t numerator, std::uint64_t denominator, Rng& rng);

/// Each vertex after the first joins a uniformly chosen earlier vertex with
/// probability 3/4, otherwise starts a new tree.
Graph random_forest(std::size_t n, Rng& rng);

/// Uniform random subset of the vertices, sorted.
VertexSet random_vertex_subset(std::size_t vertex_count, Rng& rng);

}  // namespace glc
