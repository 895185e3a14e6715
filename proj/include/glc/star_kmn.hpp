#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "glc/colour_engine.hpp"
#include "glc/graph.hpp"

namespace glc {

/// Size of side A for which k-lists always admit a star-forest colouring of K_{m,n}.
constexpr std::size_t star_part_size(std::size_t k) { return k * (k + 1) - 1; }

/// Incidence graph between side-A vertices and the colours in their lists.
class ListGraph {
 public:
  ListGraph() = default;

  /// `a_vertices[i]` has list `lists[i]`. Builds colour -> vertex incidence.
  ListGraph(std::vector<Vertex> a_vertices, std::vector<std::vector<Colour>> lists);

  const std::vector<Vertex>& a_vertices() const noexcept { return a_vertices_; }
  /// Colours with at least one neighbour, ascending.
  const std::vector<Colour>& colours() const noexcept { return colours_; }
  const std::vector<Colour>& list_of(Vertex a) const;
  /// Neighbours of colour c (side-A vertices whose list contains c), ascending.
  const std::vector<Vertex>& holders_of(Colour c) const;

  /// Drops the given vertices and colours; colours left without neighbours vanish.
  ListGraph without(const std::vector<Vertex>& vertices, const std::vector<Colour>& colours) const;

 private:
  std::vector<Vertex> a_vertices_;
  std::map<Vertex, std::vector<Colour>> lists_;
  std::vector<Colour> colours_;
  std::map<Colour, std::vector<Vertex>> holders_;
};

/// Checks |A| = k(k+1)-1 and every list has exactly k colours.
ListGraph build_list_graph(std::size_t k, const std::vector<Vertex>& a_vertices,
                           const std::vector<std::vector<Colour>>& lists);

struct HeavySetResult {
  std::vector<Colour> c_prime;  // in insertion order
  VertexSet a_prime;            // N_H(c_prime), sorted
  /// (colour added, number of neighbours it contributed outside the previous a_prime)
  std::vector<std::pair<Colour, std::size_t>> growth_trace;
};

/// Greedy closure from the empty set: repeatedly add the smallest colour with
/// at least k+1 neighbours outside the current neighbourhood.
HeavySetResult greedy_heavy_set(const ListGraph& h, std::size_t k);

/// Augmenting-path matching saturating every side-A vertex of `h`.
/// Vertices are processed in ascending order; each first takes its smallest
/// free colour, otherwise tries augmenting paths in ascending colour order.
/// Throws InvariantViolation("matching") if some vertex stays unmatched.
std::map<Vertex, Colour> hall_matching(const ListGraph& h);

struct StarColouringResult {
  Colouring colouring;
  HeavySetResult heavy;
  std::map<Vertex, Colour> matching;  // on A - A'
};

/// Star-forest L-colouring of K_{m,n}, m = k(k+1)-1, from any k-list assignment.
/// `g` must carry the bipartition annotation of make_complete_bipartite(m, n).
/// Stage failures throw InvariantViolation naming heavy-set, matching or extension.
StarColouringResult star_colour_kmn(std::size_t k, const Graph& g, const ListAssignment& lists);

}  // namespace glc
