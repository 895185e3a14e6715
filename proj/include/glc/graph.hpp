#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Graphs built by make_complete_bipartite carry a bipartition annotation:
/// vertices [0, part_a_size) form side A and the rest form side B.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, out-of-range endpoints or
  /// duplicate edges (in either orientation).
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::optional<std::size_t> part_a_size = std::nullopt);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  std::optional<std::size_t> part_a_size() const noexcept { return part_a_size_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<std::size_t> part_a_size_;
};

Graph make_complete_bipartite(std::size_t m, std::size_t n);
Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);

/// Parses `K<n>`, `P<n>`, `C<n>` or `Kb<m>_<n>`.
Graph make_named(std::string_view spec);

/// Vertices of `s` are relabelled by rank order. Throws std::out_of_range for
/// indices outside the graph; `s` need not be sorted but must not repeat.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Components ordered by their minimum vertex; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);

struct DegeneracyOrder {
  std::vector<Vertex> ordering;  // removal order
  std::size_t colouring_number = 0;
};

/// Repeatedly removes a minimum-degree vertex (lowest index on ties).
/// colouring_number = 1 + max degree seen at removal; 0 for the empty graph.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Vertices surviving repeated deletion of vertices with degree < k.
VertexSet k_core(const Graph& g, std::size_t k);

// Text format: `vertices <n>` then `edge <u> <v>` lines; `#` starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace glc
