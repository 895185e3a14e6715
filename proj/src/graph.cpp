#include "glc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

#include "text_util.hpp"

namespace glc {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::optional<std::size_t> part_a_size)
    : adjacency_(vertex_count), edge_count_(edges.size()), part_a_size_(part_a_size) {
  if (part_a_size_ && *part_a_size_ > vertex_count) {
    throw std::invalid_argument("bipartition annotation exceeds vertex count");
  }
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph make_complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("K_{m,n} needs m >= 1 and n >= 1");
  std::vector<Edge> edges;
  edges.reserve(m * n);
  for (Vertex a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < n; ++b) edges.emplace_back(a, static_cast<Vertex>(m + b));
  }
  return Graph(m + n, edges, m);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, edges);
}

Graph make_named(std::string_view spec) {
  auto positive = [&](std::string_view digits) {
    auto v = detail::parse_uint(digits);
    if (!v || *v == 0) {
      throw std::invalid_argument("bad graph generator '" + std::string(spec) + "'");
    }
    return static_cast<std::size_t>(*v);
  };
  if (spec.starts_with("Kb")) {
    auto body = spec.substr(2);
    auto sep = body.find('_');
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("bad graph generator '" + std::string(spec) + "'");
    }
    return make_complete_bipartite(positive(body.substr(0, sep)), positive(body.substr(sep + 1)));
  }
  if (spec.size() >= 2) {
    switch (spec.front()) {
      case 'K': return make_complete(positive(spec.substr(1)));
      case 'P': return make_path(positive(spec.substr(1)));
      case 'C': return make_cycle(positive(spec.substr(1)));
      default: break;
    }
  }
  throw std::invalid_argument("bad graph generator '" + std::string(spec) + "'");
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  }
  if (!members.empty() && members.back() >= g.vertex_count()) {
    throw std::out_of_range("induced_subgraph: vertex " + std::to_string(members.back()) +
                            " out of range");
  }
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> rank(g.vertex_count(), kAbsent);
  for (Vertex i = 0; i < members.size(); ++i) rank[members[i]] = i;

  std::vector<Edge> edges;
  for (Vertex i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbours(members[i])) {
      if (rank[w] != kAbsent && rank[w] > i) edges.emplace_back(i, rank[w]);
    }
  }
  return Graph(members.size(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> components;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  DegeneracyOrder result;
  const std::size_t n = g.vertex_count();
  if (n == 0) return result;

  std::vector<std::size_t> degree(n);
  using Entry = std::pair<std::size_t, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<bool> removed(n, false);
  std::size_t worst = 0;
  result.ordering.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (removed[v] || d != degree[v]) continue;  // stale entry
    removed[v] = true;
    worst = std::max(worst, d);
    result.ordering.push_back(v);
    for (Vertex w : g.neighbours(v)) {
      if (!removed[w]) queue.emplace(--degree[w], w);
    }
  }
  result.colouring_number = worst + 1;
  return result;
}

VertexSet k_core(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> pending;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      removed[v] = true;
      pending.push_back(v);
    }
  }
  while (!pending.empty()) {
    Vertex v = pending.back();
    pending.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (!removed[w] && --degree[w] < k) {
        removed[w] = true;
        pending.push_back(w);
      }
    }
  }
  VertexSet core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

Graph read_graph(std::istream& in) {
  std::optional<std::size_t> vertex_count;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    auto where = " (line " + std::to_string(line_no) + ")";
    if (tokens[0] == "vertices" && tokens.size() == 2) {
      if (vertex_count) throw std::invalid_argument("repeated 'vertices' header" + where);
      vertex_count = detail::require_uint(tokens[1], "vertex count");
    } else if (tokens[0] == "edge" && tokens.size() == 3) {
      if (!vertex_count) throw std::invalid_argument("'edge' before 'vertices'" + where);
      edges.emplace_back(static_cast<Vertex>(detail::require_uint(tokens[1], "edge endpoint")),
                         static_cast<Vertex>(detail::require_uint(tokens[2], "edge endpoint")));
    } else {
      throw std::invalid_argument("unrecognised graph line" + where + ": " + line);
    }
  }
  if (!vertex_count) throw std::invalid_argument("graph text has no 'vertices' line");
  return Graph(*vertex_count, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  if (auto a = g.part_a_size(); a && *a > 0) {
    out << "# K_{" << *a << "," << g.vertex_count() - *a << "}: part A is 0.." << *a - 1 << "\n";
  }
  out << "vertices " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  return read_graph(in);
}

}  // namespace glc
