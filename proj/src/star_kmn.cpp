#include "glc/star_kmn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "glc/errors.hpp"

namespace glc {

ListGraph::ListGraph(std::vector<Vertex> a_vertices, std::vector<std::vector<Colour>> lists)
    : a_vertices_(std::move(a_vertices)) {
  if (lists.size() != a_vertices_.size()) {
    throw std::invalid_argument("ListGraph: one list per side-A vertex required");
  }
  std::sort(a_vertices_.begin(), a_vertices_.end());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    auto list = std::move(lists[i]);
    std::sort(list.begin(), list.end());
    lists_[a_vertices_[i]] = list;
  }
  for (const auto& [v, list] : lists_) {
    for (Colour c : list) holders_[c].push_back(v);
  }
  for (const auto& [c, holders] : holders_) colours_.push_back(c);
}

const std::vector<Colour>& ListGraph::list_of(Vertex a) const { return lists_.at(a); }

const std::vector<Vertex>& ListGraph::holders_of(Colour c) const { return holders_.at(c); }

ListGraph ListGraph::without(const std::vector<Vertex>& vertices,
                             const std::vector<Colour>& colours) const {
  std::set<Vertex> drop_v(vertices.begin(), vertices.end());
  std::set<Colour> drop_c(colours.begin(), colours.end());
  std::vector<Vertex> kept;
  std::vector<std::vector<Colour>> kept_lists;
  for (const auto& [v, list] : lists_) {
    if (drop_v.contains(v)) continue;
    kept.push_back(v);
    auto& out = kept_lists.emplace_back();
    for (Colour c : list) {
      if (!drop_c.contains(c)) out.push_back(c);
    }
  }
  return ListGraph(std::move(kept), std::move(kept_lists));
}

ListGraph build_list_graph(std::size_t k, const std::vector<Vertex>& a_vertices,
                           const std::vector<std::vector<Colour>>& lists) {
  if (k < 2) throw std::invalid_argument("list size k must be at least 2");
  if (a_vertices.size() != star_part_size(k)) {
    throw std::invalid_argument("side A must have k(k+1)-1 = " +
                                std::to_string(star_part_size(k)) + " vertices, got " +
                                std::to_string(a_vertices.size()));
  }
  if (lists.size() != a_vertices.size()) {
    throw std::invalid_argument("one list per side-A vertex required");
  }
  for (const auto& list : lists) {
    std::set<Colour> distinct(list.begin(), list.end());
    if (list.size() != k || distinct.size() != k) {
      throw std::invalid_argument("every side-A list must hold exactly " + std::to_string(k) +
                                  " distinct colours");
    }
  }
  return ListGraph(a_vertices, lists);
}

HeavySetResult greedy_heavy_set(const ListGraph& h, std::size_t k) {
  HeavySetResult result;
  std::set<Vertex> covered;
  std::set<Colour> chosen;
  for (bool grew = true; grew;) {
    grew = false;
    for (Colour c : h.colours()) {
      if (chosen.contains(c)) continue;
      std::size_t outside = 0;
      for (Vertex v : h.holders_of(c)) outside += covered.contains(v) ? 0 : 1;
      if (outside >= k + 1) {
        chosen.insert(c);
        result.c_prime.push_back(c);
        result.growth_trace.emplace_back(c, outside);
        for (Vertex v : h.holders_of(c)) covered.insert(v);
        grew = true;
        break;
      }
    }
  }
  result.a_prime.assign(covered.begin(), covered.end());
  return result;
}

namespace {

class Matcher {
 public:
  explicit Matcher(const ListGraph& h) : h_(h) {}

  std::map<Vertex, Colour> run() {
    for (Vertex v : h_.a_vertices()) {
      visited_.clear();
      if (!augment(v)) {
        throw InvariantViolation("matching", "side-A vertex " + std::to_string(v) +
                                                 " cannot be matched; Hall's condition fails");
      }
    }
    std::map<Vertex, Colour> matching;
    for (const auto& [c, v] : owner_) matching[v] = c;
    return matching;
  }

 private:
  bool augment(Vertex v) {
    const auto& list = h_.list_of(v);
    for (Colour c : list) {
      if (!owner_.contains(c)) {
        owner_[c] = v;
        return true;
      }
    }
    for (Colour c : list) {
      if (!visited_.insert(c).second) continue;
      if (augment(owner_.at(c))) {
        owner_[c] = v;
        return true;
      }
    }
    return false;
  }

  const ListGraph& h_;
  std::map<Colour, Vertex> owner_;
  std::set<Colour> visited_;
};

}  // namespace

std::map<Vertex, Colour> hall_matching(const ListGraph& h) { return Matcher(h).run(); }

StarColouringResult star_colour_kmn(std::size_t k, const Graph& g, const ListAssignment& lists) {
  if (k < 2) throw std::invalid_argument("list size k must be at least 2");
  const std::size_t m = star_part_size(k);
  if (g.part_a_size() != m || g.vertex_count() <= m || g.edge_count() != m * (g.vertex_count() - m)) {
    throw std::invalid_argument("graph must be K_{" + std::to_string(m) +
                                ",n} built by make_complete_bipartite");
  }
  if (lists.size() != g.vertex_count()) {
    throw std::invalid_argument("list assignment does not match the graph");
  }
  if (lists.uniform_size() != k) {
    throw std::invalid_argument("every list must hold exactly " + std::to_string(k) + " colours");
  }

  std::vector<Vertex> a_vertices(m);
  std::vector<std::vector<Colour>> a_lists(m);
  for (Vertex a = 0; a < m; ++a) {
    a_vertices[a] = a;
    a_lists[a].assign(lists[a].begin(), lists[a].end());
  }
  const ListGraph h = build_list_graph(k, a_vertices, a_lists);

  StarColouringResult result;
  result.heavy = greedy_heavy_set(h, k);
  const auto& c_prime = result.heavy.c_prime;
  const auto& a_prime = result.heavy.a_prime;
  if (a_prime.size() < (k + 1) * c_prime.size()) {
    throw InvariantViolation("heavy-set", "greedy set is not heavy");
  }
  if (c_prime.size() > k - 1) {
    throw InvariantViolation("heavy-set", "heavy set has " + std::to_string(c_prime.size()) +
                                              " colours, expected at most k-1");
  }

  const ListGraph h_rest = h.without(a_prime, c_prime);
  for (Colour c : h_rest.colours()) {
    if (h_rest.holders_of(c).size() > k) {
      throw InvariantViolation("heavy-set", "colour " + std::to_string(c) +
                                                " still has more than k outside neighbours");
    }
  }
  result.matching = hall_matching(h_rest);

  const std::set<Colour> heavy(c_prime.begin(), c_prime.end());
  std::vector<Colour> colour(g.vertex_count());
  for (const auto& [v, c] : result.matching) colour[v] = c;
  for (Vertex v : a_prime) {
    auto it = std::find_if(lists[v].begin(), lists[v].end(),
                           [&](Colour c) { return heavy.contains(c); });
    if (it == lists[v].end()) {
      throw InvariantViolation("extension", "vertex " + std::to_string(v) + " in A' misses C'");
    }
    colour[v] = *it;
  }
  for (Vertex v = static_cast<Vertex>(m); v < g.vertex_count(); ++v) {
    auto it = std::find_if(lists[v].begin(), lists[v].end(),
                           [&](Colour c) { return !heavy.contains(c); });
    if (it == lists[v].end()) {
      throw InvariantViolation("extension", "list of B-vertex " + std::to_string(v) +
                                                " lies inside C'");
    }
    colour[v] = *it;
  }
  result.colouring = Colouring(std::move(colour));
  return result;
}

}  // namespace glc
