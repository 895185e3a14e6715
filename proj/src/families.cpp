#include "glc/families.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "text_util.hpp"

namespace glc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool acyclic_star_components(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    std::size_t centres = 0;
    for (Vertex v : comp) centres += g.degree(v) >= 2 ? 1 : 0;
    if (centres > 1) return false;
  }
  return true;
}

// Max of 2q*e(S) - p*|S| over vertex subsets S, with the maximiser.
struct ClosureResult {
  std::int64_t value = 0;
  std::vector<Vertex> subset;
};

ClosureResult max_density_closure(const Graph& g, std::int64_t p, std::int64_t q) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Network = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, std::int64_t,
                      boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                      boost::property<boost::edge_reverse_t,
                                                      Traits::edge_descriptor>>>>;

  const auto edges = g.edges();
  const std::size_t n = g.vertex_count();
  // Layout: 0 = source, 1 = sink, then one node per edge, then one per vertex.
  const std::size_t edge_base = 2;
  const std::size_t vertex_base = edge_base + edges.size();
  Network net(vertex_base + n);
  auto capacity = boost::get(boost::edge_capacity, net);
  auto reverse = boost::get(boost::edge_reverse, net);
  auto residual = boost::get(boost::edge_residual_capacity, net);

  auto add_arc = [&](std::size_t from, std::size_t to, std::int64_t cap) {
    auto forward = boost::add_edge(from, to, net).first;
    auto backward = boost::add_edge(to, from, net).first;
    capacity[forward] = cap;
    capacity[backward] = 0;
    reverse[forward] = backward;
    reverse[backward] = forward;
  };

  const std::int64_t infinity = std::numeric_limits<std::int64_t>::max() / 4;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    add_arc(0, edge_base + i, 2 * q);
    add_arc(edge_base + i, vertex_base + edges[i].first, infinity);
    add_arc(edge_base + i, vertex_base + edges[i].second, infinity);
  }
  for (std::size_t v = 0; v < n; ++v) add_arc(vertex_base + v, 1, p);

  const std::int64_t cut = boost::push_relabel_max_flow(net, 0, 1);

  ClosureResult result;
  result.value = 2 * q * static_cast<std::int64_t>(edges.size()) - cut;
  // Source side of the minimum cut: residual reachability from the source.
  std::vector<bool> reached(boost::num_vertices(net), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto [it, end] = boost::out_edges(u, net); it != end; ++it) {
      auto w = boost::target(*it, net);
      if (!reached[w] && residual[*it] > 0) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (reached[vertex_base + v]) result.subset.push_back(static_cast<Vertex>(v));
  }
  return result;
}

bool mad_at_most(const Graph& g, const Rational& t) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  if (Rational(static_cast<std::int64_t>(g.max_degree())) <= t) return true;
  if (Rational(2 * static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(n)) > t) {
    return false;
  }
  if (n <= kMadExhaustiveLimit) return mad_exhaustive(g) <= t;
  return !density_exceeds(g, t);
}

}  // namespace

void validate(const FamilySpec& f) {
  std::visit(Overloaded{
                 [](const family::Clustered& c) {
                   if (c.k == 0) throw std::invalid_argument("cluster:<k> needs k >= 1");
                 },
                 [](const family::ColouringNumber& c) {
                   if (c.k == 0) throw std::invalid_argument("colnum:<k> needs k >= 1");
                 },
                 [](const family::MaxAvgDegree& m) {
                   if (m.threshold < 0) throw std::invalid_argument("mad threshold must be >= 0");
                 },
                 [](const auto&) {},
             },
             f);
}

FamilySpec parse_family(std::string_view text) {
  auto fail = [&]() -> FamilySpec {
    throw std::invalid_argument("unrecognised family '" + std::string(text) + "'");
  };
  auto colon = text.find(':');
  auto head = text.substr(0, colon);
  auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  bool has_arg = colon != std::string_view::npos;

  FamilySpec result;
  if (!has_arg && head == "forest") {
    result = family::Forest{};
  } else if (!has_arg && head == "starforest") {
    result = family::StarForest{};
  } else if (!has_arg && head == "linforest") {
    result = family::LinearForest{};
  } else if (has_arg && head == "cluster") {
    result = family::Clustered{detail::require_uint(arg, "cluster size")};
  } else if (has_arg && head == "maxdeg") {
    result = family::MaxDegree{detail::require_uint(arg, "degree bound")};
  } else if (has_arg && head == "colnum") {
    result = family::ColouringNumber{detail::require_uint(arg, "colouring number")};
  } else if (has_arg && head == "mad") {
    auto slash = arg.find('/');
    auto p = static_cast<std::int64_t>(detail::require_uint(arg.substr(0, slash), "mad numerator"));
    std::int64_t q = 1;
    if (slash != std::string_view::npos) {
      q = static_cast<std::int64_t>(detail::require_uint(arg.substr(slash + 1), "mad denominator"));
      if (q == 0) throw std::invalid_argument("mad denominator must be positive");
    }
    result = family::MaxAvgDegree{Rational(p, q)};
  } else {
    return fail();
  }
  validate(result);
  return result;
}

std::string to_string(const FamilySpec& f) {
  return std::visit(
      Overloaded{
          [](const family::Clustered& c) { return "cluster:" + std::to_string(c.k); },
          [](const family::MaxDegree& m) { return "maxdeg:" + std::to_string(m.d); },
          [](const family::Forest&) { return std::string("forest"); },
          [](const family::StarForest&) { return std::string("starforest"); },
          [](const family::LinearForest&) { return std::string("linforest"); },
          [](const family::ColouringNumber& c) { return "colnum:" + std::to_string(c.k); },
          [](const family::MaxAvgDegree& m) {
            auto s = "mad:" + std::to_string(m.threshold.numerator());
            if (m.threshold.denominator() != 1) s += "/" + std::to_string(m.threshold.denominator());
            return s;
          },
      },
      f);
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool member(const Graph& g, const FamilySpec& f) {
  if (g.vertex_count() == 0) return true;
  return std::visit(
      Overloaded{
          [&](const family::Clustered& c) {
            for (const auto& comp : connected_components(g)) {
              if (comp.size() > c.k) return false;
            }
            return true;
          },
          [&](const family::MaxDegree& m) { return g.max_degree() <= m.d; },
          [&](const family::Forest&) { return is_forest(g); },
          [&](const family::StarForest&) { return is_forest(g) && acyclic_star_components(g); },
          [&](const family::LinearForest&) { return g.max_degree() <= 2 && is_forest(g); },
          [&](const family::ColouringNumber& c) {
            return degeneracy_order(g).colouring_number <= c.k;
          },
          [&](const family::MaxAvgDegree& m) { return mad_at_most(g, m.threshold); },
      },
      f);
}

Rational mad(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("mad of the empty graph is undefined");
  return g.vertex_count() <= kMadExhaustiveLimit ? mad_exhaustive(g) : mad_flow(g);
}

Rational mad_exhaustive(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mad of the empty graph is undefined");
  if (n > kMadExhaustiveLimit) {
    throw std::invalid_argument("mad_exhaustive is limited to " +
                                std::to_string(kMadExhaustiveLimit) + " vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  // edges_in[mask] = |E(g[mask])|, built from mask minus its lowest vertex.
  std::vector<std::uint16_t> edges_in(std::size_t{1} << n, 0);
  std::int64_t best_edges = 0;
  std::int64_t best_size = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int low = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    edges_in[mask] = static_cast<std::uint16_t>(edges_in[rest] + std::popcount(adj[low] & rest));
    std::int64_t e = edges_in[mask];
    std::int64_t s = std::popcount(mask);
    if (e * best_size > best_edges * s) {
      best_edges = e;
      best_size = s;
    }
  }
  return Rational(2 * best_edges, best_size);
}

Rational mad_flow(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mad of the empty graph is undefined");
  Rational lambda(2 * static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(n));
  for (;;) {
    auto closure = max_density_closure(g, lambda.numerator(), lambda.denominator());
    if (closure.value <= 0 || closure.subset.empty()) return lambda;
    auto sub = induced_subgraph(g, closure.subset);
    Rational next(2 * static_cast<std::int64_t>(sub.edge_count()),
                  static_cast<std::int64_t>(sub.vertex_count()));
    if (next <= lambda) {
      throw std::logic_error("mad_flow: Dinkelbach step failed to increase the density");
    }
    lambda = next;
  }
}

bool density_exceeds(const Graph& g, const Rational& t) {
  if (t < 0) return g.vertex_count() > 0;
  if (g.vertex_count() == 0) return false;
  return max_density_closure(g, t.numerator(), t.denominator()).value > 0;
}

}  // namespace glc
