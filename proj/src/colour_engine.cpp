#include "glc/colour_engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "glc/enumeration.hpp"
#include "glc/errors.hpp"
#include "text_util.hpp"

namespace glc {

VertexSet Colouring::class_of(Colour c) const {
  VertexSet members;
  for (Vertex v = 0; v < colours_.size(); ++v) {
    if (colours_[v] == c) members.push_back(v);
  }
  return members;
}

std::vector<Colour> Colouring::image() const {
  std::vector<Colour> used(colours_);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

ListAssignment::ListAssignment(std::vector<std::vector<Colour>> lists) : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& list = lists_[v];
    if (list.empty()) throw std::invalid_argument("empty list at vertex " + std::to_string(v));
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("repeated colour in list of vertex " + std::to_string(v));
    }
  }
}

bool ListAssignment::contains(Vertex v, Colour c) const {
  const auto& list = lists_.at(v);
  return std::binary_search(list.begin(), list.end(), c);
}

std::optional<std::size_t> ListAssignment::uniform_size() const {
  if (lists_.empty()) return std::nullopt;
  for (const auto& list : lists_) {
    if (list.size() != lists_.front().size()) return std::nullopt;
  }
  return lists_.front().size();
}

bool is_valid_colouring(const Graph& g, const Colouring& phi, const FamilySpec& f) {
  if (phi.size() != g.vertex_count()) {
    throw std::invalid_argument("colouring covers " + std::to_string(phi.size()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  for (Colour c : phi.image()) {
    if (!member(induced_subgraph(g, phi.class_of(c)), f)) return false;
  }
  return true;
}

bool is_valid_list_colouring(const Graph& g, const ListAssignment& lists, const Colouring& phi,
                             const FamilySpec& f) {
  if (lists.size() != g.vertex_count()) {
    throw std::invalid_argument("list assignment does not match the graph");
  }
  for (Vertex v = 0; v < g.vertex_count() && v < phi.size(); ++v) {
    if (!lists.contains(v, phi[v])) return false;
  }
  return is_valid_colouring(g, phi, f);
}

// ---------------------------------------------------------------------------
// Search engine

namespace {

constexpr std::uint32_t kUncoloured = std::numeric_limits<std::uint32_t>::max();

std::vector<Vertex> search_order(const Graph& g) {
  auto order = degeneracy_order(g).ordering;
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

struct ListColourer::Impl {
  Impl(const Graph& graph, const FamilySpec& family, SearchLimits lim)
      : g(graph), f(family), limits(lim), order(search_order(graph)) {
    validate(f);
    use_masks = g.vertex_count() <= 64;
    if (use_masks) {
      adj_mask.assign(g.vertex_count(), 0);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex w : g.neighbours(v)) adj_mask[v] |= std::uint64_t{1} << w;
      }
    }
    max_degree_bound = std::get_if<family::MaxDegree>(&f);
  }

  void reset(std::size_t palette_size) {
    colour_of.assign(g.vertex_count(), kUncoloured);
    class_mask.assign(palette_size, 0);
    nodes = 0;
  }

  void assign(Vertex v, std::uint32_t c) {
    colour_of[v] = c;
    if (use_masks) class_mask[c] |= std::uint64_t{1} << v;
  }

  void unassign(Vertex v, std::uint32_t c) {
    colour_of[v] = kUncoloured;
    if (use_masks) class_mask[c] &= ~(std::uint64_t{1} << v);
  }

  void count_node() {
    if (++nodes > limits.max_nodes) {
      throw BudgetExceeded("colouring search exceeded " + std::to_string(limits.max_nodes) +
                           " nodes");
    }
  }

  // Valid iff the class of c, restricted to coloured vertices, is still a
  // member. Classes were valid before v joined, so only v's component matters.
  bool class_ok(Vertex v, std::uint32_t c) const {
    return use_masks ? class_ok_mask(v, c) : class_ok_generic(v, c);
  }

  bool class_ok_mask(Vertex v, std::uint32_t c) const {
    const std::uint64_t cls = class_mask[c];
    if (max_degree_bound) {
      const std::size_t d = max_degree_bound->d;
      std::uint64_t same = adj_mask[v] & cls;
      if (static_cast<std::size_t>(std::popcount(same)) > d) return false;
      for (; same; same &= same - 1) {
        int w = std::countr_zero(same);
        if (static_cast<std::size_t>(std::popcount(adj_mask[w] & cls)) > d) return false;
      }
      return true;
    }
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f2 = frontier; f2; f2 &= f2 - 1) next |= adj_mask[std::countr_zero(f2)];
      next &= cls & ~comp;
      comp |= next;
      frontier = next;
    }
    return component_member(comp);
  }

  int local_degree(int w, std::uint64_t comp) const { return std::popcount(adj_mask[w] & comp); }

  bool component_member(std::uint64_t comp) const {
    const int size = std::popcount(comp);
    auto edges = [&] {
      int twice = 0;
      for (std::uint64_t r = comp; r; r &= r - 1) twice += local_degree(std::countr_zero(r), comp);
      return twice / 2;
    };
    auto count_deg_at_least = [&](int bound) {
      int count = 0;
      for (std::uint64_t r = comp; r; r &= r - 1) {
        count += local_degree(std::countr_zero(r), comp) >= bound ? 1 : 0;
      }
      return count;
    };
    if (auto* c = std::get_if<family::Clustered>(&f)) return static_cast<std::size_t>(size) <= c->k;
    if (std::holds_alternative<family::Forest>(f)) return edges() == size - 1;
    if (std::holds_alternative<family::StarForest>(f)) {
      return edges() == size - 1 && count_deg_at_least(2) <= 1;
    }
    if (std::holds_alternative<family::LinearForest>(f)) {
      return edges() == size - 1 && count_deg_at_least(3) == 0;
    }
    if (auto* c = std::get_if<family::ColouringNumber>(&f)) {
      std::uint64_t rest = comp;
      while (rest) {
        std::uint64_t low = 0;
        for (std::uint64_t r = rest; r; r &= r - 1) {
          int w = std::countr_zero(r);
          if (static_cast<std::size_t>(local_degree(w, rest)) < c->k) {
            low = std::uint64_t{1} << w;
            break;
          }
        }
        if (!low) return false;
        rest &= ~low;
      }
      return true;
    }
    std::vector<Vertex> members;
    for (std::uint64_t r = comp; r; r &= r - 1) members.push_back(std::countr_zero(r));
    return member(induced_subgraph(g, members), f);
  }

  bool class_ok_generic(Vertex v, std::uint32_t c) const {
    if (max_degree_bound) {
      const std::size_t d = max_degree_bound->d;
      auto same_degree = [&](Vertex u) {
        std::size_t count = 0;
        for (Vertex w : g.neighbours(u)) count += colour_of[w] == c ? 1 : 0;
        return count;
      };
      if (same_degree(v) > d) return false;
      for (Vertex w : g.neighbours(v)) {
        if (colour_of[w] == c && same_degree(w) > d) return false;
      }
      return true;
    }
    std::vector<Vertex> comp{v};
    std::set<Vertex> seen{v};
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbours(comp[i])) {
        if (colour_of[w] == c && seen.insert(w).second) comp.push_back(w);
      }
    }
    if (auto* cl = std::get_if<family::Clustered>(&f)) return comp.size() <= cl->k;
    return member(induced_subgraph(g, comp), f);
  }

  bool search_lists(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (std::uint32_t c : candidates[v]) {
      count_node();
      assign(v, c);
      if (class_ok(v, c) && search_lists(depth + 1)) return true;
      unassign(v, c);
    }
    return false;
  }

  // Colours 0..n-1; a vertex may open at most one new colour (max_used + 1).
  bool search_palette(std::size_t depth, std::uint32_t n, std::uint32_t opened) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    const std::uint32_t limit = std::min(n, opened + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      count_node();
      assign(v, c);
      if (class_ok(v, c) && search_palette(depth + 1, n, std::max(opened, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  Graph g;
  FamilySpec f;
  SearchLimits limits;
  std::vector<Vertex> order;
  bool use_masks = false;
  std::vector<std::uint64_t> adj_mask;
  const family::MaxDegree* max_degree_bound = nullptr;

  std::vector<std::uint32_t> colour_of;
  std::vector<std::uint64_t> class_mask;
  std::vector<std::vector<std::uint32_t>> candidates;
  std::vector<Colour> palette;
  std::uint64_t nodes = 0;
};

ListColourer::ListColourer(const Graph& g, const FamilySpec& f, SearchLimits limits)
    : impl_(std::make_unique<Impl>(g, f, limits)) {}
ListColourer::~ListColourer() = default;
ListColourer::ListColourer(ListColourer&&) noexcept = default;
ListColourer& ListColourer::operator=(ListColourer&&) noexcept = default;

std::uint64_t ListColourer::last_node_count() const noexcept { return impl_->nodes; }

std::optional<Colouring> ListColourer::solve(const ListAssignment& lists) {
  Impl& s = *impl_;
  if (lists.size() != s.g.vertex_count()) {
    throw std::invalid_argument("list assignment covers " + std::to_string(lists.size()) +
                                " vertices, graph has " + std::to_string(s.g.vertex_count()));
  }
  s.palette.clear();
  for (const auto& list : lists.lists()) s.palette.insert(s.palette.end(), list.begin(), list.end());
  std::sort(s.palette.begin(), s.palette.end());
  s.palette.erase(std::unique(s.palette.begin(), s.palette.end()), s.palette.end());

  s.candidates.resize(lists.size());
  for (Vertex v = 0; v < lists.size(); ++v) {
    auto& cand = s.candidates[v];
    cand.clear();
    for (Colour c : lists[v]) {
      cand.push_back(static_cast<std::uint32_t>(
          std::lower_bound(s.palette.begin(), s.palette.end(), c) - s.palette.begin()));
    }
  }
  s.reset(s.palette.size());
  if (!s.search_lists(0)) return std::nullopt;
  std::vector<Colour> out(lists.size());
  for (Vertex v = 0; v < lists.size(); ++v) out[v] = s.palette[s.colour_of[v]];
  return Colouring(std::move(out));
}

std::optional<Colouring> find_list_colouring(const Graph& g, const ListAssignment& lists,
                                             const FamilySpec& f, const SearchLimits& limits) {
  return ListColourer(g, f, limits).solve(lists);
}

Colouring optimal_colouring(const Graph& g, const FamilySpec& f, const SearchLimits& limits) {
  if (g.vertex_count() == 0) throw std::invalid_argument("chi needs at least one vertex");
  ListColourer colourer(g, f, limits);
  auto& s = *colourer.impl_;
  for (std::uint32_t n = 1; n <= g.vertex_count(); ++n) {
    s.reset(n);
    if (s.search_palette(0, n, 0)) {
      std::vector<Colour> out(g.vertex_count());
      for (Vertex v = 0; v < out.size(); ++v) out[v] = s.colour_of[v] + 1;
      return Colouring(std::move(out));
    }
  }
  throw InvariantViolation("chi", "no colouring with one colour per vertex");
}

std::size_t chi(const Graph& g, const FamilySpec& f, const SearchLimits& limits) {
  return optimal_colouring(g, f, limits).image().size();
}

// ---------------------------------------------------------------------------
// Choosability

namespace {

struct WorkerOutcome {
  std::uint64_t bad_index = std::numeric_limits<std::uint64_t>::max();
  ListRows bad_rows;
  std::uint64_t error_index = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr error;
  std::uint64_t enumerated = 0;
  bool budget_hit = false;
};

}  // namespace

ChoosabilityVerdict is_n_choosable(const Graph& g, std::size_t n, const FamilySpec& f,
                                   const SearchLimits& limits) {
  validate(f);
  if (n == 0) throw std::invalid_argument("list size must be positive");
  ChoosabilityVerdict verdict;

  // Every family here contains K_1 and is closed under adding isolated
  // vertices, so a vertex with fewer than n neighbours always has a colour
  // that isolates it in its class: only the n-core needs checking.
  const VertexSet core = k_core(g, n);
  verdict.core_size = core.size();
  if (core.empty()) {
    verdict.choosable = true;
    return verdict;
  }
  const Graph h = induced_subgraph(g, core);
  const unsigned jobs = std::max(1u, limits.jobs);
  std::atomic<std::uint64_t> best_bad{std::numeric_limits<std::uint64_t>::max()};
  std::vector<WorkerOutcome> outcomes(jobs);

  auto work = [&](unsigned worker) {
    WorkerOutcome& out = outcomes[worker];
    ListColourer colourer(h, f, limits);
    std::uint64_t index = 0;
    for_each_canonical_assignment(h.vertex_count(), n, [&](const ListRows& rows) {
      const std::uint64_t i = index++;
      out.enumerated = index;
      if (i >= limits.max_assignments) {
        out.budget_hit = true;
        return false;
      }
      if (i > best_bad.load()) return false;
      if (i % jobs != worker) return true;
      try {
        if (!colourer.solve(ListAssignment(rows))) {
          out.bad_index = i;
          out.bad_rows = rows;
          std::uint64_t current = best_bad.load();
          while (i < current && !best_bad.compare_exchange_weak(current, i)) {
          }
          return false;
        }
      } catch (...) {
        out.error_index = i;
        out.error = std::current_exception();
        return false;
      }
      return true;
    });
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  const WorkerOutcome* bad = nullptr;
  const WorkerOutcome* failed = nullptr;
  bool budget_hit = false;
  std::uint64_t enumerated = 0;
  for (const auto& out : outcomes) {
    if (out.bad_index != std::numeric_limits<std::uint64_t>::max() &&
        (!bad || out.bad_index < bad->bad_index)) {
      bad = &out;
    }
    if (out.error && (!failed || out.error_index < failed->error_index)) failed = &out;
    budget_hit = budget_hit || out.budget_hit;
    enumerated = std::max(enumerated, out.enumerated);
  }
  if (failed && (!bad || failed->error_index < bad->bad_index)) std::rethrow_exception(failed->error);

  if (bad) {
    std::vector<std::vector<Colour>> lists(g.vertex_count());
    std::vector<Colour> filler(n);
    for (std::size_t i = 0; i < n; ++i) filler[i] = static_cast<Colour>(i);
    for (auto& list : lists) list = filler;
    for (std::size_t i = 0; i < core.size(); ++i) lists[core[i]] = bad->bad_rows[i];
    verdict.choosable = false;
    verdict.bad_assignment = ListAssignment(std::move(lists));
    verdict.assignments_checked = bad->bad_index + 1;
    return verdict;
  }
  if (budget_hit) {
    throw BudgetExceeded("choosability check exceeded " + std::to_string(limits.max_assignments) +
                         " list assignments");
  }
  verdict.choosable = true;
  verdict.assignments_checked = enumerated;
  return verdict;
}

std::size_t ch(const Graph& g, const FamilySpec& f, const SearchLimits& limits) {
  for (std::size_t n = chi(g, f, limits);; ++n) {
    if (is_n_choosable(g, n, f, limits).choosable) return n;
  }
}

Colouring greedy_degeneracy_list_colouring(const Graph& g, const ListAssignment& lists) {
  if (lists.size() != g.vertex_count()) {
    throw std::invalid_argument("list assignment does not match the graph");
  }
  const auto degeneracy = degeneracy_order(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (lists[v].size() < degeneracy.colouring_number) {
      throw std::invalid_argument("list of vertex " + std::to_string(v) + " has " +
                                  std::to_string(lists[v].size()) +
                                  " colours, colouring number is " +
                                  std::to_string(degeneracy.colouring_number));
    }
  }
  std::vector<Colour> colour(g.vertex_count());
  std::vector<bool> done(g.vertex_count(), false);
  std::vector<Colour> blocked;
  for (auto it = degeneracy.ordering.rbegin(); it != degeneracy.ordering.rend(); ++it) {
    const Vertex v = *it;
    blocked.clear();
    for (Vertex w : g.neighbours(v)) {
      if (done[w]) blocked.push_back(colour[w]);
    }
    std::sort(blocked.begin(), blocked.end());
    auto choice = std::find_if(lists[v].begin(), lists[v].end(), [&](Colour c) {
      return !std::binary_search(blocked.begin(), blocked.end(), c);
    });
    if (choice == lists[v].end()) {
      throw InvariantViolation("greedy", "vertex " + std::to_string(v) + " has no free colour");
    }
    colour[v] = *choice;
    done[v] = true;
  }
  return Colouring(std::move(colour));
}

// ---------------------------------------------------------------------------
// Text formats

ListAssignment read_list_assignment(std::istream& in, std::size_t vertex_count) {
  std::vector<std::vector<Colour>> lists(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    auto where = " (line " + std::to_string(line_no) + ")";
    if (tokens[0] != "list" || tokens.size() < 3) {
      throw std::invalid_argument("unrecognised list line" + where + ": " + line);
    }
    auto v = detail::require_uint(tokens[1], "vertex");
    if (v >= vertex_count) throw std::invalid_argument("list vertex out of range" + where);
    if (seen[v]) throw std::invalid_argument("vertex listed twice" + where);
    seen[v] = true;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      auto c = detail::require_uint(tokens[i], "colour");
      if (c > std::numeric_limits<Colour>::max()) throw std::invalid_argument("colour too large" + where);
      lists[v].push_back(static_cast<Colour>(c));
    }
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " has no list");
  }
  return ListAssignment(std::move(lists));
}

void write_list_assignment(std::ostream& out, const ListAssignment& lists) {
  for (Vertex v = 0; v < lists.size(); ++v) {
    out << "list " << v;
    for (Colour c : lists[v]) out << ' ' << c;
    out << '\n';
  }
}

Colouring read_colouring(std::istream& in, std::size_t vertex_count) {
  std::vector<Colour> colours(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw std::invalid_argument("bad colouring line: " + line);
    auto v = detail::require_uint(tokens[0], "vertex");
    auto c = detail::require_uint(tokens[1], "colour");
    if (v >= vertex_count || seen[v]) throw std::invalid_argument("bad colouring line: " + line);
    seen[v] = true;
    colours[v] = static_cast<Colour>(c);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("colouring is not total");
  }
  return Colouring(std::move(colours));
}

void write_colouring(std::ostream& out, const Colouring& phi) {
  for (Vertex v = 0; v < phi.size(); ++v) out << v << ' ' << phi[v] << '\n';
}

}  // namespace glc
