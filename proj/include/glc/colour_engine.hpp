#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "glc/families.hpp"
#include "glc/graph.hpp"

namespace glc {

using Colour = std::uint32_t;

/// Total map vertex -> colour id.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  std::size_t size() const noexcept { return colours_.size(); }
  Colour operator[](Vertex v) const { return colours_.at(v); }
  const std::vector<Colour>& colours() const noexcept { return colours_; }

  /// phi^{-1}(c), sorted.
  VertexSet class_of(Colour c) const;
  /// Distinct colours used, ascending.
  std::vector<Colour> image() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// Per-vertex nonempty colour lists, each stored sorted and duplicate-free.
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Sorts each list; throws std::invalid_argument on an empty list or a
  /// repeated colour inside one list.
  explicit ListAssignment(std::vector<std::vector<Colour>> lists);

  std::size_t size() const noexcept { return lists_.size(); }
  std::span<const Colour> operator[](Vertex v) const { return lists_.at(v); }
  const std::vector<std::vector<Colour>>& lists() const noexcept { return lists_; }
  bool contains(Vertex v, Colour c) const;

  /// Common list size if all lists have the same size.
  std::optional<std::size_t> uniform_size() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Colour>> lists_;
};

struct SearchLimits {
  /// Cap on tentative assignments inside one colouring search.
  std::uint64_t max_nodes = 100'000'000;
  /// Cap on list assignments examined by one choosability verdict.
  std::uint64_t max_assignments = 100'000'000;
  /// Worker threads for choosability enumeration; the verdict does not depend on it.
  unsigned jobs = 1;
};

struct ChoosabilityVerdict {
  bool choosable = false;
  std::optional<ListAssignment> bad_assignment;  // present iff !choosable
  std::uint64_t assignments_checked = 0;
  std::size_t core_size = 0;  // vertices left after peeling degree < n
};

/// Throws std::invalid_argument if `phi` is not defined on exactly g's vertices.
bool is_valid_colouring(const Graph& g, const Colouring& phi, const FamilySpec& f);

/// True iff phi is valid for `f` and phi(v) lies in L(v) for every v.
bool is_valid_list_colouring(const Graph& g, const ListAssignment& lists, const Colouring& phi,
                             const FamilySpec& f);

/// Reusable exhaustive L-colouring search for one (graph, family) pair.
///
/// Vertices are coloured in reversed degeneracy order, colours tried in
/// ascending id; after each tentative choice only the class of the new colour
/// is re-checked, and only the component containing the new vertex.
class ListColourer {
 public:
  ListColourer(const Graph& g, const FamilySpec& f, SearchLimits limits = {});
  ~ListColourer();
  ListColourer(ListColourer&&) noexcept;
  ListColourer& operator=(ListColourer&&) noexcept;

  /// Throws BudgetExceeded when the node cap is hit.
  std::optional<Colouring> solve(const ListAssignment& lists);
  std::uint64_t last_node_count() const noexcept;

 private:
  friend Colouring optimal_colouring(const Graph&, const FamilySpec&, const SearchLimits&);

  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::optional<Colouring> find_list_colouring(const Graph& g, const ListAssignment& lists,
                                             const FamilySpec& f, const SearchLimits& limits = {});

/// A valid colouring with colours 1..chi, chi minimal.
Colouring optimal_colouring(const Graph& g, const FamilySpec& f, const SearchLimits& limits = {});
std::size_t chi(const Graph& g, const FamilySpec& f, const SearchLimits& limits = {});

/// Decides n-choosability by enumerating n-list assignments up to colour
/// renaming. Throws BudgetExceeded when max_assignments is exceeded.
ChoosabilityVerdict is_n_choosable(const Graph& g, std::size_t n, const FamilySpec& f,
                                   const SearchLimits& limits = {});

std::size_t ch(const Graph& g, const FamilySpec& f, const SearchLimits& limits = {});

/// Proper colouring from the lists along the reversed degeneracy order.
/// Requires |L(v)| >= colouring_number(g) for every v.
Colouring greedy_degeneracy_list_colouring(const Graph& g, const ListAssignment& lists);

// List file: `list <v> <c1> ... <ck>`, each vertex exactly once.
ListAssignment read_list_assignment(std::istream& in, std::size_t vertex_count);
void write_list_assignment(std::ostream& out, const ListAssignment& lists);
// Colouring file: `<v> <c>` per line, sorted by v.
Colouring read_colouring(std::istream& in, std::size_t vertex_count);
void write_colouring(std::ostream& out, const Colouring& phi);

}  // namespace glc
