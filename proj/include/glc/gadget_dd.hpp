#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "glc/colour_engine.hpp"
#include "glc/graph.hpp"

namespace glc {

/// The adversarial list assignment on K_{m,n} that defeats every m-list
/// defective colouring with defect d.
///
/// Side A gets pairwise disjoint m-sets; each of the m^m list colourings phi
/// of A owns a block B_phi of dm+1 side-B vertices whose lists equal phi(A).
struct GadgetSpec {
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t n = 0;
  std::vector<std::vector<Colour>> a_lists;
  /// blocks[t]: B-vertex ids (graph indices) for the t-th colouring of A in
  /// lexicographic order of list positions, vertex 0 most significant.
  std::vector<VertexSet> blocks;
  /// Lists of side-B vertices outside every block.
  std::vector<Colour> leftover_colours;

  std::size_t block_size() const { return d * m + 1; }
};

struct Gadget {
  Graph graph;
  ListAssignment lists;
  GadgetSpec spec;
};

/// (dm+1) * m^m, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> gadget_bound(std::size_t m, std::size_t d);

/// n defaults to the bound. Throws std::invalid_argument when n is below the
/// bound, m = 0, or the bound exceeds `max_vertices`.
Gadget build_gadget(std::size_t m, std::size_t d, std::optional<std::size_t> n = std::nullopt,
                    std::uint64_t max_vertices = 50'000'000);

/// Digits (list positions) of the t-th colouring of A, vertex 0 most significant.
std::vector<std::size_t> colouring_digits(std::uint64_t t, std::size_t m);

/// Checks every structural property the non-colourability argument relies on,
/// including L(v) = phi(A) for every phi and every v in B_phi.
/// Throws std::invalid_argument on dimension mismatch between spec, graph and lists.
bool verify_gadget_structure(const GadgetSpec& spec, const Graph& g, const ListAssignment& lists);

/// Enumerates the full product of lists and reports whether no colouring has
/// maximum class degree <= d. Throws BudgetExceeded past `max_assignments`.
bool verify_no_colouring_bruteforce(const Graph& g, const ListAssignment& lists, std::size_t d,
                                    std::uint64_t max_assignments = 100'000'000);

/// 64-bit FNV-1a of the canonical block-table text.
std::uint64_t block_table_checksum(const GadgetSpec& spec);
void write_block_table(std::ostream& out, const GadgetSpec& spec);

}  // namespace glc
