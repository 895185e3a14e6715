#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "glc/colour_engine.hpp"

namespace glc {

/// Raw list rows, one sorted list per vertex.
using ListRows = std::vector<std::vector<Colour>>;

/// Return false to stop the enumeration.
using AssignmentVisitor = std::function<bool(const ListRows&)>;

/// Visits every k-list assignment on `vertex_count` vertices up to colour
/// renaming: scanning vertices in index order and each list in ascending
/// order, every newly introduced colour is the smallest unused integer.
/// Order is lexicographic over the sequence of sorted lists.
/// Returns the number of assignments visited.
std::uint64_t for_each_canonical_assignment(std::size_t vertex_count, std::size_t k,
                                            const AssignmentVisitor& visit);

/// Number of assignments for_each_canonical_assignment would visit.
std::uint64_t count_canonical_assignments(std::size_t vertex_count, std::size_t k);

/// Visits k-list assignments on K_{m,n} (A = 0..m-1, B = m..m+n-1) covering
/// every orbit under colour renaming and permutations inside A and inside B
/// at least once. Orbits may be visited more than once. Requires m <= 8.
std::uint64_t for_each_kmn_orbit_assignment(std::size_t m, std::size_t n, std::size_t k,
                                            const AssignmentVisitor& visit);

}  // namespace glc
