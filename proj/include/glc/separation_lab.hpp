#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "glc/colour_engine.hpp"
#include "glc/families.hpp"
#include "glc/graph.hpp"

namespace glc {

/// One instance of chi_inner(G) <= constant * chi_outer(G), where constant is
/// the largest inner-chromatic number of a graph in the outer family.
struct InequalityCase {
  std::string name;
  FamilySpec inner_family;
  FamilySpec outer_family;
  std::size_t constant = 1;
};

/// chi(G) <= 2 chi_F(G).
InequalityCase proper_vs_forest();
/// chi_S(G) <= 2 chi_F(G).
InequalityCase star_vs_forest();
/// chi(G) <= (k+1) chi_{M_k}(G).
InequalityCase proper_vs_mad(std::size_t k);
/// chi_{G_k}(G) <= ceil(k'/k) chi_{G_k'}(G).
InequalityCase cluster_vs_cluster(std::size_t k, std::size_t k_prime);

/// The cases swept by default.
std::vector<InequalityCase> builtin_inequality_cases();
/// Looks up `proper-forest`, `star-forest`, `proper-mad:<k>`, `cluster:<k>:<k'>`.
InequalityCase parse_inequality_case(const std::string& name);

struct InequalityCheck {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds = false;
  bool tight = false;
};

InequalityCheck check_inequality(const Graph& g, const InequalityCase& c,
                                 const SearchLimits& limits = {});

struct SeparationOptions {
  std::size_t k = 2;
  std::size_t d = 0;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t greedy_samples = 20;
  /// Colours available to random star-trial lists; 0 means 3k.
  std::size_t palette = 0;
  /// Largest (dm+1)*m^m accepted for the block-by-block structure check.
  std::uint64_t max_blocked_vertices = 5'000'000;
};

struct SeparationReport {
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t star_upper = 0;
  std::size_t star_trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t star_hash = 0;

  std::size_t dd_lower = 0;
  bool structure_verified = false;
  std::size_t blocks_checked = 0;
  std::uint64_t block_table_hash = 0;

  std::size_t dd_upper = 0;
  bool greedy_certified = false;
  std::size_t greedy_samples = 0;
  std::uint64_t greedy_hash = 0;

  std::string conclusion;

  std::string to_text() const;
  std::string to_json() const;
};

/// Builds the separating K_{m,n}, m = k(k+1)-1, and certifies
/// ch_S <= k (seeded trials) and ch_{D_d} = m+1 (structure + greedy).
/// Throws BudgetExceeded if the gadget is too large, InvariantViolation if a
/// certificate fails.
SeparationReport run_separation(const SeparationOptions& options);

}  // namespace glc
