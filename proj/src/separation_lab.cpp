#include "glc/separation_lab.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "glc/errors.hpp"
#include "glc/gadget_dd.hpp"
#include "glc/random.hpp"
#include "glc/star_kmn.hpp"
#include "hash.hpp"
#include "text_util.hpp"

namespace glc {

InequalityCase proper_vs_forest() {
  return {"proper-forest", family::MaxDegree{0}, family::Forest{}, 2};
}

InequalityCase star_vs_forest() {
  return {"star-forest", family::StarForest{}, family::Forest{}, 2};
}

InequalityCase proper_vs_mad(std::size_t k) {
  if (k == 0) throw std::invalid_argument("proper-mad needs k >= 1");
  return {"proper-mad:" + std::to_string(k), family::MaxDegree{0},
          family::MaxAvgDegree{Rational(static_cast<std::int64_t>(k))}, k + 1};
}

InequalityCase cluster_vs_cluster(std::size_t k, std::size_t k_prime) {
  if (k == 0 || k_prime == 0) throw std::invalid_argument("cluster sizes must be positive");
  return {"cluster:" + std::to_string(k) + ":" + std::to_string(k_prime), family::Clustered{k},
          family::Clustered{k_prime}, (k_prime + k - 1) / k};
}

std::vector<InequalityCase> builtin_inequality_cases() {
  return {proper_vs_forest(),       star_vs_forest(),         proper_vs_mad(1),
          proper_vs_mad(2),         cluster_vs_cluster(1, 2), cluster_vs_cluster(2, 3),
          cluster_vs_cluster(2, 5)};
}

InequalityCase parse_inequality_case(const std::string& name) {
  if (name == "proper-forest") return proper_vs_forest();
  if (name == "star-forest") return star_vs_forest();
  if (name.starts_with("proper-mad:")) {
    return proper_vs_mad(detail::require_uint(std::string_view(name).substr(11), "mad k"));
  }
  if (name.starts_with("cluster:")) {
    auto rest = std::string_view(name).substr(8);
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      return cluster_vs_cluster(detail::require_uint(rest.substr(0, colon), "cluster k"),
                                detail::require_uint(rest.substr(colon + 1), "cluster k'"));
    }
  }
  throw std::invalid_argument("unknown inequality case '" + name + "'");
}

InequalityCheck check_inequality(const Graph& g, const InequalityCase& c,
                                 const SearchLimits& limits) {
  InequalityCheck out;
  out.lhs = chi(g, c.inner_family, limits);
  out.rhs = c.constant * chi(g, c.outer_family, limits);
  out.holds = out.lhs <= out.rhs;
  out.tight = out.lhs == out.rhs;
  return out;
}

namespace {

std::string hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t fold_colouring(std::uint64_t seed, const Colouring& phi) {
  std::ostringstream text;
  write_colouring(text, phi);
  return detail::fnv1a(text.str(), seed);
}

}  // namespace

SeparationReport run_separation(const SeparationOptions& options) {
  if (options.k < 2) throw std::invalid_argument("separation needs k >= 2");
  if (options.trials == 0) throw std::invalid_argument("separation needs at least one trial");
  const std::size_t k = options.k;
  const std::size_t m = star_part_size(k);
  const auto bound = gadget_bound(m, options.d);
  if (!bound || *bound > options.max_blocked_vertices) {
    throw BudgetExceeded("K_{" + std::to_string(m) + ",n} needs n >= (dm+1)*m^m = " +
                         (bound ? std::to_string(*bound) : std::string("more than 2^64")) +
                         ", beyond the block-check budget of " +
                         std::to_string(options.max_blocked_vertices));
  }

  SeparationReport report;
  report.k = k;
  report.d = options.d;
  report.m = m;
  report.seed = options.seed;

  const Gadget gadget = build_gadget(m, options.d, std::nullopt, options.max_blocked_vertices);
  const Graph& g = gadget.graph;
  report.n = gadget.spec.n;

  // Lower bound: no D_d-colouring from the gadget's m-lists.
  if (!verify_gadget_structure(gadget.spec, g, gadget.lists)) {
    throw InvariantViolation("gadget-structure", "gadget failed its structural check");
  }
  report.structure_verified = true;
  report.blocks_checked = gadget.spec.blocks.size();
  report.block_table_hash = block_table_checksum(gadget.spec);
  report.dd_lower = m + 1;

  // Upper bound: greedy proper colouring from any (m+1)-lists.
  Rng rng(options.seed);
  const FamilySpec proper = family::MaxDegree{0};
  if (degeneracy_order(g).colouring_number != m + 1) {
    throw InvariantViolation("greedy", "colouring number of K_{m,n} is not m+1");
  }
  std::uint64_t greedy_hash = detail::kFnvOffset;
  for (std::size_t s = 0; s < options.greedy_samples; ++s) {
    const auto lists = random_list_assignment(g.vertex_count(), m + 1, 2 * (m + 1), rng);
    const auto phi = greedy_degeneracy_list_colouring(g, lists);
    if (!is_valid_list_colouring(g, lists, phi, proper)) {
      throw InvariantViolation("greedy", "sample " + std::to_string(s) + " is not proper");
    }
    greedy_hash = fold_colouring(greedy_hash, phi);
  }
  report.greedy_certified = true;
  report.greedy_samples = options.greedy_samples;
  report.greedy_hash = greedy_hash;
  report.dd_upper = m + 1;

  // Star side: every sampled k-list assignment gets a star-forest colouring.
  const std::size_t palette = options.palette == 0 ? 3 * k : options.palette;
  const FamilySpec star = family::StarForest{};
  std::uint64_t star_hash = detail::kFnvOffset;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const auto lists = random_list_assignment(g.vertex_count(), k, palette, rng);
    const auto result = star_colour_kmn(k, g, lists);
    if (!is_valid_list_colouring(g, lists, result.colouring, star)) {
      throw InvariantViolation("star-trials", "trial " + std::to_string(t) + " is not a star forest");
    }
    star_hash = fold_colouring(star_hash, result.colouring);
  }
  report.star_upper = k;
  report.star_trials = options.trials;
  report.star_hash = star_hash;

  if (!(report.dd_lower == report.dd_upper && report.dd_lower == k * (k + 1) &&
        report.dd_lower > 2 * report.star_upper)) {
    throw InvariantViolation("conclusion", "k(k+1) > 2k failed");
  }
  std::ostringstream conclusion;
  conclusion << "ch_{D_" << report.d << "}(K_{" << m << "," << report.n << "}) = " << report.dd_lower
             << " > " << 2 * report.star_upper << " >= 2*ch_F";
  report.conclusion = conclusion.str();
  return report;
}

std::string SeparationReport::to_text() const {
  std::ostringstream out;
  out << "separation k=" << k << " d=" << d << "\n";
  out << "graph: K_{" << m << "," << n << "} with m = k(k+1)-1 = " << m
      << ", n = (dm+1)*m^m = " << n << "\n";
  out << "star_upper: ch_S(G) <= " << star_upper
      << " (K_{m,n} star-colouring construction + " << star_trials
      << " seeded trials, seed " << seed << ", all valid; hash " << hex(star_hash) << ")\n";
  out << "dd_lower: ch_{D_" << d << "}(G) >= " << dd_lower << " (structure verified over "
      << blocks_checked << " blocks; block table hash " << hex(block_table_hash) << ")\n";
  out << "dd_upper: ch_{D_" << d << "}(G) <= ch(G) <= " << dd_upper
      << " (greedy degeneracy colouring on " << greedy_samples << " sampled " << dd_upper
      << "-list assignments; hash " << hex(greedy_hash) << ")\n";
  out << "chain: ch(G) >= ch_{D_" << d << "}(G) = " << dd_lower << " = k(k+1) > 2k = "
      << 2 * star_upper << " >= 2*ch_S(G) >= 2*ch_F(G) >= 2*ch_{M_2}(G)\n";
  out << "counterexample to ch(G) <= 2*ch_F(G): ch(G) >= " << dd_lower << " > " << 2 * star_upper
      << "\n";
  out << conclusion << "\n";
  return out.str();
}

std::string SeparationReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["d"] = d;
  j["m"] = m;
  j["n"] = n;
  j["star_upper"] = {{"value", star_upper},
                     {"trials", star_trials},
                     {"seed", seed},
                     {"hash", hex(star_hash)}};
  j["dd_lower"] = {{"value", dd_lower},
                   {"structure_verified", structure_verified},
                   {"blocks_checked", blocks_checked},
                   {"block_table_hash", hex(block_table_hash)}};
  j["dd_upper"] = {{"value", dd_upper},
                   {"greedy_certified", greedy_certified},
                   {"samples", greedy_samples},
                   {"hash", hex(greedy_hash)}};
  j["conclusion"] = conclusion;
  return j.dump(2) + "\n";
}

}  // namespace glc
