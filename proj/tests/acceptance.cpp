// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// runtime limit. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "glc/colour_engine.hpp"
#include "glc/enumeration.hpp"
#include "glc/errors.hpp"
#include "glc/families.hpp"
#include "glc/gadget_dd.hpp"
#include "glc/random.hpp"
#include "glc/separation_lab.hpp"
#include "glc/star_kmn.hpp"
#include "oracles.hpp"

using namespace glc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_time = secs < limit_seconds;
  bool pass = o.ok && in_time;
  failures += !pass;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / limit %.0f s", secs, limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << " | " << o.detail
            << " | " << timing << (in_time ? "" : " (too slow)") << std::endl;
}

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += " FAILED: " + what + ";";
  }
}

// Largest number of side-A vertices in one monochromatic component, and in one colour class.
std::pair<std::size_t, std::size_t> a_vertices_together(const Graph& g, const Colouring& phi,
                                                        std::size_t m) {
  std::size_t per_component = 0, per_class = 0;
  for (auto c : phi.image()) {
    auto cls = phi.class_of(c);
    std::size_t in_class = 0;
    for (auto v : cls) in_class += v < m;
    per_class = std::max(per_class, in_class);
    for (auto& comp : connected_components(induced_subgraph(g, cls))) {
      std::size_t a = 0;
      for (auto i : comp) a += cls[i] < m;
      per_component = std::max(per_component, a);
    }
  }
  return {per_component, per_class};
}

Outcome star_property_suite() {
  Outcome o;
  struct Plan {
    std::size_t k;
    std::vector<std::size_t> ns;
    std::size_t runs;
  };
  std::ostringstream detail;
  for (const Plan& p : {Plan{2, {1, 2, 5, 10, 20}, 200}, Plan{3, {1, 5, 10}, 100}}) {
    const std::size_t m = star_part_size(p.k);
    std::size_t total = 0, valid = 0, component_ok = 0, class_ok = 0;
    for (auto n : p.ns) {
      auto g = make_complete_bipartite(m, n);
      Rng rng(1000 * p.k + n);
      for (std::size_t t = 0; t < p.runs; ++t) {
        auto lists = random_list_assignment(m + n, p.k, 3 * p.k, rng);
        ++total;
        auto r = star_colour_kmn(p.k, g, lists);
        valid += is_valid_list_colouring(g, lists, r.colouring, family::StarForest{});
        auto [per_component, per_class] = a_vertices_together(g, r.colouring, m);
        component_ok += per_component <= 1;
        class_ok += per_class <= 1;
      }
    }
    expect(o, valid == total, "star-forest validity");
    expect(o, component_ok == total, "one A-vertex per monochromatic component");
    detail << " k=" << p.k << ": valid " << valid << "/" << total << ", <=1 A-vertex per component "
           << component_ok << "/" << total << " (per whole class " << class_ok << "/" << total
           << ", informational);";
  }
  o.detail = detail.str() + o.detail;
  return o;
}

Outcome star_cross_oracle() {
  Outcome o;
  std::ostringstream detail;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = make_complete_bipartite(5, n);
    ListColourer search(g, family::StarForest{});
    std::uint64_t seen = 0, star_ok = 0, search_ok = 0;
    auto visit = [&](const ListRows& rows) {
      ListAssignment lists(rows);
      ++seen;
      auto r = star_colour_kmn(2, g, lists);
      star_ok += is_valid_list_colouring(g, lists, r.colouring, family::StarForest{});
      auto found = search.solve(lists);
      search_ok += found && is_valid_list_colouring(g, lists, *found, family::StarForest{});
      return true;
    };
    // n = 3 uses one representative per symmetry orbit (side permutations and renaming).
    const char* mode = n < 3 ? "renaming-canonical" : "orbit representatives";
    if (n < 3) {
      for_each_canonical_assignment(5 + n, 2, visit);
    } else {
      for_each_kmn_orbit_assignment(5, n, 2, visit);
    }
    expect(o, star_ok == seen, "star colouring on K_{5," + std::to_string(n) + "}");
    expect(o, search_ok == seen, "exhaustive search agreement on K_{5," + std::to_string(n) + "}");
    detail << " n=" << n << " " << mode << ": " << star_ok << "/" << seen << " star, " << search_ok
           << "/" << seen << " search;";
  }
  o.detail = detail.str() + o.detail;
  return o;
}

Outcome gadget_bruteforce() {
  Outcome o;
  const FamilySpec proper = family::MaxDegree{0};
  auto g20 = build_gadget(2, 0);
  expect(o, g20.graph == make_complete_bipartite(2, 4), "gadget(2,0) is K_{2,4}");
  expect(o, verify_no_colouring_bruteforce(g20.graph, g20.lists, 0), "gadget(2,0) brute force");
  auto verdict = is_n_choosable(g20.graph, 2, proper);
  expect(o, !verdict.choosable && verdict.bad_assignment.has_value(), "K_{2,4} not 2-choosable");
  if (verdict.bad_assignment) {
    expect(o, !oracle::list_colourable(g20.graph, verdict.bad_assignment->lists(), proper),
           "witness refuted by product enumeration");
  }
  auto value = ch(g20.graph, proper);
  expect(o, value == 3, "ch(K_{2,4}) = 3");
  auto g21 = build_gadget(2, 1);
  expect(o, g21.graph.vertex_count() == 14, "gadget(2,1) is K_{2,12}");
  std::uint64_t product = 1;
  for (auto& l : g21.lists.lists()) product *= l.size();
  expect(o, product == 16384, "16384 assignments");
  expect(o, verify_no_colouring_bruteforce(g21.graph, g21.lists, 1), "gadget(2,1) brute force");
  o.detail = " K_{2,4}: brute force none, witness found, ch = " + std::to_string(value) +
             "; K_{2,12}: " + std::to_string(product) + " assignments, no D_1-colouring;" + o.detail;
  return o;
}

Outcome gadget_structural() {
  Outcome o;
  auto g = build_gadget(5, 0);
  expect(o, g.spec.blocks.size() == 3125, "3125 blocks");
  expect(o, verify_gadget_structure(g.spec, g.graph, g.lists), "structure check");
  Rng rng(42);
  std::size_t ok = 0;
  for (int s = 0; s < 20; ++s) {
    auto lists = random_list_assignment(g.graph.vertex_count(), 6, 12, rng);
    auto phi = greedy_degeneracy_list_colouring(g.graph, lists);
    ok += is_valid_list_colouring(g.graph, lists, phi, family::MaxDegree{0});
  }
  expect(o, ok == 20, "greedy 6-list colourings");
  o.detail = " K_{5,3125}: " + std::to_string(g.spec.blocks.size()) +
             " blocks verified, greedy proper on " + std::to_string(ok) + "/20 6-list assignments;" +
             o.detail;
  return o;
}

Outcome separation_certificate() {
  Outcome o;
  SeparationOptions options;
  options.k = 2;
  options.d = 0;
  options.trials = 200;
  options.seed = 7;
  auto r = run_separation(options);
  expect(o, r.star_upper == 2, "star_upper = 2");
  expect(o, r.dd_lower == 6 && r.dd_upper == 6, "dd = 6");
  expect(o, r.structure_verified && r.greedy_certified, "certificates");
  expect(o, r.dd_lower > 2 * r.star_upper, "6 > 2*2");
  expect(o, r.conclusion == "ch_{D_0}(K_{5,3125}) = 6 > 4 >= 2*ch_F", "conclusion text");
  o.detail = " " + r.conclusion + ";" + o.detail;
  return o;
}

Outcome exact_small_values() {
  Outcome o;
  struct Golden {
    const char* what;
    std::function<std::size_t()> engine;
    std::function<std::size_t()> brute;
    std::size_t expected;
  };
  const FamilySpec proper = family::MaxDegree{0};
  auto k2 = make_complete(2), k3 = make_complete(3), k4 = make_complete(4);
  auto c4 = make_cycle(4), c5 = make_cycle(5);
  std::vector<Golden> goldens{
      {"chi(K3,proper)", [&] { return chi(k3, proper); }, [&] { return oracle::chi(k3, proper); }, 3},
      {"chi(K4,forest)", [&] { return chi(k4, family::Forest{}); },
       [&] { return oracle::chi(k4, family::Forest{}); }, 2},
      {"chi(C4,starforest)", [&] { return chi(c4, family::StarForest{}); },
       [&] { return oracle::chi(c4, family::StarForest{}); }, 2},
      {"chi(C5,forest)", [&] { return chi(c5, family::Forest{}); },
       [&] { return oracle::chi(c5, family::Forest{}); }, 2},
      {"ch(C4,proper)", [&] { return ch(c4, proper); },
       [&] {
         return oracle::choosable(c4, 1, 4, proper) ? 1u : oracle::choosable(c4, 2, 8, proper) ? 2u : 3u;
       },
       2},
      {"ch(K2,forest)", [&] { return ch(k2, family::Forest{}); },
       [&] { return oracle::choosable(k2, 1, 2, family::Forest{}) ? 1u : 2u; }, 1},
  };
  std::ostringstream detail;
  for (auto& g : goldens) {
    auto e = g.engine(), b = g.brute();
    expect(o, e == g.expected && b == g.expected, g.what);
    detail << " " << g.what << "=" << e << " (brute " << b << ");";
  }
  o.detail = detail.str() + o.detail;
  return o;
}

Outcome chromatic_sweep() {
  Outcome o;
  std::ostringstream detail;
  for (auto& c : builtin_inequality_cases()) {
    Rng rng(std::hash<std::string>{}(c.name) & 0xffff);
    std::size_t holds = 0, tight = 0;
    for (int t = 0; t < 500; ++t) {
      auto g = random_graph(1 + rng.below(7), 1 + rng.below(4), 5, rng);
      auto r = check_inequality(g, c);
      holds += r.holds;
      tight += r.tight;
    }
    expect(o, holds == 500, c.name + " holds");
    if (c.name == "proper-forest") {
      auto k4 = check_inequality(make_complete(4), c);
      expect(o, tight > 0 && k4.tight, "proper-forest tight instance");
    }
    detail << " " << c.name << " " << holds << "/500 tight " << tight << ";";
  }
  o.detail = detail.str() + o.detail;
  return o;
}

Outcome invariant_suites() {
  Outcome o;
  std::ostringstream detail;
  const std::vector<FamilySpec> families{
      family::Clustered{2},       family::MaxDegree{1},      family::Forest{},
      family::StarForest{},       family::LinearForest{},    family::ColouringNumber{2},
      family::MaxAvgDegree{Rational(2)}};

  // Hereditariness: 1000 (graph, subset) pairs per family with the graph a member.
  Rng rng(808);
  std::size_t pairs = 0, kept = 0;
  for (auto& f : families) {
    for (int t = 0; t < 1000; ++t) {
      auto g = random_graph(1 + rng.below(9), 1, 3, rng);
      while (!member(g, f)) {
        auto s = random_vertex_subset(g.vertex_count(), rng);
        g = induced_subgraph(g, s);
      }
      auto h = induced_subgraph(g, random_vertex_subset(g.vertex_count(), rng));
      ++pairs;
      kept += member(h, f) && oracle::member(h, f);
    }
  }
  expect(o, kept == pairs, "hereditariness");
  detail << " hereditary " << kept << "/" << pairs << ";";

  // Monotonicity in n on graphs with at most 6 vertices.
  SearchLimits limits;
  limits.max_assignments = 200'000;
  std::size_t mono_checked = 0, mono_ok = 0, mono_skipped = 0;
  for (int t = 0; t < 40; ++t) {
    auto g = random_graph(1 + rng.below(6), 1, 2, rng);
    auto& f = families[rng.below(families.size())];
    for (std::size_t n = 1; n <= 2; ++n) {
      try {
        auto lo = is_n_choosable(g, n, f, limits);
        auto hi = is_n_choosable(g, n + 1, f, limits);
        ++mono_checked;
        mono_ok += !lo.choosable || hi.choosable;
      } catch (const BudgetExceeded&) {
        ++mono_skipped;
      }
    }
  }
  expect(o, mono_ok == mono_checked && mono_checked > 0, "monotone in n");
  detail << " monotone " << mono_ok << "/" << mono_checked << " (" << mono_skipped
         << " over budget);";

  // chi <= ch on 50 instances.
  std::size_t chi_ok = 0;
  for (int t = 0; t < 50; ++t) {
    auto g = random_graph(1 + rng.below(5), 1, 2, rng);
    auto& f = families[t % families.size()];
    chi_ok += chi(g, f) <= ch(g, f);
  }
  expect(o, chi_ok == 50, "chi <= ch");
  detail << " chi<=ch " << chi_ok << "/50;";

  // Exact mad.
  bool mad_ok = mad(make_cycle(4)) == Rational(2) && mad(make_complete(4)) == Rational(3);
  std::size_t forests_below = 0;
  for (int t = 0; t < 200; ++t) forests_below += mad(random_forest(1 + rng.below(30), rng)) < Rational(2);
  expect(o, mad_ok, "mad(C4)=2, mad(K4)=3");
  expect(o, forests_below == 200, "forests below 2");
  detail << " mad C4=2 K4=3 " << (mad_ok ? "ok" : "wrong") << ", forests <2 " << forests_below
         << "/200;";
  o.detail = detail.str() + o.detail;
  return o;
}

}  // namespace

int main() {
  criterion(1, "star-forest colouring of K_{m,n}, random k-lists", 30, star_property_suite);
  criterion(2, "star colouring vs exhaustive search, K_{5,n}, n<=3", 120, star_cross_oracle);
  criterion(3, "gadget at brute-force scale", 10, gadget_bruteforce);
  criterion(4, "gadget at structural scale", 5, gadget_structural);
  criterion(5, "separation certificate k=2 d=0", 60, separation_certificate);
  criterion(6, "exact small values", 5, exact_small_values);
  criterion(7, "chromatic inequality sweep", 300, chromatic_sweep);
  criterion(8, "invariant suites", 300, invariant_suites);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures;
}
