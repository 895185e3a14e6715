#include <gtest/gtest.h>

#include "json.hpp"

#include "glc/errors.hpp"
#include "glc/gadget_dd.hpp"
#include "glc/random.hpp"
#include "glc/separation_lab.hpp"
#include "oracles.hpp"

using namespace glc;

TEST(Separation, InequalityExamples) {
  auto k4 = check_inequality(make_complete(4), proper_vs_forest());
  EXPECT_EQ(k4.lhs, 4u);
  EXPECT_EQ(k4.rhs, 4u);
  EXPECT_TRUE(k4.holds);
  EXPECT_TRUE(k4.tight);

  auto c5 = check_inequality(make_cycle(5), proper_vs_forest());
  EXPECT_EQ(c5.lhs, 3u);
  EXPECT_EQ(c5.rhs, 4u);
  EXPECT_TRUE(c5.holds);
  EXPECT_FALSE(c5.tight);

  for (auto& c : builtin_inequality_cases()) {
    auto r = check_inequality(make_complete(1), c);
    EXPECT_EQ(r.lhs, 1u);
    EXPECT_EQ(r.rhs, c.constant);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.tight, c.constant == 1);
  }
}

TEST(Separation, CaseTable) {
  EXPECT_EQ(proper_vs_mad(2).constant, 3u);
  EXPECT_EQ(cluster_vs_cluster(2, 5).constant, 3u);
  EXPECT_EQ(cluster_vs_cluster(2, 4).constant, 2u);
  EXPECT_EQ(parse_inequality_case("cluster:2:3").name, "cluster:2:3");
  EXPECT_EQ(parse_inequality_case("proper-mad:1").constant, 2u);
  EXPECT_THROW(parse_inequality_case("cluster:2"), std::invalid_argument);
  EXPECT_THROW(parse_inequality_case("nope"), std::invalid_argument);
  EXPECT_THROW(proper_vs_mad(0), std::invalid_argument);
}

TEST(Separation, ReportK2D0) {
  SeparationOptions o;
  o.k = 2;
  o.d = 0;
  o.trials = 200;
  o.seed = 7;
  auto r = run_separation(o);
  EXPECT_EQ(r.m, 5u);
  EXPECT_EQ(r.n, 3125u);
  EXPECT_EQ(r.star_upper, 2u);
  EXPECT_EQ(r.dd_lower, 6u);
  EXPECT_EQ(r.dd_upper, 6u);
  EXPECT_TRUE(r.structure_verified);
  EXPECT_TRUE(r.greedy_certified);
  EXPECT_EQ(r.conclusion, "ch_{D_0}(K_{5,3125}) = 6 > 4 >= 2*ch_F");
  auto text = r.to_text();
  EXPECT_EQ(text.substr(text.size() - r.conclusion.size() - 1), r.conclusion + "\n");
  auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["dd_lower"]["value"], 6);
  EXPECT_EQ(j["star_upper"]["trials"], 200);
  EXPECT_EQ(run_separation(o).to_json(), r.to_json());
}

TEST(Separation, ReportK2D1) {
  SeparationOptions o;
  o.d = 1;
  o.trials = 50;
  auto r = run_separation(o);
  EXPECT_EQ(r.n, 18750u);
  EXPECT_EQ(r.dd_lower, 6u);
}

TEST(Separation, OversizedGadgetReportsBound) {
  SeparationOptions o;
  o.k = 3;
  o.trials = 50;
  try {
    run_separation(o);
    FAIL() << "expected a budget refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("285311670611"), std::string::npos);
  }
}

// Properties.

TEST(SeparationProperty, InequalityHoldsOnRandomGraphs) {
  Rng rng(71);
  for (auto& c : builtin_inequality_cases()) {
    for (int t = 0; t < 40; ++t) {
      auto g = random_graph(1 + rng.below(6), 1 + rng.below(3), 4, rng);
      auto r = check_inequality(g, c);
      EXPECT_TRUE(r.holds) << c.name;
      EXPECT_EQ(r.lhs, oracle::chi(g, c.inner_family));
    }
  }
}

TEST(SeparationProperty, CertificatesRecheckable) {
  SeparationOptions o;
  o.trials = 5;
  o.seed = 3;
  auto r = run_separation(o);
  auto g = build_gadget(r.m, r.d);
  EXPECT_TRUE(verify_gadget_structure(g.spec, g.graph, g.lists));
  EXPECT_EQ(block_table_checksum(g.spec), r.block_table_hash);
  for (std::size_t k = 2; k < 20; ++k) EXPECT_GT(k * (k + 1), 2 * k);
}

TEST(SeparationProperty, FamilyChainAtChromaticLevel) {
  Rng rng(72);
  for (int t = 0; t < 200; ++t) {
    auto g = random_graph(1 + rng.below(7), 1, 3, rng);
    auto s = chi(g, family::StarForest{});
    auto f = chi(g, family::Forest{});
    auto m2 = chi(g, family::MaxAvgDegree{Rational(2)});
    EXPECT_GE(s, f);
    EXPECT_GE(f, m2);
  }
}
