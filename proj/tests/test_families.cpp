#include <gtest/gtest.h>

#include "glc/families.hpp"
#include "glc/random.hpp"
#include "oracles.hpp"

using namespace glc;

namespace {

std::vector<FamilySpec> sample_families() {
  return {family::Clustered{1},       family::Clustered{3},     family::MaxDegree{0},
          family::MaxDegree{2},       family::Forest{},         family::StarForest{},
          family::LinearForest{},     family::ColouringNumber{2}, family::ColouringNumber{3},
          family::MaxAvgDegree{Rational(2)}, family::MaxAvgDegree{Rational(5, 2)}};
}

Graph star(std::size_t leaves) { return make_complete_bipartite(1, leaves); }

}  // namespace

TEST(Families, ParseAndPrint) {
  for (auto text : {"cluster:3", "maxdeg:0", "forest", "starforest", "linforest", "colnum:4",
                    "mad:2", "mad:5/2"}) {
    EXPECT_EQ(to_string(parse_family(text)), text);
  }
  EXPECT_EQ(to_string(parse_family("mad:4/2")), "mad:2");
  EXPECT_EQ(parse_family("mad:7/3"), FamilySpec(family::MaxAvgDegree{Rational(7, 3)}));
  for (auto bad : {"cluster:0", "colnum:0", "mad:1/0", "tree", "maxdeg:", "maxdeg:-1", "mad:x"}) {
    EXPECT_THROW(parse_family(bad), std::invalid_argument) << bad;
  }
}

TEST(Families, Examples) {
  auto k1 = make_complete(1);
  for (auto& f : sample_families()) EXPECT_TRUE(member(k1, f));
  EXPECT_FALSE(member(make_cycle(3), family::Forest{}));
  EXPECT_TRUE(member(star(5), family::StarForest{}));
  EXPECT_FALSE(member(make_path(4), family::StarForest{}));
  EXPECT_TRUE(member(make_cycle(4), family::MaxAvgDegree{Rational(2)}));
  EXPECT_FALSE(member(make_cycle(4), family::MaxAvgDegree{Rational(19, 10)}));
  EXPECT_TRUE(member(make_path(5), family::LinearForest{}));
  EXPECT_FALSE(member(star(3), family::LinearForest{}));
  EXPECT_TRUE(member(make_path(3), family::Clustered{3}));
  EXPECT_FALSE(member(make_path(4), family::Clustered{3}));
}

TEST(Families, EmptyGraphIsEverywhere) {
  for (auto& f : sample_families()) EXPECT_TRUE(member(Graph(), f));
}

TEST(Families, MadExamples) {
  EXPECT_EQ(mad(make_complete(1)), Rational(0));
  EXPECT_EQ(mad(make_cycle(4)), Rational(2));
  EXPECT_EQ(mad(make_complete(4)), Rational(3));
  EXPECT_EQ(mad(make_complete_bipartite(2, 3)), Rational(12, 5));
  EXPECT_THROW(mad(Graph()), std::invalid_argument);
}

TEST(Families, MembershipAgreesWithOracle) {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    auto g = random_graph(1 + rng.below(8), 1 + rng.below(3), 5, rng);
    for (auto& f : sample_families()) {
      EXPECT_EQ(member(g, f), oracle::member(g, f)) << to_string(f) << " on " << g.edge_count();
    }
  }
}

TEST(Families, MadRoutesAgreeWithOracle) {
  Rng rng(22);
  for (int t = 0; t < 150; ++t) {
    auto g = random_graph(1 + rng.below(11), 1 + rng.below(4), 6, rng);
    auto [p, q] = oracle::mad(g);
    Rational expected(p, q);
    EXPECT_EQ(mad_exhaustive(g), expected);
    EXPECT_EQ(mad_flow(g), expected);
    EXPECT_EQ(mad(g), expected);
  }
}

TEST(Families, MadFlowOnLargerGraphs) {
  // Beyond the exhaustive limit the flow route must match structure we know.
  EXPECT_EQ(mad(make_complete(25)), Rational(24));
  EXPECT_EQ(mad(make_cycle(40)), Rational(2));
  EXPECT_EQ(mad(make_complete_bipartite(5, 30)), Rational(2 * 150, 35));
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    auto g = random_graph(16 + rng.below(5), 1, 3, rng);
    EXPECT_EQ(mad_flow(g), mad_exhaustive(g));
  }
}

TEST(Families, DensityThreshold) {
  auto c4 = make_cycle(4);
  EXPECT_FALSE(density_exceeds(c4, Rational(2)));
  EXPECT_TRUE(density_exceeds(c4, Rational(199, 100)));
}

// Properties.

TEST(FamiliesProperty, Hereditary) {
  Rng rng(31);
  std::size_t checked = 0;
  for (int t = 0; t < 400; ++t) {
    auto g = random_graph(1 + rng.below(9), 1 + rng.below(2), 6, rng);
    for (auto& f : sample_families()) {
      if (!member(g, f)) continue;
      auto s = random_vertex_subset(g.vertex_count(), rng);
      EXPECT_TRUE(member(induced_subgraph(g, s), f)) << to_string(f);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(FamiliesProperty, Containments) {
  Rng rng(32);
  for (int t = 0; t < 500; ++t) {
    auto g = random_graph(1 + rng.below(8), 1, 3, rng);
    bool forest = member(g, family::Forest{});
    if (member(g, family::StarForest{})) EXPECT_TRUE(forest);
    if (member(g, family::LinearForest{})) EXPECT_TRUE(forest);
    if (forest) EXPECT_TRUE(member(g, family::MaxAvgDegree{Rational(2)}));
    EXPECT_EQ(member(g, family::MaxDegree{0}), g.edge_count() == 0);
  }
}

TEST(FamiliesProperty, MadBounds) {
  Rng rng(33);
  for (int t = 0; t < 200; ++t) {
    auto g = random_graph(1 + rng.below(10), 1, 2, rng);
    auto m = mad(g);
    EXPECT_GE(m, Rational(static_cast<std::int64_t>(2 * g.edge_count()),
                          static_cast<std::int64_t>(g.vertex_count())));
    auto s = random_vertex_subset(g.vertex_count(), rng);
    if (!s.empty()) EXPECT_LE(mad(induced_subgraph(g, s)), m);
  }
  for (int t = 0; t < 200; ++t) {
    auto forest = random_forest(1 + rng.below(30), rng);
    EXPECT_LT(mad(forest), Rational(2));
  }
}

TEST(FamiliesProperty, ColouringNumberMonotoneInK) {
  Rng rng(34);
  for (int t = 0; t < 200; ++t) {
    auto g = random_graph(1 + rng.below(9), 1, 2, rng);
    bool before = false;
    for (std::size_t k = 1; k <= 10; ++k) {
      bool now = member(g, family::ColouringNumber{k});
      if (before) EXPECT_TRUE(now);
      before = now;
    }
    EXPECT_TRUE(before);
  }
}
