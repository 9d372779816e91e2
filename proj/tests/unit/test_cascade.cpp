#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "cascade_duel/cascade.hpp"
#include "fixtures.hpp"

using namespace cascade_duel;
using namespace cascade_duel::testing;

namespace {

Rational q(long num, long den) { return Rational(num) / Rational(den); }

Thresholds constant(const Graph& g, double theta) {
  return assign_thresholds(g, ThresholdMode::constant(theta), 0);
}

std::map<std::int64_t, Rational> nonzero(const Graph& g, const std::vector<Rational>& alpha) {
  std::map<std::int64_t, Rational> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (alpha[v] != 0) out[g.original_id(v)] = alpha[v];
  }
  return out;
}

}  // namespace

TEST(Thresholds, Modes) {
  const Graph g = sample_graph();
  const auto zero = constant(g, 0.0);
  EXPECT_EQ(zero.theta_of, std::vector<double>(10, 0.0));
  EXPECT_THROW(constant(g, 1.5), std::invalid_argument);
  EXPECT_THROW(constant(g, -0.1), std::invalid_argument);
  const auto u1 = assign_thresholds(g, ThresholdMode::uniform(), 12);
  const auto u2 = assign_thresholds(g, ThresholdMode::uniform(), 12);
  const auto u3 = assign_thresholds(g, ThresholdMode::uniform(), 13);
  EXPECT_EQ(u1.theta_of, u2.theta_of);
  EXPECT_NE(u1.theta_of, u3.theta_of);
  for (double t : u1.theta_of) {
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, 1.0);
  }
}

TEST(Thresholds, Parse) {
  EXPECT_EQ(ThresholdMode::parse("uniform").kind, ThresholdMode::Kind::kUniform);
  const auto c = ThresholdMode::parse("const:0.25");
  EXPECT_EQ(c.kind, ThresholdMode::Kind::kConstant);
  EXPECT_EQ(c.value, 0.25);
  EXPECT_EQ(ThresholdMode::parse(c.to_string()).value, 0.25);
  EXPECT_THROW(ThresholdMode::parse("const:"), std::invalid_argument);
  EXPECT_THROW(ThresholdMode::parse("normal"), std::invalid_argument);
}

TEST(Influence, SampleSeedsTwoFiveExact) {
  const Graph g = sample_graph();
  const auto f = propagate_influence_exact(g, id(g, 2), id(g, 5));
  const std::map<std::int64_t, Rational> alpha1{{2, 1},         {1, 1},         {3, q(4, 9)},
                                                {4, q(4, 9)},   {7, q(4, 30)},  {10, q(4, 15)},
                                                {8, q(4, 30)},  {9, q(4, 30)}};
  const std::map<std::int64_t, Rational> alpha2{{5, 1},         {6, 1},         {7, q(1, 5)},
                                                {3, q(1, 15)},  {8, q(1, 5)},   {9, q(1, 5)},
                                                {10, q(1, 10)}, {4, q(1, 18)}};
  EXPECT_EQ(nonzero(g, f.alpha1_of()), alpha1);
  EXPECT_EQ(nonzero(g, f.alpha2_of()), alpha2);
}

TEST(Influence, SampleSeedsTwoFiveParentParts) {
  const Graph g = sample_graph();
  const auto f = propagate_influence_exact(g, id(g, 2), id(g, 5));
  // Node 3 gets 1/3 from node 2 and (1/3)/3 from its sibling 4.
  EXPECT_EQ(f.track(1).parent_component[id(g, 3)], q(1, 3));
  EXPECT_EQ(f.track(1).parent_component[id(g, 10)], q(2, 9));
  EXPECT_EQ(f.track(2).parent_component[id(g, 3)], q(1, 15));
  EXPECT_EQ(f.track(2).parent_component[id(g, 4)], q(1, 18));
}

TEST(Influence, SampleSeedsTwoFiveFloatingPoint) {
  const Graph g = sample_graph();
  const auto exact = propagate_influence_exact(g, id(g, 2), id(g, 5));
  const auto f = propagate_influence(g, id(g, 2), id(g, 5));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    EXPECT_NEAR(f.alpha1_of()[v], exact.alpha1_of()[v].convert_to<double>(), 1e-12);
    EXPECT_NEAR(f.alpha2_of()[v], exact.alpha2_of()[v].convert_to<double>(), 1e-12);
  }
}

TEST(Influence, SampleSeedsThreeFiveExact) {
  const Graph g = sample_graph();
  const auto f = propagate_influence_exact(g, id(g, 3), id(g, 5));
  const std::map<std::int64_t, Rational> alpha1{{3, 1},        {2, q(4, 9)},    {4, q(4, 9)},
                                                {7, q(1, 5)},  {1, q(4, 9)},    {10, q(29, 90)},
                                                {8, q(1, 5)},  {9, q(1, 5)}};
  const std::map<std::int64_t, Rational> alpha2{{5, 1},         {6, 1},         {7, q(1, 5)},
                                                {8, q(1, 5)},   {9, q(1, 5)},   {10, q(1, 10)},
                                                {4, q(1, 30)},  {2, q(1, 90)},  {1, q(1, 90)}};
  EXPECT_EQ(nonzero(g, f.alpha1_of()), alpha1);
  EXPECT_EQ(nonzero(g, f.alpha2_of()), alpha2);
}

TEST(Influence, IsolatedSeed) {
  const Graph g = graph_from_text("1 2\n2 3\n");
  const Graph h = Graph::from_edges(4, g.edges());  // node 3 isolated
  const auto f = propagate_influence(h, 3, 0);
  EXPECT_EQ(f.alpha1_of(), (std::vector<double>{0, 0, 0, 1}));
}

TEST(Influence, RejectsBadSeeds) {
  const Graph g = sample_graph();
  EXPECT_THROW(propagate_influence(g, 1, 1), std::invalid_argument);
  EXPECT_THROW(propagate_influence(g, 1, 99), std::invalid_argument);
}

TEST(Influence, SwappingSeedsSwapsFieldsExactly) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_connected_graph(60, 50, seed);
    Rng rng(seed);
    const auto s1 = static_cast<NodeId>(rng.below(60));
    auto s2 = static_cast<NodeId>(rng.below(60));
    if (s2 == s1) s2 = (s1 + 1) % 60;
    const auto a = propagate_influence(g, s1, s2);
    const auto b = propagate_influence(g, s2, s1);
    EXPECT_EQ(a.alpha1_of(), b.alpha2_of());
    EXPECT_EQ(a.alpha2_of(), b.alpha1_of());
  }
}

TEST(Influence, BoundedAndZeroWhenUnreached) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(50, 0.08, seed);
    Rng rng(seed + 100);
    const auto s1 = static_cast<NodeId>(rng.below(50));
    const auto s2 = static_cast<NodeId>((s1 + 1 + rng.below(49)) % 50);
    const auto f = propagate_influence(g, s1, s2);
    for (int i = 1; i <= 2; ++i) {
      const auto& t = f.track(i);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        EXPECT_GE(t.alpha[v], 0.0);
        EXPECT_LE(t.alpha[v], 1.0 + 1e-12);
        if (!t.levels.reached(v)) {
          EXPECT_EQ(t.alpha[v], 0.0);
        }
      }
    }
    EXPECT_EQ(f.alpha1_of()[s1], 1.0);
    EXPECT_EQ(f.alpha2_of()[s2], 1.0);
    EXPECT_EQ(f.alpha1_of()[s2], 0.0);
  }
}

TEST(Influence, StrictModeStopsWeakNodes) {
  const Graph g = sample_graph();
  Thresholds th = constant(g, 0.0);
  th.theta_of[id(g, 3)] = 0.5;  // alpha1(3) = 4/9 falls short
  PropagationOptions strict{true, &th};
  const auto f = propagate_influence(g, id(g, 2), id(g, 5), strict);
  // 3 still receives (4/9) but forwards nothing: 4 loses its sibling share,
  // 7 loses its only parent and keeps the sibling share from 10.
  EXPECT_NEAR(f.alpha1_of()[id(g, 3)], 4.0 / 9.0, 1e-15);
  EXPECT_NEAR(f.alpha1_of()[id(g, 4)], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(f.alpha1_of()[id(g, 10)], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(f.alpha1_of()[id(g, 7)], 1.0 / 30.0, 1e-15);
  EXPECT_NEAR(f.alpha1_of()[id(g, 8)], 1.0 / 30.0, 1e-15);
  EXPECT_THROW(propagate_influence(g, 1, 2, PropagationOptions{true, nullptr}),
               std::invalid_argument);
}

TEST(Classify, SeedsTwoFiveIsATie) {
  const Graph g = sample_graph();
  const auto f = propagate_influence(g, id(g, 2), id(g, 5));
  const auto out = classify(f, constant(g, 0.0), 7);
  EXPECT_EQ(originals(g, out.supporters1), (std::set<std::int64_t>{1, 2, 3, 4, 10}));
  EXPECT_EQ(originals(g, out.supporters2), (std::set<std::int64_t>{5, 6, 7, 8, 9}));
  EXPECT_TRUE(out.coin_assigned.empty());
  EXPECT_EQ(out.verdict, Verdict::kTie);
  EXPECT_EQ(to_string(out.verdict), "TIE");
}

TEST(Classify, SeedsThreeFiveCoinSplit) {
  const Graph g = sample_graph();
  const auto f = propagate_influence(g, id(g, 3), id(g, 5));
  std::map<std::int64_t, int> to_one;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const auto out = classify(f, constant(g, 0.0), trial);
    const auto s1 = originals(g, out.supporters1);
    const auto s2 = originals(g, out.supporters2);
    for (std::int64_t v : {1, 2, 3, 4, 10}) ASSERT_TRUE(s1.count(v));
    for (std::int64_t v : {5, 6}) ASSERT_TRUE(s2.count(v));
    ASSERT_EQ(originals(g, out.coin_assigned), (std::set<std::int64_t>{7, 8, 9}));
    for (std::int64_t v : {7, 8, 9}) to_one[v] += s1.count(v) ? 1 : 0;
  }
  for (std::int64_t v : {7, 8, 9}) {
    EXPECT_GE(to_one[v], 450) << v;
    EXPECT_LE(to_one[v], 550) << v;
  }
}

TEST(Classify, ThetaOneKeepsOnlyFullInfluence) {
  const Graph g = sample_graph();
  // 3 and 4 have no pendant neighbours, so only the seeds reach alpha = 1.
  const auto f = propagate_influence(g, id(g, 3), id(g, 4));
  const auto out = classify(f, constant(g, 1.0), 1);
  EXPECT_EQ(originals(g, out.supporters1), (std::set<std::int64_t>{3}));
  EXPECT_EQ(originals(g, out.supporters2), (std::set<std::int64_t>{4}));
  EXPECT_EQ(out.verdict, Verdict::kTie);
  // A pendant neighbour of a seed also gets alpha = 1.
  const auto f25 = propagate_influence(g, id(g, 2), id(g, 5));
  const auto out25 = classify(f25, constant(g, 1.0), 1);
  EXPECT_EQ(originals(g, out25.supporters1), (std::set<std::int64_t>{1, 2}));
  EXPECT_EQ(originals(g, out25.supporters2), (std::set<std::int64_t>{5, 6}));
}

TEST(Classify, ForcedTieCoinIsFair) {
  // Path 0-1-2 with seeds at both ends: node 1 gets 1/2 from each.
  const Graph g = path_graph(3);
  const auto f = propagate_influence(g, 0, 2);
  ASSERT_EQ(f.alpha1_of()[1], f.alpha2_of()[1]);
  int ones = 0;
  for (std::uint64_t trial = 0; trial < 10000; ++trial) {
    const auto out = classify(f, constant(g, 0.0), trial);
    ones += out.support_of[1] == Support::kInfo1;
  }
  EXPECT_GE(ones, 4800);
  EXPECT_LE(ones, 5200);
}

TEST(Classify, PartitionAndVerdictOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(60, 0.05, seed);
    Rng rng(seed);
    const auto s1 = static_cast<NodeId>(rng.below(60));
    const auto s2 = static_cast<NodeId>((s1 + 1 + rng.below(59)) % 60);
    const auto th = assign_thresholds(g, ThresholdMode::uniform(), seed);
    const auto f = propagate_influence(g, s1, s2);
    const auto out = classify(f, th, seed);
    std::vector<int> seen(g.node_count(), 0);
    for (NodeId v : out.supporters1) seen[v] += 1;
    for (NodeId v : out.supporters2) seen[v] += 1;
    for (NodeId v : out.uninformed) seen[v] += 1;
    for (NodeId v = 0; v < g.node_count(); ++v) ASSERT_EQ(seen[v], 1) << v;
    for (NodeId v : out.supporters1) {
      EXPECT_GE(f.alpha1_of()[v], f.alpha2_of()[v] * (1 - 1e-12));
      EXPECT_GE(f.alpha1_of()[v], th.theta_of[v]);
    }
    const auto n1 = out.supporters1.size(), n2 = out.supporters2.size();
    const Verdict expected =
        n1 > n2 ? Verdict::kFirm1Wins : (n2 > n1 ? Verdict::kFirm2Wins : Verdict::kTie);
    EXPECT_EQ(out.verdict, expected);
    std::vector<NodeId> both;
    std::set_intersection(out.informed1.begin(), out.informed1.end(), out.informed2.begin(),
                          out.informed2.end(), std::back_inserter(both));
    EXPECT_EQ(both, out.informed_both);
  }
}

TEST(LevelMetrics, SampleCounts) {
  const Graph g = sample_graph();
  const auto f = propagate_influence(g, id(g, 2), id(g, 5));
  const auto out = classify(f, constant(g, 0.0), 3);
  ASSERT_EQ(out.per_level.size(), 4u);
  EXPECT_DOUBLE_EQ(out.per_level[0].mu_influenced[0], 0.1);
  EXPECT_DOUBLE_EQ(out.per_level[0].mu_influenced[1], 0.1);
  EXPECT_DOUBLE_EQ(out.per_level[1].mu_influenced[0], 0.4);
  EXPECT_DOUBLE_EQ(out.per_level.back().mu_influenced[0], out.mu_influenced(1));
  EXPECT_DOUBLE_EQ(out.per_level.back().mu_supporter[1], out.mu_supporter(2));
  EXPECT_DOUBLE_EQ(out.mu_supporter(1), 0.5);
}

TEST(LevelMetrics, MonotoneAndBounded) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_connected_graph(80, 60, seed);
    const auto th = assign_thresholds(g, ThresholdMode::uniform(), seed);
    const auto f = propagate_influence(g, 0, 1 + static_cast<NodeId>(seed % 79));
    const auto out = classify(f, th, seed);
    for (std::size_t L = 0; L < out.per_level.size(); ++L) {
      EXPECT_EQ(out.per_level[L].level, L);
      for (int i = 0; i < 2; ++i) {
        const auto& m = out.per_level[L];
        EXPECT_GE(m.mu_influenced[i], 0.0);
        EXPECT_LE(m.mu_influenced[i], 1.0);
        EXPECT_LE(m.mu_supporter[i], 1.0);
        if (L > 0) {
          EXPECT_GE(m.mu_influenced[i], out.per_level[L - 1].mu_influenced[i]);
          EXPECT_GE(m.mu_supporter[i], out.per_level[L - 1].mu_supporter[i]);
        }
      }
    }
    EXPECT_DOUBLE_EQ(out.per_level.back().mu_influenced[0], out.mu_influenced(1));
    EXPECT_DOUBLE_EQ(out.per_level.back().mu_supporter[0], out.mu_supporter(1));
  }
}
