#include "common.hpp"

#include <gtest/gtest.h>

using namespace mbtest;

namespace {

// smallest label above the last one, from vertex to vertex
std::vector<int> increasing_trail_oracle(const EdgeLabeledGraph &g, int v, int &end)
{
  std::vector<int> labels;
  int last = 0, x = v;
  while (true) {
    int best = 0;
    for (int i = 1; i <= g.edge_count(); ++i) {
      auto [a, b] = g.edge(i);
      if ((a == x || b == x) && i > last) {
        best = i;
        break;
      }
    }
    if (best == 0)
      break;
    labels.push_back(best);
    last = best;
    x = g.other_end(best, x);
  }
  end = x;
  return labels;
}

} // namespace

TEST(Migt, MatchesOracleOnRandomGraphs)
{
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto g = from_factorization(random_rho(rng, n, static_cast<int>(rng() % 12)));
    Leo leo = leo_of(g);
    for (int v = 1; v <= n; ++v) {
      int end = 0;
      auto want = increasing_trail_oracle(g, v, end);
      auto t = migt(leo, v);
      EXPECT_EQ(t.labels(), want);
      EXPECT_EQ(t.end(), end);
      EXPECT_EQ(monodromy(g)(v), end);
    }
  }
}

TEST(Migt, IsolatedVertexGivesEmptyTrail)
{
  EdgeLabeledGraph g(3, {{1, 2}});
  auto t = migt(leo_of(g), 3);
  EXPECT_TRUE(t.steps.empty());
  EXPECT_EQ(t.end(), 3);
  EXPECT_EQ(monodromy(g)(3), 3);
}

TEST(Migt, TrailMatchingOnTorusGraph)
{
  // ->4 = <-3, ->3 = <-2, ->2 = <-1, ->1 = <-4
  Leo leo = leo_of(from_factorization(torus_rho()));
  auto m = trail_matching(leo);
  std::vector<std::pair<int, int>> want{{1, 4}, {2, 1}, {3, 2}, {4, 3}};
  EXPECT_EQ(m, want);
  EXPECT_EQ(backward_migt(leo, 3), migt(leo, 4));
}

TEST(Migt, ReversedTrail)
{
  Leo leo = leo_of(from_factorization(torus_rho()));
  auto t = migt(leo, 1);
  auto r = reversed(t);
  EXPECT_EQ(r.start, t.end());
  EXPECT_EQ(r.end(), t.start);
  EXPECT_EQ(reversed(r), t);
}

TEST(Ptdc, TorusGraphIsValidDoubleCover)
{
  Leo leo = leo_of(from_factorization(torus_rho()));
  Ptdc p = ptdc_of(leo);
  EXPECT_FALSE(ptdc_violation(leo, p).has_value());
  EXPECT_EQ(monodromy_digraph(p).to_permutation(), monodromy(torus_rho()));
  // drop a trail: some edge is no longer covered twice
  auto ts = p.trails();
  ts.pop_back();
  EXPECT_TRUE(ptdc_violation(leo, Ptdc(ts)).has_value());
}

TEST(DualGraph, EdgeJoinsTheTwoTrailsThroughIt)
{
  std::mt19937_64 rng(37);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = from_factorization(random_rho(rng, n, static_cast<int>(rng() % 10)));
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.edge_count() + 1));
    for (int v = 1; v <= n; ++v) {
      int end = 0;
      for (int l : increasing_trail_oracle(g, v, end))
        holders[l].push_back(v);
    }
    auto d = dual_graph(g);
    for (int i = 1; i <= g.edge_count(); ++i) {
      ASSERT_EQ(holders[i].size(), 2u);
      EXPECT_EQ(d.edge(i), (Edge{std::min(holders[i][0], holders[i][1]), std::max(holders[i][0], holders[i][1])}));
    }
    EXPECT_EQ(dual_graph(d), g);
    EXPECT_EQ(monodromy(d), inverse(monodromy(g)));
  }
}

TEST(DualGraph, StarsAndTrailsExchange)
{
  auto g = from_factorization(torus_rho());
  auto gd = dual_graph(g);
  Leo leo = leo_of(g), leod = leo_of(gd);
  for (int v = 1; v <= 4; ++v) {
    auto t = migt(leo, v).labels();
    std::sort(t.begin(), t.end());
    EXPECT_EQ(leod.at(v), t);
    EXPECT_EQ(migt(leod, v).labels(), leo.at(v));
  }
}

TEST(Leo, SixVertexOrdersGiveACycle)
{
  Leo leo = six_vertex_leo();
  auto d = medial_digraph(leo);
  EXPECT_EQ(d.arc_count(), 6);
  for (int x = 1; x <= 6; ++x) {
    ASSERT_EQ(d.out_arcs(x).size(), 1u);
    EXPECT_EQ(d.arc(d.out_arcs(x)[0]).to, x % 6 + 1);
  }
  EXPECT_FALSE(is_acyclic(d));
  EXPECT_FALSE(is_e_realizable(leo));
  EXPECT_TRUE(is_e_realizable(leo_of(from_factorization(torus_rho()))));
}

TEST(Leo, RejectsWrongIncidence)
{
  EXPECT_THROW(Leo(2, {{1, 2}}, {{1}, {}}), Error);
  EXPECT_THROW(Leo(2, {{1, 2}}, {{1}}), Error);
  EXPECT_THROW(Leo(2, {{1, 1}}, {{1, 1}, {}}), Error);
}
