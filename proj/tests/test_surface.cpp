#include "common.hpp"

#include <gtest/gtest.h>

using namespace mbtest;

namespace {

int arc_between(const MedialDigraph &d, int from, int to)
{
  for (int k = 0; k < d.arc_count(); ++k)
    if (d.arc(k).from == from && d.arc(k).to == to)
      return k;
  return -1;
}

RotationSystem from_labels(int n, const std::vector<Edge> &e, const std::vector<std::vector<int>> &lab)
{
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v)
    for (int l : lab[v - 1])
      rot[v - 1].push_back(dart(e, l, v));
  return RotationSystem(n, e, rot);
}

} // namespace

TEST(PegInvariants, TorusWithOneHole)
{
  auto p = peg_invariants(from_factorization(torus_rho()));
  EXPECT_EQ(p.chi, -1);
  EXPECT_EQ(p.b, 1);
  EXPECT_EQ(p.genus_total, 1);
  EXPECT_EQ(p.components, 1);
}

TEST(PegInvariants, EulerRelationOnConnectedGraphs)
{
  std::mt19937_64 rng(51);
  int tested = 0;
  for (int k = 0; k < 400; ++k) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto rho = random_rho(rng, n, n - 1 + static_cast<int>(rng() % 8));
    auto g = from_factorization(rho);
    if (component_count(g) != 1)
      continue;
    ++tested;
    auto p = peg_invariants(g);
    int b = cycle_count(monodromy(rho));
    EXPECT_EQ(p.b, b);
    EXPECT_EQ(p.chi, n - rho.length());
    EXPECT_EQ(2 - 2 * p.genus_total - b, p.chi);
  }
  EXPECT_GT(tested, 100);
}

TEST(PegInvariants, K6Labeling)
{
  auto r1 = make(6, {{1, 2}, {3, 5}, {1, 3}, {4, 6}, {2, 4}, {1, 4}, {5, 6}, {1, 6}, {2, 3}, {2, 5}, {1, 5}, {3, 4}, {4, 5}, {2, 6}, {3, 6}});
  EXPECT_EQ(cycle_type(monodromy(r1)), (std::vector<int>{2, 2, 2}));
  auto p = peg_invariants(from_factorization(r1));
  EXPECT_EQ(p.chi, -9);
  EXPECT_EQ(p.b, 3);
  EXPECT_EQ(p.genus_total, 4);
  EXPECT_TRUE(is_complete_graph(from_factorization(r1)));
}

TEST(Ceg, FacesAndGenusOfK4)
{
  auto rs = k4_ceg();
  auto t = ceg_topology(rs);
  EXPECT_EQ(t.n, 4);
  EXPECT_EQ(t.m, 6);
  EXPECT_EQ(t.n - t.m + t.f, 2 - 2 * t.genus);
  EXPECT_EQ(static_cast<int>(faces(rs).size()), t.f);
  int darts = 0;
  for (auto &f : faces(rs))
    darts += static_cast<int>(f.size());
  EXPECT_EQ(darts, 12);
  EXPECT_TRUE(ceg_isomorphic_labeled(dual_ceg(dual_ceg(rs)), rs));
  EXPECT_EQ(ceg_topology(dual_ceg(rs)).genus, t.genus);
  EXPECT_TRUE(ceg_isomorphic_labeled(mirrored(mirrored(rs)), rs));
}

TEST(Ceg, CompletionKeepsGenus)
{
  std::mt19937_64 rng(53);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto g = from_factorization(random_rho(rng, n, static_cast<int>(rng() % 9)));
    auto rs = completion(g);
    EXPECT_EQ(ceg_topology(rs).genus, peg_invariants(g).genus_total);
    auto peg = peggable(rs);
    ASSERT_TRUE(peg.has_value());
    EXPECT_EQ(peg_invariants(*peg).genus_total, peg_invariants(g).genus_total);
  }
}

TEST(Ceg, RejectsBadRotations)
{
  std::vector<Edge> e{{1, 2}};
  EXPECT_THROW(RotationSystem(2, e, {{0}, {0}}), Error);
  EXPECT_THROW(RotationSystem(2, e, {{0}, {}}), Error);
  EXPECT_THROW(RotationSystem(1, {{1, 1}}, {{0, 1}}), Error);
}

TEST(Peggable, K4FasReproducesTheLabeling)
{
  auto rs = k4_ceg();
  auto d = medial_digraph_ceg(rs);
  EXPECT_FALSE(is_acyclic(d));
  // e->d, f->a, c->a, e->b with a..f = 1..6, one arc of each colour
  std::vector<char> removed(static_cast<std::size_t>(d.arc_count()), 0);
  std::set<int> colours;
  for (auto [x, y] : std::vector<Edge>{{5, 4}, {6, 1}, {3, 1}, {5, 2}}) {
    int k = arc_between(d, x, y);
    ASSERT_GE(k, 0) << x << "->" << y;
    removed[k] = 1;
    colours.insert(d.arc(k).color);
  }
  EXPECT_EQ(colours.size(), 4u);
  auto rest = detail::without(d, removed);
  EXPECT_TRUE(is_acyclic(rest));
  std::vector<int> sort{1, 2, 4, 3, 6, 5};
  EXPECT_TRUE(is_topological_sort(rest, sort));
  auto g = labeling_from_sort(rs, sort);
  EXPECT_EQ(to_factorization(g), make(4, {{1, 2}, {1, 3}, {2, 4}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_TRUE(peggable(rs).has_value());
  auto fas = diverse_fas(rs);
  ASSERT_TRUE(fas.has_value());
  std::set<int> c2(fas->colors.begin(), fas->colors.end());
  EXPECT_EQ(c2.size(), fas->colors.size());
}

TEST(Peggable, TripleEdgeIsNotPeggable)
{
  auto rs = triple_edge_ceg();
  EXPECT_FALSE(peggable(rs).has_value());
  EXPECT_FALSE(diverse_fas(rs).has_value());
  std::vector<int> order{0, 1, 2, 3};
  int count = 0;
  do {
    std::vector<Edge> e;
    for (int k : order)
      e.push_back(rs.edges()[static_cast<std::size_t>(k)]);
    auto mu = monodromy(EdgeLabeledGraph(3, e));
    EXPECT_EQ(cycle_type(mu), std::vector<int>{3});
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(count, 24);
  auto sub = subdivide_to_peggable_traced(rs);
  EXPECT_TRUE(peggable(sub.result).has_value());
  EXPECT_EQ(ceg_topology(sub.result).genus, ceg_topology(rs).genus);
  EXPECT_GE(sub.subdivided_edges, 1);
}

TEST(Peggable, SubdivisionOnRepeatedDescents)
{
  // four parallel edges whose rotations defeat a single pass
  std::vector<Edge> e(4, Edge{1, 2});
  auto rs = from_labels(2, e, {{3, 1, 4, 2}, {3, 2, 4, 1}});
  auto sub = subdivide_to_peggable(rs);
  EXPECT_TRUE(peggable(sub).has_value());
  EXPECT_EQ(ceg_topology(sub).genus, ceg_topology(rs).genus);
}

TEST(Peggable, RandomSubdivisions)
{
  std::mt19937_64 rng(57);
  for (int k = 0; k < 300; ++k) {
    auto rs = detail::random_rotation_system(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 7));
    auto sub = subdivide_to_peggable(rs);
    EXPECT_TRUE(peggable(sub).has_value());
    EXPECT_EQ(ceg_topology(sub).genus, ceg_topology(rs).genus);
  }
}

TEST(TOperation, KeepsMonodromy)
{
  auto rho = make(4, {{1, 2}, {2, 3}, {3, 4}});
  auto t = t_operation(rho, 4, 1);
  EXPECT_EQ(monodromy(t), monodromy(rho));
  EXPECT_EQ(t.length(), rho.length() + 2);
  EXPECT_THROW(t_operation(rho, 2, 1), Error);
}

TEST(Realize, EveryAdmissibleTypeUpToEight)
{
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> l;
    auto rec = [&](auto &&self, int rem, int mx) -> void {
      if (rem == 0) {
        // parity of a product of n(n-1)/2 transpositions
        int sign = 0;
        for (int x : l)
          sign += x - 1;
        bool parity_ok = sign % 2 == (n * (n - 1) / 2) % 2;
        if (!parity_ok) {
          EXPECT_FALSE(admissible_kn_type(n, l));
        }
        if (admissible_kn_type(n, l)) {
          auto rho = realize_kn_type(n, l);
          EXPECT_TRUE(is_complete_graph(from_factorization(rho)));
          EXPECT_EQ(cycle_type(monodromy(rho)), l);
        } else {
          try {
            realize_kn_type(n, l);
            ADD_FAILURE() << "no throw for n=" << n;
          } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::infeasible_type);
          }
        }
        return;
      }
      for (int k = std::min(rem, mx); k >= 1; --k) {
        l.push_back(k);
        self(self, rem - k, k);
        l.pop_back();
      }
    };
    rec(rec, n, n);
  }
}

TEST(Selfdual, BraidedK4AndK5)
{
  for (const auto &rho : {k4_selfdual(), k5_selfdual()}) {
    EXPECT_TRUE(is_complete_graph(from_factorization(rho)));
    auto rs = ceg_of_identity_factorization(rho);
    EXPECT_TRUE(selfdual_check(rs));
  }
  EXPECT_THROW(ceg_of_identity_factorization(torus_rho()), Error);
}

TEST(Selfdual, ConcatWithDualWhenClosed)
{
  std::mt19937_64 rng(59);
  int tested = 0;
  for (int k = 0; k < 3000 && tested < 40; ++k) {
    auto rho = random_rho(rng, 2 + static_cast<int>(rng() % 4), 2 * static_cast<int>(rng() % 4));
    if (!monodromy(rho).is_identity())
      continue;
    ++tested;
    auto x = concat(rho, dual_factorization(rho));
    EXPECT_TRUE(selfdual_check(ceg_of_identity_factorization(x)));
  }
  EXPECT_GT(tested, 10);
}
