#include "common.hpp"

#include <gtest/gtest.h>

using namespace mbtest;

TEST(Permutation, ComposeIsLeftToRight)
{
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto f = raw(random_rho(rng, n, 1 + static_cast<int>(rng() % 6)));
    auto g = raw(random_rho(rng, n, 1 + static_cast<int>(rng() % 6)));
    Images p = product(n, f), q = product(n, g), pq = then(p, q);
    Permutation P = Permutation::from_images({p.begin() + 1, p.end()});
    Permutation Q = Permutation::from_images({q.begin() + 1, q.end()});
    Permutation R = compose(P, Q);
    for (int v = 1; v <= n; ++v)
      ASSERT_EQ(R(v), pq[v]);
    EXPECT_EQ(P * Q, R);
  }
}

TEST(Permutation, ConjugationConventions)
{
  // g^h = h^-1 g h, ^h g = h g h^-1
  auto g = Permutation::cycle(5, {1, 2, 3});
  auto h = Permutation::cycle(5, {3, 4, 5});
  EXPECT_EQ(conjugate_right(g, h), compose(compose(inverse(h), g), h));
  EXPECT_EQ(conjugate_left(g, h), compose(compose(h, g), inverse(h)));
  // as maps, g^h renames the points of g by h
  EXPECT_EQ(conjugate_right(g, h), Permutation::cycle(5, {1, 2, 4}));
  Transposition t(1, 3);
  EXPECT_EQ(conjugate_right(t, h), Transposition(1, 4));
  EXPECT_EQ(conjugate_left(t, h), Transposition(1, 5));
  EXPECT_EQ(conjugate_by(Transposition(2, 3), Transposition(1, 2)), Transposition(1, 3));
}

TEST(Permutation, CyclesAndText)
{
  auto p = parse_permutation("(4 3 2 1)", 4);
  EXPECT_EQ(p(4), 3);
  EXPECT_EQ(p(1), 4);
  EXPECT_EQ(to_string(p), "(1 4 3 2)");
  EXPECT_EQ(to_string(Permutation(3)), "id");
  EXPECT_EQ(parse_permutation("id", 3), Permutation(3));
  auto q = parse_permutation("(1 2)(3 5)", 6);
  EXPECT_EQ(cycle_type(q), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(cycle_count(q), 4);
  EXPECT_FALSE(is_full_cycle(q));
  EXPECT_TRUE(is_full_cycle(parse_permutation("(1 3 2 4)", 4)));
  EXPECT_EQ(to_string(Transposition(5, 2)), "(2 5)");
}

TEST(Permutation, Errors)
{
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), Error);
  EXPECT_THROW(Transposition(2, 2), Error);
  EXPECT_THROW(parse_permutation("(1 2", 3), Error);
  EXPECT_THROW(parse_permutation("(1 7)", 3), Error);
  try {
    compose(Permutation(2), Permutation(3));
    FAIL() << "no throw";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::degree_mismatch);
  }
  EXPECT_STREQ(error_kind_name(ErrorKind::infeasible_type), "infeasible-type");
}

TEST(Permutation, InverseRoundTrip)
{
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    auto p = Permutation::from_images(img);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_EQ(parse_permutation(to_string(p), n), p);
  }
}
