#include "common.hpp"

#include <gtest/gtest.h>

using namespace mbtest;

namespace {

std::vector<int> codes(const LoopBraidWord &w)
{
  std::vector<int> c;
  for (auto &l : w.letters())
    c.push_back(l.kind == LetterKind::sigma ? l.index : l.kind == LetterKind::sigma_inv ? -l.index : 1000 + l.index);
  return c;
}

LoopBraidWord random_word(std::mt19937_64 &rng, int m, int len, bool loop)
{
  LoopBraidWord w(m);
  for (int k = 0; k < len; ++k) {
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    int kind = static_cast<int>(rng() % (loop ? 3 : 2));
    w.push({i, kind == 0 ? LetterKind::sigma : kind == 1 ? LetterKind::sigma_inv : LetterKind::swap});
  }
  return w;
}

} // namespace

TEST(BraidAction, LettersMatchOracle)
{
  std::mt19937_64 rng(21);
  for (int k = 0; k < 500; ++k) {
    int n = 2 + static_cast<int>(rng() % 7), m = 2 + static_cast<int>(rng() % 9);
    auto rho = random_rho(rng, n, m);
    auto w = random_word(rng, m, 12, true);
    EXPECT_EQ(raw(act(rho, w)), act_oracle(raw(rho), codes(w))) << to_string(w);
  }
}

TEST(BraidAction, SingleLetters)
{
  auto rho = make(3, {{1, 2}, {2, 3}});
  // (a,b) -> (^a b, a) and (a,b) -> (b, a^b)
  EXPECT_EQ(act(rho, BraidWord(2, {sigma(1)})), make(3, {{1, 3}, {1, 2}}));
  EXPECT_EQ(act(rho, BraidWord(2, {sigma_inv(1)})), make(3, {{2, 3}, {1, 3}}));
  EXPECT_EQ(act(rho, LoopBraidWord(2, {swap_letter(1)})), make(3, {{2, 3}, {1, 2}}));
}

TEST(Dual, FourRoutesAgree)
{
  auto rho = torus_rho();
  auto want = make(4, {{3, 4}, {1, 4}, {2, 4}, {1, 3}, {3, 4}});
  EXPECT_EQ(raw(want), prefix_dual_oracle(4, raw(rho)));
  EXPECT_EQ(dual_factorization(rho), want);
  EXPECT_EQ(dual_factorization_via_graph(rho), want);
  EXPECT_EQ(reverse(act(rho, garside_word(5))), want);
  EXPECT_EQ(act(rho, dualizer_word(5)), want);
  EXPECT_EQ(monodromy(want), parse_permutation("(1 2 3 4)", 4));
}

TEST(Dual, SmallGoldenCase)
{
  auto rho = make(3, {{1, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(dual_factorization(rho), make(3, {{1, 3}, {2, 3}, {1, 2}}));
}

TEST(Dual, MatchesPrefixAndSuffixOracles)
{
  std::mt19937_64 rng(8);
  for (int k = 0; k < 500; ++k) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto rho = random_rho(rng, n, static_cast<int>(rng() % 12));
    EXPECT_EQ(raw(dual_factorization(rho)), prefix_dual_oracle(n, raw(rho)));
    EXPECT_EQ(raw(bar_dual(rho)), suffix_dual_oracle(n, raw(rho)));
    EXPECT_EQ(dual_factorization(dual_factorization(rho)), rho);
    EXPECT_EQ(bar_dual(bar_dual(rho)), rho);
  }
}

TEST(Dual, BarDualSmall)
{
  EXPECT_EQ(bar_dual(make(3, {{1, 2}, {2, 3}})), make(3, {{1, 3}, {2, 3}}));
}

TEST(Dual, ConcatFormula)
{
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto a = random_rho(rng, n, static_cast<int>(rng() % 6)), b = random_rho(rng, n, static_cast<int>(rng() % 6));
    EXPECT_EQ(dual_concat({a, b}), dual_factorization(concat(a, b)));
  }
  EXPECT_THROW(dual_concat({}), Error);
}

TEST(Words, Constructors)
{
  EXPECT_EQ(to_string(delta_word(2, 5, 6)), "s4 s3 s2");
  EXPECT_EQ(to_string(lambda_word(2, 5, 6)), "s2 s3 s4");
  EXPECT_EQ(to_string(garside_word(4)), "s3 s2 s1 s3 s2 s3");
  EXPECT_TRUE(garside_range(3, 3, 5).empty());
  EXPECT_EQ(garside_word(6).size(), 15);
  EXPECT_EQ(to_string(star_word(BraidWord(3, {sigma(1), sigma_inv(2)}))), "S1 s2");
  EXPECT_EQ(to_string(reverse_word(BraidWord(4, {sigma(1), sigma_inv(2)}))), "S3 s2");
  EXPECT_EQ(to_string(inverse(BraidWord(3, {sigma(1), sigma_inv(2)}))), "s2 S1");
  EXPECT_THROW(delta_word(3, 3, 4), Error);
  EXPECT_THROW(BraidWord(3, {sigma(3)}), Error);
}

TEST(Words, ParseAndPrint)
{
  auto w = parse_loop_word("s1 S2  p1", 3);
  EXPECT_EQ(w.letters(), (std::vector<Letter>{sigma(1), sigma_inv(2), swap_letter(1)}));
  EXPECT_EQ(parse_loop_word(to_string(w), 3), w);
  EXPECT_THROW(parse_loop_word("x1", 3), Error);
  EXPECT_THROW(parse_loop_word("s1x", 3), Error);
  EXPECT_THROW(parse_braid_word("p1", 3), Error);
  try {
    parse_loop_word("s3", 3);
    FAIL() << "no throw";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::index_range);
  }
}

TEST(Words, StrandMismatch)
{
  try {
    act(torus_rho(), garside_word(4));
    FAIL() << "no throw";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::strand_mismatch);
  }
  BraidWord a(3), b(4);
  EXPECT_THROW(a.append(b), Error);
}

TEST(Words, CableOfGarsideIsGarside)
{
  std::mt19937_64 rng(17);
  std::vector<std::vector<int>> comps{{1, 2}, {2, 1}, {2, 2}, {1, 2, 1}, {3, 1, 2}, {2, 3}};
  for (auto &widths : comps) {
    std::vector<BraidWord> inner;
    int total = 0;
    for (int w : widths) {
      inner.push_back(w >= 2 ? garside_word(w) : BraidWord(1));
      total += w;
    }
    auto cabled = operad_compose(garside_word(static_cast<int>(widths.size())), inner);
    for (int k = 0; k < 30; ++k) {
      auto rho = random_rho(rng, 2 + static_cast<int>(rng() % 6), total);
      EXPECT_EQ(act(rho, cabled), act(rho, garside_word(total)));
    }
  }
}

TEST(Words, CableOfSingleCrossing)
{
  // one crossing of cables of widths 1 and 2 is sigma_1 sigma_2
  EXPECT_EQ(to_string(cable_word(BraidWord(2, {sigma(1)}), {1, 2})), "s1 s2");
  EXPECT_EQ(to_string(cable_word(BraidWord(2, {sigma(1)}), {2, 1})), "s2 s1");
}

TEST(Relations, LoopRelationsHold)
{
  std::mt19937_64 rng(23);
  for (int k = 0; k < 500; ++k) {
    int m = 3 + static_cast<int>(rng() % 6);
    auto rho = random_rho(rng, 2 + static_cast<int>(rng() % 6), m);
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 2));
    auto A = [&](std::vector<Letter> l) { return act(rho, LoopBraidWord(m, std::move(l))); };
    EXPECT_EQ(A({sigma(i), sigma(i + 1), sigma(i)}), A({sigma(i + 1), sigma(i), sigma(i + 1)}));
    EXPECT_EQ(A({swap_letter(i), swap_letter(i + 1), sigma(i)}), A({sigma(i + 1), swap_letter(i), swap_letter(i + 1)}));
    EXPECT_EQ(A({sigma(i), sigma(i + 1), swap_letter(i)}), A({swap_letter(i + 1), sigma(i), sigma(i + 1)}));
    EXPECT_EQ(A({sigma(i), swap_letter(i + 1), swap_letter(i)}), A({swap_letter(i + 1), swap_letter(i), sigma(i + 1)}));
  }
}

TEST(Relations, ForbiddenLoopRelationFails)
{
  // s_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i s_{i+1} is not a relation of the action
  auto rho = make(3, {{1, 2}, {2, 3}, {1, 3}});
  auto lhs = act(rho, LoopBraidWord(3, {swap_letter(1), sigma(2), sigma(1)}));
  auto rhs = act(rho, LoopBraidWord(3, {sigma(2), sigma(1), swap_letter(2)}));
  EXPECT_EQ(raw(lhs), act_oracle(raw(rho), {1001, 2, 1}));
  EXPECT_EQ(raw(rhs), act_oracle(raw(rho), {2, 1, 1002}));
  EXPECT_NE(lhs, rhs);
}

TEST(Selfdual, K4AndK5Words)
{
  EXPECT_EQ(k4_selfdual(), make(4, {{1, 2}, {1, 3}, {2, 4}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_EQ(act(doubled(4, {{1, 2}, {2, 3}, {3, 4}}), star_word(BraidWord(6, {sigma(2), sigma(4), sigma_inv(3)}))),
            make(4, {{1, 2}, {2, 3}, {1, 4}, {1, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(k5_selfdual(), make(5, {{1, 2}, {2, 5}, {2, 3}, {1, 3}, {3, 4}, {2, 4}, {4, 5}, {3, 5}, {1, 5}, {1, 4}}));
  BraidWord beta = delta_word(2, 10, 10);
  for (int i : {3, 5, 7, 9})
    beta.push(sigma_inv(i));
  EXPECT_EQ(act(doubled(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}), star_word(beta)),
            make(5, {{1, 2}, {1, 5}, {3, 5}, {2, 5}, {2, 4}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {1, 4}}));
  EXPECT_TRUE(monodromy(k4_selfdual()).is_identity());
  EXPECT_TRUE(monodromy(k5_selfdual()).is_identity());
}
