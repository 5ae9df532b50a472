#pragma once

#include "mindbody/egraph.hpp"

#include <cstdint>
#include <sstream>
#include <type_traits>

namespace mindbody {

enum class LetterKind : std::uint8_t { sigma, sigma_inv, swap };

struct Letter {
  int index = 1;
  LetterKind kind = LetterKind::sigma;

  Letter inverted() const
  {
    switch (kind) {
    case LetterKind::sigma: return {index, LetterKind::sigma_inv};
    case LetterKind::sigma_inv: return {index, LetterKind::sigma};
    default: return *this;
    }
  }
  bool operator==(const Letter &) const = default;
};

inline Letter sigma(int i) { return {i, LetterKind::sigma}; }
inline Letter sigma_inv(int i) { return {i, LetterKind::sigma_inv}; }
inline Letter swap_letter(int i) { return {i, LetterKind::swap}; }

// Words on m strands. Swap letters are admitted only in the loop braid group.
template <bool Loop>
class BasicWord {
public:
  BasicWord() = default;
  explicit BasicWord(int strands, std::vector<Letter> letters = {}) : m_(strands), w_(std::move(letters))
  {
    if (strands < 1)
      fail(ErrorKind::precondition, "word needs at least one strand");
    for (auto &l : w_)
      check(l);
  }

  // braid words embed into the loop braid group
  template <bool L2, typename = std::enable_if_t<Loop && !L2>>
  BasicWord(const BasicWord<L2> &w) : m_(w.strands()), w_(w.letters())
  {
  }

  int strands() const noexcept { return m_; }
  const std::vector<Letter> &letters() const noexcept { return w_; }
  int size() const noexcept { return static_cast<int>(w_.size()); }
  bool empty() const noexcept { return w_.empty(); }

  BasicWord &push(Letter l)
  {
    check(l);
    w_.push_back(l);
    return *this;
  }
  BasicWord &append(const BasicWord &o)
  {
    if (o.m_ != m_)
      fail(ErrorKind::strand_mismatch, "appending words on different strand counts");
    w_.insert(w_.end(), o.w_.begin(), o.w_.end());
    return *this;
  }

  friend BasicWord operator*(BasicWord a, const BasicWord &b) { return a.append(b); }
  bool operator==(const BasicWord &) const = default;

private:
  void check(const Letter &l) const
  {
    if (l.index < 1 || l.index > m_ - 1)
      fail(ErrorKind::index_range, "generator index " + std::to_string(l.index) + " outside 1.." + std::to_string(m_ - 1));
    if (!Loop && l.kind == LetterKind::swap)
      fail(ErrorKind::precondition, "swap letter in a braid word");
  }

  int m_ = 1;
  std::vector<Letter> w_;
};

using BraidWord = BasicWord<false>;
using LoopBraidWord = BasicWord<true>;

// ---- the action ----

inline void apply_letter(std::vector<Transposition> &f, const Letter &l)
{
  auto &a = f[static_cast<std::size_t>(l.index - 1)];
  auto &b = f[static_cast<std::size_t>(l.index)];
  switch (l.kind) {
  case LetterKind::sigma: { // (a, b) -> (^a b, a)
    Transposition nb = conjugate_by(b, a);
    b = a;
    a = nb;
    break;
  }
  case LetterKind::sigma_inv: { // (a, b) -> (b, a^b)
    Transposition na = conjugate_by(a, b);
    a = b;
    b = na;
    break;
  }
  case LetterKind::swap: std::swap(a, b); break;
  }
}

template <bool Loop>
Factorization act(const Factorization &rho, const BasicWord<Loop> &w)
{
  if (w.strands() != std::max(1, rho.length()))
    fail(ErrorKind::strand_mismatch,
         "word on " + std::to_string(w.strands()) + " strands, factorization of length " + std::to_string(rho.length()));
  auto f = rho.factors();
  for (auto &l : w.letters())
    apply_letter(f, l);
  return Factorization(rho.degree(), std::move(f));
}

// ---- word constructors ----

namespace detail {
inline void check_range(int i, int j, int m)
{
  if (!(1 <= i && i < j && j <= m))
    fail(ErrorKind::index_range, "need 1 <= i < j <= m");
}
} // namespace detail

// sigma_{j-1} ... sigma_i
inline BraidWord delta_word(int i, int j, int m)
{
  detail::check_range(i, j, m);
  BraidWord w(m);
  for (int k = j - 1; k >= i; --k)
    w.push(sigma(k));
  return w;
}

// sigma_i ... sigma_{j-1}
inline BraidWord lambda_word(int i, int j, int m)
{
  detail::check_range(i, j, m);
  BraidWord w(m);
  for (int k = i; k <= j - 1; ++k)
    w.push(sigma(k));
  return w;
}

// Delta_{i,j} = delta_{i,j} delta_{i+1,j} ... delta_{j-1,j}; Delta_{i,i} is empty
inline BraidWord garside_range(int i, int j, int m)
{
  BraidWord w(m);
  if (i == j)
    return w;
  detail::check_range(i, j, m);
  for (int k = i; k < j; ++k)
    w.append(delta_word(k, j, m));
  return w;
}

inline BraidWord garside_word(int m) { return garside_range(1, m, m); }

template <bool Loop>
BasicWord<Loop> inverse(const BasicWord<Loop> &w)
{
  std::vector<Letter> l;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    l.push_back(it->inverted());
  return BasicWord<Loop>(w.strands(), std::move(l));
}

template <bool Loop>
BasicWord<Loop> star_word(const BasicWord<Loop> &w)
{
  std::vector<Letter> l;
  for (auto &x : w.letters())
    l.push_back(x.inverted());
  return BasicWord<Loop>(w.strands(), std::move(l));
}

// sigma_k^{+-1} -> sigma_{m-k}^{-+1}, s_k -> s_{m-k}
template <bool Loop>
BasicWord<Loop> reverse_word(const BasicWord<Loop> &w)
{
  std::vector<Letter> l;
  int m = w.strands();
  for (auto &x : w.letters()) {
    Letter y = x.inverted();
    y.index = m - x.index;
    l.push_back(y);
  }
  return BasicWord<Loop>(w.strands(), std::move(l));
}

// swap word realizing i <-> m+1-i
inline LoopBraidWord reversal_swaps(int m)
{
  LoopBraidWord w(m);
  for (int pass = 1; pass <= m - 1; ++pass)
    for (int k = 1; k <= m - pass; ++k)
      w.push(swap_letter(k));
  return w;
}

inline LoopBraidWord dualizer_word(int m)
{
  LoopBraidWord w = garside_word(m);
  w.append(reversal_swaps(m));
  return w;
}

// Replaces each outer letter by the crossing of two whole cables.
inline BraidWord cable_word(const BraidWord &outer, const std::vector<int> &widths)
{
  if (static_cast<int>(widths.size()) != outer.strands())
    fail(ErrorKind::strand_mismatch, "need one width per outer strand");
  int total = 0;
  for (int x : widths) {
    if (x < 1)
      fail(ErrorKind::precondition, "cable widths must be positive");
    total += x;
  }
  std::vector<int> cur = widths;
  BraidWord w(total);
  auto block = [&](int p, int a, int b) {
    BraidWord blk(total);
    for (int i = 1; i <= b; ++i)
      for (int k = p + a + i - 1; k >= p + i; --k)
        blk.push(sigma(k));
    return blk;
  };
  for (auto &l : outer.letters()) {
    int j = l.index;
    int p = 0;
    for (int k = 0; k < j - 1; ++k)
      p += cur[k];
    int a = cur[j - 1], b = cur[j];
    if (l.kind == LetterKind::sigma)
      w.append(block(p, a, b));
    else
      w.append(inverse(block(p, b, a)));
    std::swap(cur[j - 1], cur[j]);
  }
  return w;
}

// outer[inner_1, ..., inner_k]: cables crossed first, then each inner word on its cable's
// final position; inner[i] belongs to the cable that started at position i.
inline BraidWord operad_compose(const BraidWord &outer, const std::vector<BraidWord> &inner)
{
  std::vector<int> widths;
  for (auto &w : inner)
    widths.push_back(w.strands());
  BraidWord w = cable_word(outer, widths);
  int k = outer.strands();
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  for (auto &l : outer.letters())
    std::swap(order[l.index - 1], order[l.index]);
  int offset = 0;
  for (int pos = 0; pos < k; ++pos) {
    auto &in = inner[static_cast<std::size_t>(order[pos])];
    for (auto &l : in.letters())
      w.push({l.index + offset, l.kind});
    offset += in.strands();
  }
  return w;
}

// ---- text ----

template <bool Loop>
std::string to_string(const BasicWord<Loop> &w)
{
  std::string out;
  for (auto &l : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += l.kind == LetterKind::sigma ? 's' : l.kind == LetterKind::sigma_inv ? 'S' : 'p';
    out += std::to_string(l.index);
  }
  return out;
}

inline LoopBraidWord parse_loop_word(const std::string &text, int strands)
{
  std::istringstream in(text);
  std::string tok;
  LoopBraidWord w(strands);
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S' && tok[0] != 'p'))
      fail(ErrorKind::parse, "bad letter '" + tok + "'");
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(tok.substr(1), &used);
    } catch (const std::exception &) {
      fail(ErrorKind::parse, "bad letter '" + tok + "'");
    }
    if (used != tok.size() - 1)
      fail(ErrorKind::parse, "bad letter '" + tok + "'");
    LetterKind k = tok[0] == 's' ? LetterKind::sigma : tok[0] == 'S' ? LetterKind::sigma_inv : LetterKind::swap;
    w.push({idx, k});
  }
  return w;
}

inline BraidWord parse_braid_word(const std::string &text, int strands)
{
  LoopBraidWord w = parse_loop_word(text, strands);
  return BraidWord(strands, w.letters());
}

} // namespace mindbody
