#pragma once

#include "mindbody/error.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace mindbody {

// Permutations of [n] = {1..n}; products are read left to right, so (p*q)(v) = q(p(v)).
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(int n) : img_(static_cast<std::size_t>(n))
  {
    if (n < 1)
      fail(ErrorKind::precondition, "permutation degree must be >= 1");
    std::iota(img_.begin(), img_.end(), 1);
  }

  static Permutation identity(int n) { return Permutation(n); }

  static Permutation from_images(std::vector<int> images)
  {
    Permutation p;
    int n = static_cast<int>(images.size());
    if (n < 1)
      fail(ErrorKind::precondition, "permutation degree must be >= 1");
    std::vector<char> seen(images.size(), 0);
    for (int x : images) {
      if (x < 1 || x > n || seen[x - 1])
        fail(ErrorKind::precondition, "images do not form a bijection of [n]");
      seen[x - 1] = 1;
    }
    p.img_ = std::move(images);
    return p;
  }

  // cycle given as a list of points a1 -> a2 -> ... -> ak -> a1
  static Permutation cycle(int n, const std::vector<int> &points)
  {
    Permutation p(n);
    for (std::size_t i = 0; i < points.size(); ++i) {
      int a = points[i], b = points[(i + 1) % points.size()];
      if (a < 1 || a > n)
        fail(ErrorKind::precondition, "cycle point out of range");
      p.img_[a - 1] = b;
    }
    return Permutation::from_images(p.img_);
  }

  int degree() const noexcept { return static_cast<int>(img_.size()); }
  int operator()(int v) const { return img_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int> &images() const noexcept { return img_; }

  bool is_identity() const
  {
    for (int v = 1; v <= degree(); ++v)
      if (img_[v - 1] != v)
        return false;
    return true;
  }

  auto operator<=>(const Permutation &) const = default;
  bool operator==(const Permutation &) const = default;

private:
  std::vector<int> img_;
};

inline void require_same_degree(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    fail(ErrorKind::degree_mismatch,
         "degrees " + std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
}

inline Permutation compose(const Permutation &p, const Permutation &q)
{
  require_same_degree(p, q);
  std::vector<int> r(static_cast<std::size_t>(p.degree()));
  for (int v = 1; v <= p.degree(); ++v)
    r[v - 1] = q(p(v));
  return Permutation::from_images(std::move(r));
}

inline Permutation operator*(const Permutation &p, const Permutation &q) { return compose(p, q); }

inline Permutation inverse(const Permutation &p)
{
  std::vector<int> r(static_cast<std::size_t>(p.degree()));
  for (int v = 1; v <= p.degree(); ++v)
    r[p(v) - 1] = v;
  return Permutation::from_images(std::move(r));
}

// g^h = h^-1 g h
inline Permutation conjugate_right(const Permutation &g, const Permutation &h)
{
  require_same_degree(g, h);
  return compose(compose(inverse(h), g), h);
}

// ^h g = h g h^-1
inline Permutation conjugate_left(const Permutation &g, const Permutation &h)
{
  require_same_degree(g, h);
  return compose(compose(h, g), inverse(h));
}

inline std::vector<std::vector<int>> cycles(const Permutation &p, bool with_fixed_points = false)
{
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int v = 1; v <= p.degree(); ++v) {
    if (seen[v - 1])
      continue;
    std::vector<int> c;
    for (int x = v; !seen[x - 1]; x = p(x)) {
      seen[x - 1] = 1;
      c.push_back(x);
    }
    if (c.size() > 1 || with_fixed_points)
      out.push_back(std::move(c));
  }
  return out;
}

// cycle lengths including fixed points, largest first
inline std::vector<int> cycle_type(const Permutation &p)
{
  std::vector<int> t;
  for (auto &c : cycles(p, true))
    t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

inline int cycle_count(const Permutation &p) { return static_cast<int>(cycles(p, true).size()); }

inline bool is_full_cycle(const Permutation &p) { return cycle_count(p) == 1; }

class Transposition {
public:
  Transposition() = default;
  Transposition(int a, int b)
  {
    if (a == b)
      fail(ErrorKind::precondition, "transposition needs two distinct points");
    s_ = std::min(a, b);
    t_ = std::max(a, b);
  }
  int s() const noexcept { return s_; }
  int t() const noexcept { return t_; }
  bool moves(int v) const noexcept { return v == s_ || v == t_; }
  int other(int v) const noexcept { return v == s_ ? t_ : s_; }
  int apply(int v) const noexcept { return v == s_ ? t_ : v == t_ ? s_ : v; }

  Permutation to_permutation(int n) const
  {
    if (t_ > n)
      fail(ErrorKind::degree_mismatch, "transposition point exceeds degree");
    Permutation p(n);
    std::vector<int> img = p.images();
    std::swap(img[s_ - 1], img[t_ - 1]);
    return Permutation::from_images(std::move(img));
  }

  auto operator<=>(const Transposition &) const = default;
  bool operator==(const Transposition &) const = default;

private:
  int s_ = 1, t_ = 2;
};

inline Transposition conjugate_right(const Transposition &g, const Permutation &h)
{
  return Transposition(h(g.s()), h(g.t()));
}

inline Transposition conjugate_left(const Transposition &g, const Permutation &h)
{
  Permutation hi = inverse(h);
  return Transposition(hi(g.s()), hi(g.t()));
}

// ^h g for two transpositions: h is its own inverse
inline Transposition conjugate_by(const Transposition &g, const Transposition &h)
{
  return Transposition(h.apply(g.s()), h.apply(g.t()));
}

// ---- text ----

inline std::string to_string(const Permutation &p)
{
  auto cs = cycles(p);
  if (cs.empty())
    return "id";
  std::string out;
  for (auto &c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

inline std::string to_string(const Transposition &t)
{
  return "(" + std::to_string(t.s()) + " " + std::to_string(t.t()) + ")";
}

namespace detail {

inline void skip_space(std::string_view s, std::size_t &i)
{
  while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
    ++i;
}

inline int read_int(std::string_view s, std::size_t &i)
{
  std::size_t j = i;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
    ++j;
  if (j == i)
    fail(ErrorKind::parse, "expected integer at offset " + std::to_string(i));
  int v = std::stoi(std::string(s.substr(i, j - i)));
  i = j;
  return v;
}

} // namespace detail

// Parses "(4 3 2 1)", "(1 2)(3 4)", "(1,2)", "id". Cycles compose left to right.
inline Permutation parse_permutation(std::string_view text, int n)
{
  Permutation p(n);
  std::size_t i = 0;
  detail::skip_space(text, i);
  if (text.substr(i, 2) == "id") {
    i += 2;
    detail::skip_space(text, i);
    if (i != text.size())
      fail(ErrorKind::parse, "trailing input after 'id'");
    return p;
  }
  while (true) {
    detail::skip_space(text, i);
    if (i == text.size())
      break;
    if (text[i] != '(')
      fail(ErrorKind::parse, "expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<int> pts;
    while (true) {
      detail::skip_space(text, i);
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size())
        fail(ErrorKind::parse, "unterminated cycle");
      int v = detail::read_int(text, i);
      if (v < 1 || v > n)
        fail(ErrorKind::parse, "point " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
      if (std::find(pts.begin(), pts.end(), v) != pts.end())
        fail(ErrorKind::parse, "repeated point in cycle");
      pts.push_back(v);
    }
    p = compose(p, Permutation::cycle(n, pts));
  }
  return p;
}

// smallest n covering every point mentioned in the text
inline int max_point(std::string_view text)
{
  int m = 0;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isdigit(static_cast<unsigned char>(text[i])))
      m = std::max(m, detail::read_int(text, i));
    else
      ++i;
  }
  return m;
}

} // namespace mindbody
