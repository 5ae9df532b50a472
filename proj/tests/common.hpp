#pragma once

#include "mindbody/mindbody.hpp"

#include <random>
#include <utility>
#include <vector>

namespace mbtest {

using namespace mindbody;

// ---- oracles on raw arrays, independent of the library arithmetic ----

using Images = std::vector<int>; // index 0 unused

inline Images identity_images(int n)
{
  Images p(static_cast<std::size_t>(n + 1));
  for (int v = 0; v <= n; ++v)
    p[v] = v;
  return p;
}

inline Images swap_images(int n, int a, int b)
{
  Images p = identity_images(n);
  std::swap(p[a], p[b]);
  return p;
}

// left to right: first p, then q
inline Images then(const Images &p, const Images &q)
{
  Images r(p.size());
  for (std::size_t v = 0; v < p.size(); ++v)
    r[v] = q[p[v]];
  return r;
}

inline Images invert(const Images &p)
{
  Images r(p.size());
  for (std::size_t v = 0; v < p.size(); ++v)
    r[p[v]] = static_cast<int>(v);
  return r;
}

inline Images product(int n, const std::vector<std::pair<int, int>> &f)
{
  Images p = identity_images(n);
  for (auto [a, b] : f)
    p = then(p, swap_images(n, a, b));
  return p;
}

inline std::vector<std::pair<int, int>> raw(const Factorization &rho)
{
  std::vector<std::pair<int, int>> f;
  for (auto &t : rho.factors())
    f.emplace_back(t.s(), t.t());
  return f;
}

inline std::pair<int, int> sorted_pair(int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); }

// factor i replaced by h t h^-1 with h = t_1 ... t_{i-1}; as a map that swaps h^-1(a), h^-1(b)
inline std::vector<std::pair<int, int>> prefix_dual_oracle(int n, const std::vector<std::pair<int, int>> &f)
{
  std::vector<std::pair<int, int>> out;
  Images h = identity_images(n);
  for (auto [a, b] : f) {
    Images hi = invert(h);
    out.push_back(sorted_pair(hi[a], hi[b]));
    h = then(h, swap_images(n, a, b));
  }
  return out;
}

// factor i replaced by s^-1 t s with s = t_{i+1} ... t_m; swaps s(a), s(b)
inline std::vector<std::pair<int, int>> suffix_dual_oracle(int n, const std::vector<std::pair<int, int>> &f)
{
  std::vector<std::pair<int, int>> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<std::pair<int, int>> tail(f.begin() + static_cast<std::ptrdiff_t>(i) + 1, f.end());
    Images s = product(n, tail);
    out[i] = sorted_pair(s[f[i].first], s[f[i].second]);
  }
  return out;
}

// letters: +i sigma_i, -i its inverse, 1000+i swap
inline std::vector<std::pair<int, int>> act_oracle(std::vector<std::pair<int, int>> f, const std::vector<int> &letters)
{
  auto conj = [](std::pair<int, int> g, std::pair<int, int> h) {
    auto ap = [&](int x) { return x == h.first ? h.second : x == h.second ? h.first : x; };
    return sorted_pair(ap(g.first), ap(g.second));
  };
  for (int l : letters) {
    if (l >= 1000) {
      std::swap(f[l - 1000 - 1], f[l - 1000]);
      continue;
    }
    int i = std::abs(l);
    auto a = f[i - 1], b = f[i];
    if (l > 0) {
      f[i - 1] = conj(b, a);
      f[i] = a;
    } else {
      f[i - 1] = b;
      f[i] = conj(a, b);
    }
  }
  return f;
}

inline Factorization make(int n, const std::vector<std::pair<int, int>> &f)
{
  std::vector<Transposition> t;
  for (auto [a, b] : f)
    t.emplace_back(a, b);
  return Factorization(n, std::move(t));
}

inline Factorization random_rho(std::mt19937_64 &rng, int n, int m)
{
  std::vector<std::pair<int, int>> f;
  std::uniform_int_distribution<int> d(1, n);
  for (int k = 0; k < m; ++k) {
    int a = d(rng), b = d(rng);
    while (b == a)
      b = d(rng);
    f.emplace_back(a, b);
  }
  return make(n, f);
}

// ---- fixtures ----

// torus with one hole
inline Factorization torus_rho() { return make(4, {{3, 4}, {1, 3}, {1, 2}, {3, 4}, {2, 3}}); }

// edges a..f; the local orders close the medial digraph into a 6-cycle
inline Leo six_vertex_leo()
{
  return Leo(6, {{2, 4}, {1, 2}, {1, 5}, {1, 3}, {3, 6}, {2, 3}}, {{2, 3, 4}, {6, 1, 2}, {4, 5, 6}, {1}, {3}, {5}});
}

// K4 with rotations a b c | a d f | b f e | d c e
inline std::vector<Edge> k4_edges() { return {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {2, 3}}; }

inline int dart(const std::vector<Edge> &edges, int label, int v) { return 2 * (label - 1) + (edges[label - 1].first == v ? 0 : 1); }

inline RotationSystem k4_ceg()
{
  auto e = k4_edges();
  std::vector<std::vector<int>> lab{{1, 2, 3}, {1, 4, 6}, {2, 6, 5}, {4, 3, 5}};
  std::vector<std::vector<int>> rot(4);
  for (int v = 1; v <= 4; ++v)
    for (int l : lab[v - 1])
      rot[v - 1].push_back(dart(e, l, v));
  return RotationSystem(4, e, rot);
}

// the non-peggable ceg: one pendant edge and a triple edge
inline RotationSystem triple_edge_ceg()
{
  std::vector<Edge> e{{1, 2}, {2, 3}, {2, 3}, {2, 3}};
  std::vector<std::vector<int>> lab{{1}, {1, 2, 3, 4}, {4, 3, 2}};
  std::vector<std::vector<int>> rot(3);
  for (int v = 1; v <= 3; ++v)
    for (int l : lab[v - 1])
      rot[v - 1].push_back(dart(e, l, v));
  return RotationSystem(3, e, rot);
}

inline Factorization doubled(int n, const std::vector<std::pair<int, int>> &pairs)
{
  std::vector<std::pair<int, int>> f;
  for (auto p : pairs) {
    f.push_back(p);
    f.push_back(p);
  }
  return make(n, f);
}

inline Factorization k4_selfdual()
{
  auto rho0 = doubled(4, {{1, 2}, {2, 3}, {3, 4}});
  BraidWord beta(6, {sigma(2), sigma(4), sigma_inv(3)});
  return act(rho0, beta);
}

inline Factorization k5_selfdual()
{
  auto rho0 = doubled(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  BraidWord beta = delta_word(2, 10, 10);
  for (int i : {3, 5, 7, 9})
    beta.push(sigma_inv(i));
  return act(rho0, beta);
}

} // namespace mbtest
