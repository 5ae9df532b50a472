#pragma once

#include "mindbody/egraph.hpp"

#include <optional>

namespace mindbody {

// Local edge order: per vertex, the incident labels in order. Edges are kept so that
// orders not induced by labels (non-e-realizable ones) can be represented too.
class Leo {
public:
  Leo() = default;
  Leo(int n, std::vector<Edge> edges, std::vector<std::vector<int>> order)
      : n_(n), edges_(std::move(edges)), order_(std::move(order))
  {
    if (static_cast<int>(order_.size()) != n_)
      fail(ErrorKind::precondition, "leo needs one list per vertex");
    std::vector<std::vector<int>> want(static_cast<std::size_t>(n_));
    for (int i = 1; i <= static_cast<int>(edges_.size()); ++i) {
      auto [u, v] = edges_[i - 1];
      if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        fail(ErrorKind::precondition, "bad edge in leo");
      want[u - 1].push_back(i);
      want[v - 1].push_back(i);
    }
    for (int v = 0; v < n_; ++v) {
      auto got = order_[v];
      std::sort(got.begin(), got.end());
      if (got != want[v])
        fail(ErrorKind::precondition, "leo list at vertex " + std::to_string(v + 1) + " is not its incident set");
    }
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  const std::vector<int> &at(int v) const { return order_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<std::vector<int>> &orders() const noexcept { return order_; }
  int other_end(int label, int v) const
  {
    auto &e = edges_[static_cast<std::size_t>(label - 1)];
    return e.first == v ? e.second : e.first;
  }
  // position of label in v's order, or -1
  int position(int v, int label) const
  {
    auto &o = at(v);
    auto it = std::find(o.begin(), o.end(), label);
    return it == o.end() ? -1 : static_cast<int>(it - o.begin());
  }

  bool operator==(const Leo &) const = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> order_;
};

inline Leo leo_of(const EdgeLabeledGraph &g) { return Leo(g.vertex_count(), g.edges(), g.incidence()); }

struct Step {
  int edge = 0;
  int to = 0;
  bool operator==(const Step &) const = default;
};

struct Trail {
  int start = 0;
  std::vector<Step> steps;

  int end() const { return steps.empty() ? start : steps.back().to; }
  std::vector<int> labels() const
  {
    std::vector<int> l;
    for (auto &s : steps)
      l.push_back(s.edge);
    return l;
  }
  bool operator==(const Trail &) const = default;
};

// Reverse traversal of a trail.
inline Trail reversed(const Trail &t)
{
  Trail r;
  r.start = t.end();
  for (std::size_t k = t.steps.size(); k-- > 0;)
    r.steps.push_back({t.steps[k].edge, k == 0 ? t.start : t.steps[k - 1].to});
  return r;
}

inline Trail migt(const Leo &leo, int v)
{
  Trail t;
  t.start = v;
  auto &ov = leo.at(v);
  if (ov.empty())
    return t;
  int e = ov.front();
  int w = leo.other_end(e, v);
  t.steps.push_back({e, w});
  // dart successor is injective and starting darts have no predecessor, so this stops
  for (int guard = 0; guard <= 2 * leo.edge_count(); ++guard) {
    int p = leo.position(w, e);
    auto &ow = leo.at(w);
    if (p + 1 == static_cast<int>(ow.size()))
      return t;
    e = ow[p + 1];
    w = leo.other_end(e, w);
    t.steps.push_back({e, w});
  }
  fail(ErrorKind::defect, "migt did not terminate");
}

// Trail ending at v read backwards: the minimally decreasing greedy trail.
inline Trail backward_migt(const Leo &leo, int v)
{
  Trail t;
  t.start = v;
  auto &ov = leo.at(v);
  if (ov.empty())
    return t;
  int e = ov.back();
  int w = leo.other_end(e, v);
  t.steps.push_back({e, w});
  for (int guard = 0; guard <= 2 * leo.edge_count(); ++guard) {
    int p = leo.position(w, e);
    if (p == 0)
      return reversed(t);
    e = leo.at(w)[p - 1];
    w = leo.other_end(e, w);
    t.steps.push_back({e, w});
  }
  fail(ErrorKind::defect, "backward migt did not terminate");
}

class Ptdc {
public:
  Ptdc() = default;
  explicit Ptdc(std::vector<Trail> trails) : trails_(std::move(trails)) {}
  int size() const noexcept { return static_cast<int>(trails_.size()); }
  const Trail &from(int v) const { return trails_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<Trail> &trails() const noexcept { return trails_; }

private:
  std::vector<Trail> trails_;
};

// Checks the double cover (each dart once) and non-singularity.
inline std::optional<std::string> ptdc_violation(const Leo &leo, const Ptdc &p)
{
  int m = leo.edge_count();
  // dart index: 2*(label-1) + (traversed towards the larger endpoint ? 0 : 1)
  std::vector<int> seen(static_cast<std::size_t>(2 * m), 0);
  for (auto &t : p.trails()) {
    int at = t.start;
    std::vector<char> used(static_cast<std::size_t>(m + 1), 0);
    for (auto &s : t.steps) {
      auto [a, b] = leo.edges()[s.edge - 1];
      if (!((at == a && s.to == b) || (at == b && s.to == a)))
        return "trail from " + std::to_string(t.start) + " is not connected at edge " + std::to_string(s.edge);
      if (used[s.edge])
        return "trail from " + std::to_string(t.start) + " repeats edge " + std::to_string(s.edge);
      used[s.edge] = 1;
      ++seen[2 * (s.edge - 1) + (s.to == b ? 0 : 1)];
      at = s.to;
    }
  }
  for (int d = 0; d < 2 * m; ++d)
    if (seen[d] != 1)
      return "edge " + std::to_string(d / 2 + 1) + " is not covered once in each direction";
  for (int v = 1; v <= leo.vertex_count(); ++v) {
    if (leo.at(v).size() < 2)
      continue;
    auto &out = p.from(v);
    // the trail ending at v
    for (auto &t : p.trails())
      if (!t.steps.empty() && t.end() == v && t.steps.back().edge == out.steps.front().edge)
        return "singular at vertex " + std::to_string(v);
  }
  return std::nullopt;
}

inline Ptdc ptdc_of(const Leo &leo)
{
  std::vector<Trail> ts;
  for (int v = 1; v <= leo.vertex_count(); ++v)
    ts.push_back(migt(leo, v));
  Ptdc p(std::move(ts));
  if (auto bad = ptdc_violation(leo, p))
    fail(ErrorKind::defect, *bad);
  return p;
}

// arc v -> end of the trail starting at v
struct MonodromyDigraph {
  std::vector<int> target;
  int head(int v) const { return target[static_cast<std::size_t>(v - 1)]; }
  Permutation to_permutation() const { return Permutation::from_images(target); }
};

inline MonodromyDigraph monodromy_digraph(const Ptdc &p)
{
  MonodromyDigraph d;
  for (auto &t : p.trails())
    d.target.push_back(t.end());
  return d;
}

// Matches each forward migt ->v with the backward migt <-u by edge sequence and endpoints.
inline std::vector<std::pair<int, int>> trail_matching(const Leo &leo)
{
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= leo.vertex_count(); ++v) {
    Trail f = migt(leo, v);
    for (int u = 1; u <= leo.vertex_count(); ++u) {
      if (backward_migt(leo, u) == f) {
        out.emplace_back(v, u);
        break;
      }
    }
  }
  return out;
}

inline Permutation monodromy(const EdgeLabeledGraph &g)
{
  if (g.vertex_count() == 0)
    fail(ErrorKind::precondition, "monodromy of the empty graph");
  return monodromy_digraph(ptdc_of(leo_of(g))).to_permutation();
}

// vertex v* = ->v; edge i joins the two trails through i
inline EdgeLabeledGraph dual_graph(const EdgeLabeledGraph &g)
{
  Ptdc p = ptdc_of(leo_of(g));
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.edge_count() + 1));
  for (auto &t : p.trails())
    for (auto &s : t.steps)
      holders[s.edge].push_back(t.start);
  std::vector<Edge> e;
  for (int i = 1; i <= g.edge_count(); ++i) {
    if (holders[i].size() != 2)
      fail(ErrorKind::defect, "edge " + std::to_string(i) + " not in exactly two trails");
    e.emplace_back(holders[i][0], holders[i][1]);
  }
  return EdgeLabeledGraph(g.vertex_count(), std::move(e), g.mode());
}

// i-th factor conjugated on the left by tau_1...tau_{i-1}
inline Factorization dual_factorization(const Factorization &rho)
{
  int n = rho.degree();
  std::vector<int> pinv(static_cast<std::size_t>(n));
  std::iota(pinv.begin(), pinv.end(), 1);
  std::vector<Transposition> out;
  for (auto &t : rho.factors()) {
    out.emplace_back(pinv[t.s() - 1], pinv[t.t() - 1]);
    // P_i^-1 = tau_i P_{i-1}^-1
    std::vector<int> next(pinv.size());
    for (int x = 1; x <= n; ++x)
      next[x - 1] = pinv[t.apply(x) - 1];
    pinv.swap(next);
  }
  return Factorization(n, std::move(out));
}

inline Factorization dual_factorization_via_graph(const Factorization &rho)
{
  return to_factorization(dual_graph(from_factorization(rho)));
}

// i-th factor conjugated on the right by tau_{i+1}...tau_m
inline Factorization bar_dual(const Factorization &rho)
{
  int n = rho.degree();
  auto &f = rho.factors();
  std::vector<int> h(static_cast<std::size_t>(n));
  std::iota(h.begin(), h.end(), 1);
  std::vector<Transposition> out(f.size());
  for (std::size_t k = f.size(); k-- > 0;) {
    out[k] = Transposition(h[f[k].s() - 1], h[f[k].t() - 1]);
    std::vector<int> next(h.size());
    for (int x = 1; x <= n; ++x)
      next[x - 1] = h[f[k].apply(x) - 1];
    h.swap(next);
  }
  return Factorization(n, std::move(out));
}

inline Factorization dual_concat(const std::vector<Factorization> &parts)
{
  if (parts.empty())
    fail(ErrorKind::precondition, "dual_concat of nothing");
  int n = parts.front().degree();
  Factorization out(n);
  Permutation prefix(n);
  for (auto &p : parts) {
    if (p.degree() != n)
      fail(ErrorKind::degree_mismatch, "dual_concat over different [n]");
    out = concat(out, conjugate_left(dual_factorization(p), prefix));
    prefix = compose(prefix, monodromy(p));
  }
  return out;
}

} // namespace mindbody
