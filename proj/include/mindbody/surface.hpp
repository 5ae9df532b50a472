#pragma once

#include "mindbody/medial.hpp"

#include <queue>

namespace mindbody {

struct PegInvariants {
  int chi = 0;
  int b = 0;
  int components = 0;
  int genus_total = 0;
  std::vector<int> genus; // per component, components ordered by smallest vertex
  std::vector<std::vector<int>> boundary_cycles;
};

inline PegInvariants peg_invariants(const EdgeLabeledGraph &g)
{
  PegInvariants p;
  p.chi = g.euler_characteristic();
  Permutation mu = monodromy(g);
  p.boundary_cycles = cycles(mu, true);
  p.b = static_cast<int>(p.boundary_cycles.size());
  std::vector<int> comp;
  p.components = component_count(g, &comp);
  std::vector<int> nc(static_cast<std::size_t>(p.components)), mc(nc.size()), bc(nc.size());
  for (int v = 1; v <= g.vertex_count(); ++v)
    ++nc[comp[v - 1]];
  for (auto [u, v] : g.edges())
    ++mc[comp[u - 1]];
  for (auto &c : p.boundary_cycles)
    ++bc[comp[c.front() - 1]];
  for (int c = 0; c < p.components; ++c) {
    int twice = 2 + mc[c] - nc[c] - bc[c];
    if (twice < 0 || twice % 2)
      fail(ErrorKind::defect, "non-integral genus");
    p.genus.push_back(twice / 2);
    p.genus_total += twice / 2;
  }
  return p;
}

// Darts: edge e has dart 2(e-1) at its first endpoint and 2(e-1)+1 at its second.
class RotationSystem {
public:
  RotationSystem() = default;
  RotationSystem(int n, std::vector<Edge> edges, std::vector<std::vector<int>> rotation)
      : n_(n), edges_(std::move(edges)), rot_(std::move(rotation))
  {
    if (static_cast<int>(rot_.size()) != n_)
      fail(ErrorKind::precondition, "one rotation per vertex required");
    std::vector<int> seen(2 * edges_.size(), 0);
    for (auto &[u, v] : edges_)
      if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        fail(ErrorKind::unsupported, "rotation systems here are loopless");
    for (int x = 1; x <= n_; ++x)
      for (int d : rot_[x - 1]) {
        if (d < 0 || d >= static_cast<int>(seen.size()) || dart_vertex(d) != x || seen[d]++)
          fail(ErrorKind::precondition, "rotation at " + std::to_string(x) + " is not its dart set");
      }
    for (int s : seen)
      if (s != 1)
        fail(ErrorKind::precondition, "a dart is missing from the rotations");
    build_next();
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  const std::vector<int> &rotation(int x) const { return rot_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<std::vector<int>> &rotations() const noexcept { return rot_; }

  static int edge_of(int dart) { return dart / 2 + 1; }
  static int opposite(int dart) { return dart ^ 1; }
  int dart_vertex(int dart) const
  {
    auto &e = edges_[static_cast<std::size_t>(dart / 2)];
    return dart % 2 ? e.second : e.first;
  }
  int rotate(int dart) const { return next_[static_cast<std::size_t>(dart)]; }
  // face permutation: cross the edge, then turn to the next dart
  int face_step(int dart) const { return rotate(opposite(dart)); }

  // edge labels around x starting from the smallest
  std::vector<int> label_cycle(int x) const
  {
    std::vector<int> l;
    for (int d : rotation(x))
      l.push_back(edge_of(d));
    if (!l.empty())
      std::rotate(l.begin(), std::min_element(l.begin(), l.end()), l.end());
    return l;
  }

  EdgeLabeledGraph underlying() const
  {
    std::vector<Edge> e;
    for (auto [u, v] : edges_)
      e.emplace_back(std::min(u, v), std::max(u, v));
    return EdgeLabeledGraph(n_, e, LabelMode::EV);
  }

private:
  void build_next()
  {
    next_.assign(2 * edges_.size(), -1);
    for (auto &r : rot_)
      for (std::size_t k = 0; k < r.size(); ++k)
        next_[r[k]] = r[(k + 1) % r.size()];
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> next_;
};

inline RotationSystem mirrored(const RotationSystem &rs)
{
  auto r = rs.rotations();
  for (auto &c : r)
    std::reverse(c.begin(), c.end());
  return RotationSystem(rs.vertex_count(), rs.edges(), std::move(r));
}

inline RotationSystem completion(const EdgeLabeledGraph &g)
{
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(g.vertex_count()));
  auto inc = g.incidence();
  for (int x = 1; x <= g.vertex_count(); ++x)
    for (int e : inc[x - 1])
      rot[x - 1].push_back(2 * (e - 1) + (g.edge(e).first == x ? 0 : 1));
  return RotationSystem(g.vertex_count(), g.edges(), std::move(rot));
}

inline std::vector<std::vector<int>> faces(const RotationSystem &rs)
{
  std::vector<char> seen(2 * static_cast<std::size_t>(rs.edge_count()), 0);
  std::vector<std::vector<int>> out;
  for (int d = 0; d < 2 * rs.edge_count(); ++d) {
    if (seen[d])
      continue;
    std::vector<int> f;
    for (int x = d; !seen[x]; x = rs.face_step(x)) {
      seen[x] = 1;
      f.push_back(x);
    }
    out.push_back(std::move(f));
  }
  return out;
}

struct CegTopology {
  int n = 0, m = 0, f = 0;
  int components = 0;
  int genus = 0; // summed over components
};

inline CegTopology ceg_topology(const RotationSystem &rs)
{
  CegTopology t;
  t.n = rs.vertex_count();
  t.m = rs.edge_count();
  auto fs = faces(rs);
  t.f = static_cast<int>(fs.size());
  std::vector<int> comp;
  t.components = component_count(rs.underlying(), &comp);
  std::vector<int> nc(static_cast<std::size_t>(t.components)), mc(nc.size()), fc(nc.size());
  for (int v = 1; v <= t.n; ++v)
    ++nc[comp[v - 1]];
  for (auto [u, v] : rs.edges())
    ++mc[comp[u - 1]];
  for (auto &f : fs)
    ++fc[comp[rs.dart_vertex(f.front()) - 1]];
  for (int c = 0; c < t.components; ++c) {
    // an isolated vertex is a sphere with no darts: count its face
    int fcc = fc[c] + (mc[c] == 0 ? 1 : 0);
    int twice = 2 - (nc[c] - mc[c] + fcc);
    if (twice < 0 || twice % 2)
      fail(ErrorKind::defect, "face count violates Euler's relation");
    t.genus += twice / 2;
  }
  return t;
}

// Vertices are faces; each edge keeps its label; rotations are the facial orders, reversed.
inline RotationSystem dual_ceg(const RotationSystem &rs)
{
  auto fs = faces(rs);
  std::vector<int> face_of(2 * static_cast<std::size_t>(rs.edge_count()));
  for (int k = 0; k < static_cast<int>(fs.size()); ++k)
    for (int d : fs[k])
      face_of[d] = k + 1;
  std::vector<Edge> e;
  for (int i = 1; i <= rs.edge_count(); ++i) {
    int a = face_of[2 * (i - 1)], b = face_of[2 * (i - 1) + 1];
    if (a == b)
      fail(ErrorKind::unsupported, "dual would have a loop at edge " + std::to_string(i));
    e.emplace_back(a, b);
  }
  std::vector<std::vector<int>> rot;
  for (auto &f : fs)
    rot.emplace_back(f.rbegin(), f.rend());
  // an isolated vertex is its own face on a sphere, so it dualizes to an isolated vertex
  for (int x = 1; x <= rs.vertex_count(); ++x)
    if (rs.rotation(x).empty())
      rot.emplace_back();
  int count = static_cast<int>(rot.size());
  return RotationSystem(count, std::move(e), std::move(rot));
}

// Isomorphism preserving edge labels and every rotation.
inline bool ceg_isomorphic_labeled(const RotationSystem &a, const RotationSystem &b)
{
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  auto collect = [](const RotationSystem &r) {
    std::vector<std::vector<int>> c;
    for (int x = 1; x <= r.vertex_count(); ++x)
      c.push_back(r.label_cycle(x));
    std::sort(c.begin(), c.end());
    return c;
  };
  return collect(a) == collect(b);
}

// ---- coloured medial digraph of a ceg ----

inline MedialDigraph medial_digraph_ceg(const RotationSystem &rs)
{
  std::vector<Arc> arcs;
  for (int x = 1; x <= rs.vertex_count(); ++x) {
    auto &r = rs.rotation(x);
    for (std::size_t k = 0; k < r.size(); ++k)
      arcs.push_back({RotationSystem::edge_of(r[k]), RotationSystem::edge_of(r[(k + 1) % r.size()]), x});
  }
  return MedialDigraph(rs.edge_count(), std::move(arcs));
}

struct FasResult {
  std::vector<int> arcs; // arc indices of the removed set
  std::vector<int> colors;
  std::vector<int> sort; // lexicographically least topological sort of what remains
};

namespace detail {

inline MedialDigraph without(const MedialDigraph &d, const std::vector<char> &removed)
{
  std::vector<Arc> keep;
  for (int k = 0; k < d.arc_count(); ++k)
    if (!removed[k])
      keep.push_back(d.arc(k));
  return MedialDigraph(d.vertex_count(), std::move(keep));
}

inline std::vector<int> least_topological_sort(const MedialDigraph &d)
{
  std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()));
  std::priority_queue<int, std::vector<int>, std::greater<>> q;
  for (int x = 1; x <= d.vertex_count(); ++x)
    if ((indeg[x - 1] = d.indegree(x)) == 0)
      q.push(x);
  std::vector<int> out;
  while (!q.empty()) {
    int x = q.top();
    q.pop();
    out.push_back(x);
    for (int k : d.out_arcs(x))
      if (--indeg[d.arc(k).to - 1] == 0)
        q.push(d.arc(k).to);
  }
  return out;
}

} // namespace detail

// One arc per colour cycle, pruned whenever the arcs of already-decided colours close a cycle.
inline std::optional<FasResult> diverse_fas(const RotationSystem &rs)
{
  MedialDigraph d = medial_digraph_ceg(rs);
  std::vector<std::vector<int>> by_color(static_cast<std::size_t>(rs.vertex_count()));
  for (int k = 0; k < d.arc_count(); ++k)
    by_color[d.arc(k).color - 1].push_back(k);
  std::vector<int> colors;
  for (int x = 1; x <= rs.vertex_count(); ++x)
    if (!by_color[x - 1].empty())
      colors.push_back(x);
  std::vector<char> removed(static_cast<std::size_t>(d.arc_count()), 0), active(removed.size(), 0);
  std::vector<int> chosen;
  auto partial_ok = [&]() {
    std::vector<Arc> keep;
    for (int k = 0; k < d.arc_count(); ++k)
      if (active[k] && !removed[k])
        keep.push_back(d.arc(k));
    return is_acyclic(MedialDigraph(d.vertex_count(), std::move(keep)));
  };
  auto rec = [&](auto &&self, std::size_t c) -> bool {
    if (c == colors.size())
      return true;
    auto &arcs = by_color[colors[c] - 1];
    for (int k : arcs)
      active[k] = 1;
    for (int k : arcs) {
      removed[k] = 1;
      chosen.push_back(k);
      if (partial_ok() && self(self, c + 1))
        return true;
      chosen.pop_back();
      removed[k] = 0;
    }
    for (int k : arcs)
      active[k] = 0;
    return false;
  };
  if (!rec(rec, 0))
    return std::nullopt;
  FasResult r;
  r.arcs = chosen;
  for (int k : chosen)
    r.colors.push_back(d.arc(k).color);
  r.sort = detail::least_topological_sort(detail::without(d, removed));
  return r;
}

// Edge k of the result is the old edge sort[k-1].
inline EdgeLabeledGraph labeling_from_sort(const RotationSystem &rs, const std::vector<int> &sort)
{
  if (static_cast<int>(sort.size()) != rs.edge_count())
    fail(ErrorKind::precondition, "sort must list every edge once");
  std::vector<Edge> e;
  for (int old : sort) {
    auto [u, v] = rs.edges()[old - 1];
    e.emplace_back(std::min(u, v), std::max(u, v));
  }
  return EdgeLabeledGraph(rs.vertex_count(), std::move(e), LabelMode::EV);
}

// The completion of the result is the input with relabelled edges.
inline std::optional<EdgeLabeledGraph> peggable(const RotationSystem &rs)
{
  auto fas = diverse_fas(rs);
  if (!fas)
    return std::nullopt;
  return labeling_from_sort(rs, fas->sort);
}

// Inverse relabelling as used by relabel_edges.
inline std::vector<int> new_labels_of_sort(const std::vector<int> &sort)
{
  std::vector<int> nl(sort.size());
  for (std::size_t k = 0; k < sort.size(); ++k)
    nl[static_cast<std::size_t>(sort[k] - 1)] = static_cast<int>(k) + 1;
  return nl;
}

inline RotationSystem relabel_edges(const RotationSystem &rs, const std::vector<int> &new_label_of_old)
{
  int m = rs.edge_count();
  std::vector<Edge> e(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i)
    e[new_label_of_old[i - 1] - 1] = rs.edges()[i - 1];
  auto rot = rs.rotations();
  for (auto &r : rot)
    for (int &d : r)
      d = 2 * (new_label_of_old[d / 2] - 1) + d % 2;
  return RotationSystem(rs.vertex_count(), std::move(e), std::move(rot));
}

// Edge x keeps its dart at `near`; its other end moves onto new vertex w1, and the path
// w1 - w2 - far is made of two new edges.
inline RotationSystem subdivide_twice(const RotationSystem &rs, int x, int near)
{
  int n = rs.vertex_count(), m = rs.edge_count();
  auto edges = rs.edges();
  auto rot = rs.rotations();
  auto [p, q] = edges[x - 1];
  if (near != p && near != q)
    fail(ErrorKind::precondition, "vertex is not an endpoint of the edge");
  int far = near == p ? q : p;
  int far_dart = 2 * (x - 1) + (near == p ? 1 : 0);
  int w1 = n + 1, w2 = n + 2;
  edges[x - 1] = near == p ? Edge{near, w1} : Edge{w1, near};
  edges.push_back({w1, w2});  // darts 2m, 2m+1
  edges.push_back({w2, far}); // darts 2m+2, 2m+3
  for (int &d : rot[far - 1])
    if (d == far_dart)
      d = 2 * m + 3;
  rot.push_back({far_dart, 2 * m});
  rot.push_back({2 * m + 1, 2 * m + 2});
  return RotationSystem(n + 2, std::move(edges), std::move(rot));
}

struct Subdivision {
  RotationSystem result;
  int subdivided_edges = 0;
  int rounds = 0;
};

// S: arcs pointing backwards in the edge-id order. At each colour one arc of S is kept (S') and the
// tail end of every other arc is handed to a fresh edge by subdividing twice. A fresh edge can sit
// anywhere in the order, and the opposite arcs of a new colour always hold one backward arc, so only
// the ends kept at the old vertices matter: when they read cyclically with a single descent the
// result has a diverse FAS. Ends are freed in rounds until that holds.
inline Subdivision subdivide_to_peggable_traced(const RotationSystem &input)
{
  Subdivision s{input, 0, 0};
  if (diverse_fas(input))
    return s;
  int n = input.vertex_count();
  // freed[e-1] bit 0 / 1: the end at edges[e-1].first / .second
  std::vector<int> freed(static_cast<std::size_t>(input.edge_count()), 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> kept = input.rotation(v);
    for (int round = 1; kept.size() >= 2; ++round) {
      std::vector<int> tails;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        int d = kept[k], nx = kept[(k + 1) % kept.size()];
        if (RotationSystem::edge_of(d) > RotationSystem::edge_of(nx))
          tails.push_back(d);
      }
      if (tails.size() <= 1)
        break;
      s.rounds = std::max(s.rounds, round);
      tails.erase(tails.begin()); // S' keeps the first
      for (int d : tails) {
        freed[static_cast<std::size_t>(d / 2)] |= 1 << (d % 2);
        kept.erase(std::find(kept.begin(), kept.end(), d));
      }
    }
  }
  RotationSystem cur = input;
  for (int x = 1; x <= input.edge_count(); ++x) {
    int f = freed[static_cast<std::size_t>(x - 1)];
    auto [p, q] = input.edges()[x - 1];
    if (f & 2) { // x keeps p, a fresh edge takes q
      cur = subdivide_twice(cur, x, p);
      ++s.subdivided_edges;
    }
    if (f & 1) { // x keeps its other current end
      auto [a, b] = cur.edges()[x - 1];
      cur = subdivide_twice(cur, x, a == p ? b : a);
      ++s.subdivided_edges;
    }
  }
  s.result = cur;
  if (!diverse_fas(s.result))
    fail(ErrorKind::defect, "subdivision did not reach a peggable ceg");
  return s;
}

inline RotationSystem subdivide_to_peggable(const RotationSystem &rs) { return subdivide_to_peggable_traced(rs).result; }

// ---- T-operation and realization ----

// Around edge e = {x<y} labelled i: (v x) takes label i, e becomes i+1, (v y) takes i+2.
inline Factorization t_operation(const Factorization &rho, int v, int e)
{
  if (e < 1 || e > rho.length())
    fail(ErrorKind::index_range, "edge label out of range");
  auto t = rho[e];
  if (t.moves(v))
    fail(ErrorKind::precondition, "vertex is an endpoint of the edge");
  if (v < 1 || v > rho.degree())
    fail(ErrorKind::precondition, "vertex outside [n]");
  auto f = rho.factors();
  f.insert(f.begin() + e, Transposition(v, t.t()));
  f.insert(f.begin() + (e - 1), Transposition(v, t.s()));
  return Factorization(rho.degree(), std::move(f));
}

inline EdgeLabeledGraph t_operation(const EdgeLabeledGraph &g, int v, int e)
{
  return from_factorization(t_operation(to_factorization(g), v, e)).with_mode(g.mode());
}

inline bool admissible_kn_type(int n, const std::vector<int> &lambda)
{
  int sum = 0;
  for (int x : lambda) {
    if (x < 1)
      return false;
    sum += x;
  }
  if (sum != n)
    return false;
  int b = static_cast<int>(lambda.size());
  int chi = n - n * (n - 1) / 2;
  return b <= n && ((b - chi) % 2 + 2) % 2 == 0;
}

namespace detail {

inline Factorization widen(const Factorization &rho, int n)
{
  return Factorization(n, rho.factors());
}

inline int label_of(const Factorization &rho, int x, int y)
{
  Transposition t(x, y);
  for (int i = 1; i <= rho.length(); ++i)
    if (rho[i] == t)
      return i;
  fail(ErrorKind::defect, "edge missing from complete graph");
}

// a point on some cycle of the given length
inline int point_on_cycle(const Permutation &mu, int len, const std::vector<int> &avoid = {})
{
  for (auto &c : cycles(mu, true))
    if (static_cast<int>(c.size()) == len && std::find(avoid.begin(), avoid.end(), c.front()) == avoid.end())
      return c.front();
  fail(ErrorKind::defect, "no cycle of the required length");
}

inline Factorization fill_with_t(Factorization rho, int v, const std::vector<int> &attached)
{
  std::vector<int> rest;
  for (int x = 1; x < v; ++x)
    if (std::find(attached.begin(), attached.end(), x) == attached.end())
      rest.push_back(x);
  for (std::size_t k = 0; k + 1 < rest.size(); k += 2)
    rho = t_operation(rho, v, label_of(rho, rest[k], rest[k + 1]));
  return rho;
}

inline std::vector<int> sorted_desc(std::vector<int> l)
{
  std::sort(l.begin(), l.end(), std::greater<>());
  return l;
}

inline Factorization realize(int n, std::vector<int> lambda)
{
  lambda = sorted_desc(lambda);
  if (n == 1)
    return Factorization(1);
  if (n == 2)
    return Factorization(2, {{1, 2}});
  if (n == 3)
    return Factorization(3, {{1, 2}, {1, 3}, {2, 3}});
  if (n == 4) {
    if (lambda == std::vector<int>{3, 1})
      return Factorization(4, {{3, 4}, {2, 4}, {2, 3}, {1, 2}, {1, 4}, {1, 3}});
    if (lambda == std::vector<int>{2, 2})
      return Factorization(4, {{3, 4}, {2, 3}, {2, 4}, {1, 2}, {1, 4}, {1, 3}});
    return Factorization(4, {{3, 4}, {2, 3}, {1, 4}, {2, 4}, {1, 3}, {1, 2}});
  }
  int v = n;
  bool has_one = std::find(lambda.begin(), lambda.end(), 1) != lambda.end();
  if (n % 2 == 0) {
    if (lambda.front() == 1) {
      // K_{n-4} and K_4 both with identity monodromy, then T-moves across
      Factorization a = widen(realize(n - 4, std::vector<int>(static_cast<std::size_t>(n - 4), 1)), n);
      std::vector<Transposition> b;
      Factorization k4 = realize(4, {1, 1, 1, 1});
      for (auto t : k4.factors())
        b.emplace_back(t.s() + n - 4, t.t() + n - 4);
      Factorization rho = concat(a, Factorization(n, b));
      for (int u = n - 3; u <= n; ++u)
        for (int x = 1; x + 1 <= n - 4; x += 2)
          rho = t_operation(rho, u, label_of(rho, x, x + 1));
      return rho;
    }
    // shorten the largest part; v rejoins that cycle
    std::vector<int> sub = lambda;
    int k = sub.front();
    sub.front() = k - 1;
    Factorization rho = widen(realize(n - 1, sub), n);
    int w = point_on_cycle(monodromy(rho), k - 1, {v});
    rho = concat(rho, Factorization(n, {{v, w}}));
    return fill_with_t(rho, v, {w});
  }
  if (has_one) {
    std::vector<int> sub = lambda;
    sub.erase(std::find(sub.begin(), sub.end(), 1));
    Factorization rho = widen(realize(n - 1, sub), n);
    return fill_with_t(rho, v, {});
  }
  if (lambda.size() >= 2) {
    // merge two parts p, q into p+q-1 below, then split back out
    int p = lambda[0], q = lambda[1];
    std::vector<int> sub(lambda.begin() + 2, lambda.end());
    sub.push_back(p + q - 1);
    Factorization rho = widen(realize(n - 1, sub), n);
    Permutation mu = monodromy(rho);
    int w1 = point_on_cycle(mu, p + q - 1, {v});
    int w2 = w1;
    for (int s = 1; s < p; ++s)
      w2 = mu(w2);
    rho = concat(rho, Factorization(n, {{v, w1}, {v, w2}}));
    return fill_with_t(rho, v, {w1, w2});
  }
  // a single n-cycle: (n-2, 1) below, attach to the fixed point, then merge
  Factorization rho = widen(realize(n - 1, {n - 2, 1}), n);
  Permutation mu = monodromy(rho);
  int f = point_on_cycle(mu, 1, {v});
  int w = point_on_cycle(mu, n - 2, {v});
  rho = concat(rho, Factorization(n, {{v, f}, {v, w}}));
  return fill_with_t(rho, v, {f, w});
}

} // namespace detail

inline Factorization realize_kn_type(int n, const std::vector<int> &lambda)
{
  if (n < 1)
    fail(ErrorKind::precondition, "n must be positive");
  if (!admissible_kn_type(n, lambda))
    fail(ErrorKind::infeasible_type, "no labelling of K_" + std::to_string(n) + " has this cycle type");
  Factorization rho = detail::realize(n, lambda);
  if (cycle_type(monodromy(rho)) != detail::sorted_desc(lambda))
    fail(ErrorKind::defect, "realization produced the wrong cycle type");
  return rho;
}

inline bool is_complete_graph(const EdgeLabeledGraph &g)
{
  int n = g.vertex_count();
  if (g.edge_count() != n * (n - 1) / 2)
    return false;
  std::set<Edge> s(g.edges().begin(), g.edges().end());
  return static_cast<int>(s.size()) == g.edge_count();
}

// ---- self-duality ----

inline RotationSystem ceg_of_identity_factorization(const Factorization &rho)
{
  if (!monodromy(rho).is_identity())
    fail(ErrorKind::precondition, "monodromy is not the identity");
  return completion(from_factorization(rho));
}

// underlying graphs of the ceg and its dual, labels forgotten
inline bool selfdual_check(const RotationSystem &rs)
{
  return isomorphic_unlabeled(dual_ceg(rs).underlying(), rs.underlying());
}

} // namespace mindbody
