#pragma once

#include "mindbody/perm.hpp"

#include <map>
#include <utility>
#include <vector>

namespace mindbody {

class Factorization {
public:
  Factorization() = default;
  explicit Factorization(int n, std::vector<Transposition> factors = {}) : n_(n), f_(std::move(factors))
  {
    if (n < 1)
      fail(ErrorKind::precondition, "factorization degree must be >= 1");
    for (auto &t : f_)
      if (t.t() > n_)
        fail(ErrorKind::degree_mismatch, "factor " + to_string(t) + " outside [" + std::to_string(n_) + "]");
  }

  int degree() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(f_.size()); }
  bool empty() const noexcept { return f_.empty(); }
  const std::vector<Transposition> &factors() const noexcept { return f_; }
  std::vector<Transposition> &factors() noexcept { return f_; }
  // 1-based, as in the text
  const Transposition &operator[](int i) const { return f_[static_cast<std::size_t>(i - 1)]; }

  bool operator==(const Factorization &) const = default;
  auto operator<=>(const Factorization &) const = default;

private:
  int n_ = 1;
  std::vector<Transposition> f_;
};

inline Permutation monodromy(const Factorization &rho)
{
  std::vector<int> img(static_cast<std::size_t>(rho.degree()));
  // track where each point goes under the left-to-right product
  for (int v = 1; v <= rho.degree(); ++v) {
    int x = v;
    for (auto &t : rho.factors())
      x = t.apply(x);
    img[v - 1] = x;
  }
  return Permutation::from_images(std::move(img));
}

inline Factorization reverse(const Factorization &rho)
{
  auto f = rho.factors();
  std::reverse(f.begin(), f.end());
  return Factorization(rho.degree(), std::move(f));
}

// "(3 4),(1 3)"
inline std::string to_string(const Factorization &rho)
{
  std::string out;
  for (auto &t : rho.factors())
    out += (out.empty() ? "" : ",") + to_string(t);
  return out;
}

inline Factorization concat(const Factorization &a, const Factorization &b)
{
  if (a.degree() != b.degree())
    fail(ErrorKind::degree_mismatch, "concat of factorizations over different [n]");
  auto f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Factorization(a.degree(), std::move(f));
}

// ^h applied factorwise
inline Factorization conjugate_left(const Factorization &rho, const Permutation &h)
{
  require_same_degree(Permutation(rho.degree()), h);
  Permutation hi = inverse(h);
  std::vector<Transposition> f;
  f.reserve(rho.factors().size());
  for (auto &t : rho.factors())
    f.emplace_back(hi(t.s()), hi(t.t()));
  return Factorization(rho.degree(), std::move(f));
}

enum class LabelMode { EV, E };

using Edge = std::pair<int, int>;

class EdgeLabeledGraph {
public:
  EdgeLabeledGraph() = default;
  EdgeLabeledGraph(int n, std::vector<Edge> edges, LabelMode mode = LabelMode::EV)
      : n_(n), edges_(std::move(edges)), mode_(mode)
  {
    if (n < 0)
      fail(ErrorKind::precondition, "negative vertex count");
    for (auto &[u, v] : edges_) {
      if (u == v)
        fail(ErrorKind::precondition, "loop at vertex " + std::to_string(u));
      if (u < 1 || v < 1 || u > n_ || v > n_)
        fail(ErrorKind::precondition, "edge endpoint outside [n]");
      if (u > v)
        std::swap(u, v);
    }
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  LabelMode mode() const noexcept { return mode_; }
  const std::vector<Edge> &edges() const noexcept { return edges_; }
  const Edge &edge(int label) const { return edges_[static_cast<std::size_t>(label - 1)]; }
  int other_end(int label, int v) const
  {
    auto &e = edge(label);
    return e.first == v ? e.second : e.first;
  }
  int euler_characteristic() const noexcept { return n_ - edge_count(); }

  EdgeLabeledGraph with_mode(LabelMode m) const
  {
    EdgeLabeledGraph g = *this;
    g.mode_ = m;
    return g;
  }

  // incident labels, increasing
  std::vector<std::vector<int>> incidence() const
  {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_));
    for (int i = 1; i <= edge_count(); ++i) {
      inc[edge(i).first - 1].push_back(i);
      inc[edge(i).second - 1].push_back(i);
    }
    return inc;
  }

  std::vector<int> degrees() const
  {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (auto &[u, v] : edges_) {
      ++d[u - 1];
      ++d[v - 1];
    }
    return d;
  }

  bool operator==(const EdgeLabeledGraph &) const = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  LabelMode mode_ = LabelMode::EV;
};

inline EdgeLabeledGraph from_factorization(const Factorization &rho)
{
  std::vector<Edge> e;
  e.reserve(rho.factors().size());
  for (auto &t : rho.factors())
    e.emplace_back(t.s(), t.t());
  return EdgeLabeledGraph(rho.degree(), std::move(e), LabelMode::EV);
}

inline Factorization to_factorization(const EdgeLabeledGraph &g)
{
  if (g.mode() != LabelMode::EV)
    fail(ErrorKind::needs_vertex_labels, "graph has no vertex labels");
  std::vector<Transposition> f;
  for (auto &[u, v] : g.edges())
    f.emplace_back(u, v);
  return Factorization(std::max(1, g.vertex_count()), std::move(f));
}

inline EdgeLabeledGraph reverse(const EdgeLabeledGraph &g)
{
  auto e = g.edges();
  std::reverse(e.begin(), e.end());
  return EdgeLabeledGraph(g.vertex_count(), std::move(e), g.mode());
}

inline EdgeLabeledGraph concat(const EdgeLabeledGraph &a, const EdgeLabeledGraph &b)
{
  if (a.vertex_count() != b.vertex_count())
    fail(ErrorKind::degree_mismatch, "EV concat needs a common vertex set");
  auto e = a.edges();
  e.insert(e.end(), b.edges().begin(), b.edges().end());
  return EdgeLabeledGraph(a.vertex_count(), std::move(e), a.mode());
}

// V(a) and V(b) kept apart; b's vertices are shifted past a's
inline EdgeLabeledGraph disjoint_concat(const EdgeLabeledGraph &a, const EdgeLabeledGraph &b)
{
  auto e = a.edges();
  int s = a.vertex_count();
  for (auto [u, v] : b.edges())
    e.emplace_back(u + s, v + s);
  return EdgeLabeledGraph(s + b.vertex_count(), std::move(e), a.mode());
}

inline int component_count(const EdgeLabeledGraph &g, std::vector<int> *comp_of = nullptr)
{
  int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges())
    parent[find(u - 1)] = find(v - 1);
  std::map<int, int> ids;
  if (comp_of)
    comp_of->assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    auto it = ids.emplace(r, static_cast<int>(ids.size())).first;
    if (comp_of)
      (*comp_of)[v] = it->second;
  }
  return static_cast<int>(ids.size());
}

struct GraphStats {
  int n = 0, m = 0, chi = 0, components = 0;
  bool is_tree = false;
  std::vector<int> degrees;
};

inline GraphStats graph_stats(const EdgeLabeledGraph &g)
{
  GraphStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.chi = s.n - s.m;
  s.components = component_count(g);
  s.is_tree = s.n >= 1 && s.components == 1 && s.m == s.n - 1;
  s.degrees = g.degrees();
  return s;
}

// Exact invariant for label-preserving isomorphism: labels are bijective, so a vertex map
// exists iff the multisets of incident-label sets coincide.
struct CanonicalForm {
  int n = 0;
  std::vector<std::vector<int>> incident; // sorted lists, sorted lexicographically (empty lists for isolated vertices)
  std::vector<int> root;                  // incident list of the root, rooted variant only
  bool operator==(const CanonicalForm &) const = default;
  auto operator<=>(const CanonicalForm &) const = default;
};

inline CanonicalForm canonical_form(const EdgeLabeledGraph &g)
{
  CanonicalForm c;
  c.n = g.vertex_count();
  c.incident = g.incidence();
  std::sort(c.incident.begin(), c.incident.end());
  return c;
}

inline CanonicalForm rooted_canonical_form(const EdgeLabeledGraph &g, int root)
{
  CanonicalForm c = canonical_form(g);
  c.root = g.incidence()[root - 1];
  if (c.root.empty()) // an isolated root must still be distinguished from other isolated vertices
    c.root = {0};
  return c;
}

inline bool isomorphic_e(const EdgeLabeledGraph &a, const EdgeLabeledGraph &b)
{
  return canonical_form(a) == canonical_form(b);
}

inline EdgeLabeledGraph relabel_vertices(const EdgeLabeledGraph &g, const Permutation &p)
{
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    e.emplace_back(p(u), p(v));
  return EdgeLabeledGraph(g.vertex_count(), std::move(e), g.mode());
}

// Unlabelled multigraph isomorphism (edge labels ignored), by backtracking over vertex maps.
inline bool isomorphic_unlabeled(const EdgeLabeledGraph &a, const EdgeLabeledGraph &b)
{
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  auto mult = [n](const EdgeLabeledGraph &g) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (auto [u, v] : g.edges()) {
      ++m[u - 1][v - 1];
      ++m[v - 1][u - 1];
    }
    return m;
  };
  auto ma = mult(a), mb = mult(b);
  auto da = a.degrees(), db = b.degrees();
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return false;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto &&self, int k) -> bool {
    if (k == n)
      return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || da[k] != db[c])
        continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        ok = ma[k][j] == mb[c][map[j]];
      if (!ok)
        continue;
      used[c] = 1;
      map[k] = c;
      if (self(self, k + 1))
        return true;
      used[c] = 0;
    }
    map[k] = -1;
    return false;
  };
  return rec(rec, 0);
}

} // namespace mindbody
