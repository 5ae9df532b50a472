#pragma once

#include "mindbody/medial.hpp"

namespace mindbody {

struct RootedETree {
  EdgeLabeledGraph tree; // mode E
  int root = 1;
};

inline CanonicalForm canonical_form(const RootedETree &t) { return rooted_canonical_form(t.tree, t.root); }

inline bool isomorphic(const RootedETree &a, const RootedETree &b) { return canonical_form(a) == canonical_form(b); }

struct VTree {
  int n = 0;
  std::vector<Edge> edges; // sorted, each with u < v

  static VTree make(int n, std::vector<Edge> e)
  {
    for (auto &[u, v] : e)
      if (u > v)
        std::swap(u, v);
    std::sort(e.begin(), e.end());
    return VTree{n, std::move(e)};
  }
  std::vector<std::vector<int>> adjacency() const
  {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto &a : adj)
      std::sort(a.begin(), a.end());
    return adj;
  }
  bool operator==(const VTree &) const = default;
  auto operator<=>(const VTree &) const = default;
};

// histogram, index i holds the count for value i (index 0 unused)
using Distribution = std::vector<int>;

// (n n-1 ... 1): v -> v-1
inline Permutation zeta0(int n)
{
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v)
    img[v - 1] = v == 1 ? n : v - 1;
  return Permutation::from_images(std::move(img));
}

inline bool is_minimal_cycle_factorization(const Factorization &rho)
{
  if (rho.length() != rho.degree() - 1)
    fail(ErrorKind::precondition, "a minimal factorization has n-1 factors");
  bool tree = graph_stats(from_factorization(rho)).is_tree;
  bool cyc = is_full_cycle(monodromy(rho));
  if (tree != cyc)
    fail(ErrorKind::defect, "tree and cycle criteria disagree");
  return tree;
}

inline RootedETree f_zeta(const Factorization &rho, const Permutation &zeta)
{
  if (monodromy(rho) != zeta)
    fail(ErrorKind::precondition, "monodromy is not the given cycle");
  if (rho.length() != rho.degree() - 1)
    fail(ErrorKind::precondition, "not a minimal factorization");
  return RootedETree{from_factorization(rho).with_mode(LabelMode::E), 1};
}

// Root gets label 1 and label(tau(v)) = zeta(label(v)), tau the monodromy of the tree.
inline Factorization f_zeta_inverse(const RootedETree &t, const Permutation &zeta)
{
  int n = t.tree.vertex_count();
  if (zeta.degree() != n || !is_full_cycle(zeta))
    fail(ErrorKind::precondition, "zeta must be an n-cycle");
  Permutation tau = monodromy(t.tree);
  std::vector<int> label(static_cast<std::size_t>(n + 1), 0);
  int v = t.root, l = 1;
  for (int k = 0; k < n; ++k) {
    label[v] = l;
    v = tau(v);
    l = zeta(l);
  }
  if (v != t.root)
    fail(ErrorKind::precondition, "tree monodromy is not an n-cycle");
  std::vector<Transposition> f;
  for (auto [a, b] : t.tree.edges())
    f.emplace_back(label[a], label[b]);
  return Factorization(n, std::move(f));
}

namespace detail {
// parent of each vertex (0 for the root) and the label of the edge to it
inline void orient(const EdgeLabeledGraph &g, int root, std::vector<int> &parent, std::vector<int> &up_edge)
{
  int n = g.vertex_count();
  parent.assign(static_cast<std::size_t>(n + 1), -1);
  up_edge.assign(static_cast<std::size_t>(n + 1), 0);
  auto inc = g.incidence();
  std::vector<int> stack{root};
  parent[root] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int e : inc[x - 1]) {
      int y = g.other_end(e, x);
      if (parent[y] != -1)
        continue;
      parent[y] = x;
      up_edge[y] = e;
      stack.push_back(y);
    }
  }
}
} // namespace detail

// root labelled 1; label i+1 slides from edge i to its endpoint away from the root
inline VTree sliding_S(const RootedETree &t)
{
  int n = t.tree.vertex_count();
  if (!graph_stats(t.tree).is_tree)
    fail(ErrorKind::precondition, "not a tree");
  std::vector<int> parent, up;
  detail::orient(t.tree, t.root, parent, up);
  std::vector<int> label(static_cast<std::size_t>(n + 1));
  for (int v = 1; v <= n; ++v)
    label[v] = v == t.root ? 1 : up[v] + 1;
  std::vector<Edge> e;
  for (auto [a, b] : t.tree.edges())
    e.emplace_back(label[a], label[b]);
  return VTree::make(n, std::move(e));
}

inline RootedETree sliding_S_inverse(const VTree &vt)
{
  int n = vt.n;
  EdgeLabeledGraph g(n, vt.edges, LabelMode::E);
  std::vector<int> parent, up;
  detail::orient(g, 1, parent, up);
  std::vector<Edge> e(static_cast<std::size_t>(n - 1));
  for (int x = 2; x <= n; ++x) {
    if (parent[x] <= 0)
      fail(ErrorKind::precondition, "not a tree");
    e[x - 2] = {parent[x], x};
  }
  return RootedETree{EdgeLabeledGraph(n, std::move(e), LabelMode::E), 1};
}

// v* = ->v keeps its id, so the root carries over
inline RootedETree rooted_dual(const RootedETree &t) { return RootedETree{dual_graph(t.tree), t.root}; }

inline VTree phi(const Factorization &rho)
{
  Permutation z = zeta0(rho.degree());
  return sliding_S(rooted_dual(f_zeta(rho, z)));
}

// ---- statistics ----

inline int difference_index(const Transposition &t, int n) { return std::min(t.t() - t.s(), n - t.t() + t.s()); }

inline Distribution difference_distribution(const Factorization &rho)
{
  Distribution d(static_cast<std::size_t>(rho.degree() + 1), 0);
  for (auto &t : rho.factors())
    ++d[difference_index(t, rho.degree())];
  return d;
}

inline Distribution edge_deletion_distribution(const VTree &t)
{
  Distribution a(static_cast<std::size_t>(t.n + 1), 0);
  auto adj = t.adjacency();
  for (auto [u, v] : t.edges) {
    // size of u's side after deleting {u,v}
    std::vector<char> seen(static_cast<std::size_t>(t.n + 1), 0);
    seen[u] = seen[v] = 1;
    std::vector<int> stack{u};
    int size = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++size;
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    ++a[std::min(size, t.n - size)];
  }
  return a;
}

inline Distribution degree_distribution(const Factorization &rho)
{
  Distribution d(static_cast<std::size_t>(rho.degree() + 1), 0);
  for (int x : from_factorization(rho).degrees())
    ++d[x];
  return d;
}

// first the smallest neighbour, then repeatedly the smallest neighbour above the current
// vertex, never stepping straight back
inline int increasing_path_length(int start, const std::vector<std::vector<int>> &adj)
{
  if (adj[start].empty())
    return 0;
  int prev = start, x = adj[start].front();
  int len = 1;
  while (true) {
    int next = 0;
    for (int y : adj[x])
      if (y > x && y != prev) {
        next = y;
        break;
      }
    if (next == 0)
      return len;
    prev = x;
    x = next;
    ++len;
  }
}

inline Distribution path_length_distribution(const VTree &t)
{
  Distribution l(static_cast<std::size_t>(t.n + 1), 0);
  auto adj = t.adjacency();
  for (int v = 1; v <= t.n; ++v)
    ++l[increasing_path_length(v, adj)];
  return l;
}

// Greedy walk on the tree rooted at 1 where a step down to child c reads c and a step up
// out of x reads x. Each step takes the least reading above the previous one. These are
// the images of migts under sliding.
inline int slid_trail_length(int start, const std::vector<std::vector<int>> &adj, const std::vector<int> &parent)
{
  int x = start, last = 0, len = 0;
  while (true) {
    int best = 0, to = 0;
    for (int y : adj[x]) {
      int read = y == parent[x] ? x : y;
      if (read > last && (best == 0 || read < best)) {
        best = read;
        to = y;
      }
    }
    if (best == 0)
      return len;
    last = best;
    x = to;
    ++len;
  }
}

inline Distribution slid_trail_distribution(const VTree &t)
{
  Distribution l(static_cast<std::size_t>(t.n + 1), 0);
  auto adj = t.adjacency();
  std::vector<int> parent, up;
  detail::orient(EdgeLabeledGraph(t.n, t.edges, LabelMode::E), 1, parent, up);
  for (int v = 1; v <= t.n; ++v)
    ++l[slid_trail_length(v, adj, parent)];
  return l;
}

// ---- enumeration ----

// Every rooted e-tree once: edge l hangs below the lower end of edge parent[l] (0 = the root).
inline std::vector<RootedETree> rooted_etrees(int n)
{
  if (n < 1 || n > 8)
    fail(ErrorKind::size_guard, "rooted e-tree enumeration is limited to n <= 8");
  std::vector<RootedETree> out;
  int k = n - 1;
  std::vector<int> parent(static_cast<std::size_t>(k + 1), 0);
  auto emit = [&]() {
    // acyclic iff every edge reaches the root
    for (int l = 1; l <= k; ++l) {
      int x = l;
      for (int steps = 0; x != 0; ++steps) {
        if (steps > k)
          return;
        x = parent[x];
      }
    }
    std::vector<Edge> e;
    for (int l = 1; l <= k; ++l)
      e.emplace_back(parent[l] == 0 ? 1 : parent[l] + 1, l + 1);
    out.push_back({EdgeLabeledGraph(n, std::move(e), LabelMode::E), 1});
  };
  auto rec = [&](auto &&self, int l) -> void {
    if (l > k) {
      emit();
      return;
    }
    for (int p = 0; p <= k; ++p) {
      if (p == l)
        continue;
      parent[l] = p;
      self(self, l + 1);
    }
  };
  rec(rec, 1);
  return out;
}

inline std::vector<EdgeLabeledGraph> etrees(int n)
{
  std::set<CanonicalForm> seen;
  std::vector<EdgeLabeledGraph> out;
  for (auto &t : rooted_etrees(n))
    if (seen.insert(canonical_form(t.tree)).second)
      out.push_back(t.tree);
  return out;
}

inline std::vector<Factorization> minimal_factorizations_brute(const Permutation &zeta)
{
  int n = zeta.degree();
  if (n > 6)
    fail(ErrorKind::size_guard, "brute sequence search is limited to n <= 6");
  std::vector<Transposition> all;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      all.emplace_back(s, t);
  std::vector<Factorization> out;
  std::vector<Transposition> cur;
  std::vector<int> img(static_cast<std::size_t>(n));
  auto rec = [&](auto &&self) -> void {
    if (static_cast<int>(cur.size()) == n - 1) {
      for (int v = 1; v <= n; ++v) {
        int x = v;
        for (auto &t : cur)
          x = t.apply(x);
        if (x != zeta(v))
          return;
      }
      out.emplace_back(n, cur);
      return;
    }
    for (auto &t : all) {
      cur.push_back(t);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Factorization> minimal_factorizations_via_trees(const Permutation &zeta)
{
  std::vector<Factorization> out;
  for (auto &t : rooted_etrees(zeta.degree()))
    out.push_back(f_zeta_inverse(t, zeta));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct MinimalFactorizations {
  std::vector<Factorization> list;
  std::int64_t brute_count = -1; // -1 when the brute search was not run
  std::int64_t tree_count = 0;
  bool agree = true;
};

inline MinimalFactorizations enumerate_minimal_factorizations(const Permutation &zeta)
{
  int n = zeta.degree();
  if (n > 7)
    fail(ErrorKind::size_guard, "minimal factorization enumeration is limited to n <= 7");
  if (!is_full_cycle(zeta))
    fail(ErrorKind::precondition, "zeta must be an n-cycle");
  MinimalFactorizations r;
  r.list = minimal_factorizations_via_trees(zeta);
  r.tree_count = static_cast<std::int64_t>(r.list.size());
  if (n <= 6) {
    auto b = minimal_factorizations_brute(zeta);
    r.brute_count = static_cast<std::int64_t>(b.size());
    r.agree = b == r.list;
  }
  return r;
}

// ---- zigzag ditrees and self-dual e-trees ----

// updown: x1 -> x2 <- x3 -> x4 ...; downup reverses every arc
inline MedialDigraph zigzag_ditree(int k, bool updown)
{
  std::vector<Arc> arcs;
  for (int i = 1; i < k; ++i) {
    bool forward = (i % 2 == 1) == updown;
    arcs.push_back(forward ? Arc{i, i + 1, 0} : Arc{i + 1, i, 0});
  }
  return MedialDigraph(k, std::move(arcs));
}

struct SelfDualCount {
  int filter = 0;
  int construct = 0;
  int rooted_filter = 0;
  int rooted_construct = 0;
  std::vector<EdgeLabeledGraph> witnesses; // from the filter route
};

inline SelfDualCount enumerate_selfdual_etrees(int n, bool with_rooted = true)
{
  SelfDualCount r;
  auto rooted = rooted_etrees(n);
  std::set<CanonicalForm> unrooted;
  for (auto &t : rooted) {
    auto cf = canonical_form(t.tree);
    if (!unrooted.insert(cf).second)
      continue;
    if (canonical_form(dual_graph(t.tree)) == cf) {
      ++r.filter;
      r.witnesses.push_back(t.tree);
    }
  }
  if (with_rooted)
    for (auto &t : rooted)
      r.rooted_filter += canonical_form(rooted_dual(t)) == canonical_form(t);

  int k = n - 1;
  std::set<CanonicalForm> built, built_rooted;
  if (k >= 1) {
    for (bool ud : {true, false}) {
      MedialDigraph z = zigzag_ditree(k, ud);
      Pcd pcd = pcd_from_selector(z, all_selectors(z).front());
      std::vector<int> flags;
      for (int c = 0; c < static_cast<int>(pcd.chains.size()); ++c) {
        auto &ch = pcd.chains[c];
        if (ch.arcs.empty() && z.indegree(ch.anchor) == 1 && z.outdegree(ch.anchor) == 0)
          flags.push_back(c);
      }
      for_each_topological_sort(z, [&](const std::vector<int> &s) {
        EdgeLabeledGraph g = egraph_from_pcd(z, pcd, s);
        built.insert(canonical_form(g));
        if (with_rooted)
          for (int c : flags)
            built_rooted.insert(rooted_canonical_form(g, c + 1));
        return true;
      });
    }
  } else {
    built.insert(canonical_form(EdgeLabeledGraph(1, {}, LabelMode::E)));
  }
  r.construct = static_cast<int>(built.size());
  r.rooted_construct = static_cast<int>(built_rooted.size());
  return r;
}

// Euler up/down numbers E(k) by the boustrophedon (Seidel) triangle
inline std::vector<std::int64_t> euler_updown(int upto)
{
  std::vector<std::int64_t> out{1};
  std::vector<std::int64_t> row{1};
  for (int k = 1; k <= upto; ++k) {
    std::vector<std::int64_t> next{0};
    for (std::size_t j = 0; j < row.size(); ++j)
      next.push_back(next.back() + row[row.size() - 1 - j]);
    row = next;
    out.push_back(row.back());
  }
  return out;
}

} // namespace mindbody
