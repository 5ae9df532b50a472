#pragma once

#include "mindbody/mind_body.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace mindbody {

struct Arc {
  int from = 0, to = 0, color = 0;
  bool operator==(const Arc &) const = default;
  auto operator<=>(const Arc &) const = default;
};

class MedialDigraph {
public:
  MedialDigraph() = default;
  MedialDigraph(int vertices, std::vector<Arc> arcs) : m_(vertices), arcs_(std::move(arcs))
  {
    in_.assign(static_cast<std::size_t>(m_), {});
    out_.assign(static_cast<std::size_t>(m_), {});
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k) {
      auto &a = arcs_[k];
      if (a.from < 1 || a.to < 1 || a.from > m_ || a.to > m_)
        fail(ErrorKind::precondition, "arc endpoint outside the vertex set");
      out_[a.from - 1].push_back(k);
      in_[a.to - 1].push_back(k);
    }
  }

  int vertex_count() const noexcept { return m_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc> &arcs() const noexcept { return arcs_; }
  const Arc &arc(int k) const { return arcs_[static_cast<std::size_t>(k)]; }
  const std::vector<int> &in_arcs(int x) const { return in_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int> &out_arcs(int x) const { return out_[static_cast<std::size_t>(x - 1)]; }
  int indegree(int x) const { return static_cast<int>(in_arcs(x).size()); }
  int outdegree(int x) const { return static_cast<int>(out_arcs(x).size()); }
  bool is_internal(int x) const { return indegree(x) >= 1 && outdegree(x) >= 1; }

  bool is_binary() const
  {
    for (int x = 1; x <= m_; ++x)
      if (indegree(x) > 2 || outdegree(x) > 2)
        return false;
    return true;
  }

  int internal_count() const
  {
    int c = 0;
    for (int x = 1; x <= m_; ++x)
      c += is_internal(x);
    return c;
  }

  // (from, to) multiset, colours forgotten
  std::vector<std::pair<int, int>> arc_pairs() const
  {
    std::vector<std::pair<int, int>> p;
    for (auto &a : arcs_)
      p.emplace_back(a.from, a.to);
    std::sort(p.begin(), p.end());
    return p;
  }

private:
  int m_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> in_, out_;
};

inline MedialDigraph medial_digraph(const Leo &leo)
{
  std::vector<Arc> arcs;
  for (int v = 1; v <= leo.vertex_count(); ++v) {
    auto &o = leo.at(v);
    for (std::size_t k = 0; k + 1 < o.size(); ++k)
      arcs.push_back({o[k], o[k + 1], v});
  }
  return MedialDigraph(leo.edge_count(), std::move(arcs));
}

inline MedialDigraph medial_digraph(const EdgeLabeledGraph &g) { return medial_digraph(leo_of(g)); }

// Euler characteristic of the underlying undirected graph.
inline int euler_characteristic(const MedialDigraph &d) { return d.vertex_count() - d.arc_count(); }

inline bool is_acyclic(const MedialDigraph &d)
{
  std::vector<int> indeg(static_cast<std::size_t>(d.vertex_count()));
  std::vector<int> stack;
  for (int x = 1; x <= d.vertex_count(); ++x)
    if ((indeg[x - 1] = d.indegree(x)) == 0)
      stack.push_back(x);
  int seen = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++seen;
    for (int k : d.out_arcs(x))
      if (--indeg[d.arc(k).to - 1] == 0)
        stack.push_back(d.arc(k).to);
  }
  return seen == d.vertex_count();
}

inline bool is_e_realizable(const Leo &leo) { return is_acyclic(medial_digraph(leo)); }

// Lexicographic enumeration; the callback returns false to stop early.
inline void for_each_topological_sort(const MedialDigraph &d, const std::function<bool(const std::vector<int> &)> &visit)
{
  int m = d.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(m));
  for (int x = 1; x <= m; ++x)
    indeg[x - 1] = d.indegree(x);
  std::vector<int> cur;
  std::vector<char> placed(static_cast<std::size_t>(m), 0);
  bool stop = false;
  auto rec = [&](auto &&self) -> void {
    if (stop)
      return;
    if (static_cast<int>(cur.size()) == m) {
      stop = !visit(cur);
      return;
    }
    for (int x = 1; x <= m && !stop; ++x) {
      if (placed[x - 1] || indeg[x - 1] != 0)
        continue;
      placed[x - 1] = 1;
      cur.push_back(x);
      for (int k : d.out_arcs(x))
        --indeg[d.arc(k).to - 1];
      self(self);
      for (int k : d.out_arcs(x))
        ++indeg[d.arc(k).to - 1];
      cur.pop_back();
      placed[x - 1] = 0;
    }
  };
  rec(rec);
}

inline std::vector<std::vector<int>> topological_sorts(const MedialDigraph &d)
{
  std::vector<std::vector<int>> out;
  for_each_topological_sort(d, [&](const std::vector<int> &s) {
    out.push_back(s);
    return true;
  });
  return out;
}

// subset DP; exact for up to 25 vertices
inline std::uint64_t count_topological_sorts(const MedialDigraph &d)
{
  int m = d.vertex_count();
  if (m > 25)
    fail(ErrorKind::size_guard, "too many vertices for sort counting");
  if (!is_acyclic(d))
    return 0;
  std::vector<std::uint32_t> pred(static_cast<std::size_t>(m), 0);
  for (auto &a : d.arcs())
    pred[a.to - 1] |= 1u << (a.from - 1);
  std::vector<std::uint64_t> ways(std::size_t{1} << m, 0);
  ways[0] = 1;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (!ways[s])
      continue;
    for (int x = 0; x < m; ++x)
      if (!(s >> x & 1) && (pred[x] & s) == pred[x])
        ways[s | 1u << x] += ways[s];
  }
  return ways[(std::size_t{1} << m) - 1];
}

// ---- chain decompositions ----

struct Chain {
  int anchor = 0;        // first vertex
  std::vector<int> arcs; // arc indices, may be empty
  bool operator==(const Chain &) const = default;
  auto operator<=>(const Chain &) const = default;
};

struct Pcd {
  std::vector<Chain> chains;
  bool operator==(const Pcd &) const = default;
};

inline std::vector<int> chain_vertices(const MedialDigraph &d, const Chain &c)
{
  std::vector<int> v{c.anchor};
  for (int k : c.arcs)
    v.push_back(d.arc(k).to);
  return v;
}

inline Pcd normalized(Pcd p)
{
  std::sort(p.chains.begin(), p.chains.end(),
            [](const Chain &a, const Chain &b) { return std::tie(a.arcs, a.anchor) < std::tie(b.arcs, b.anchor); });
  return p;
}

// PCDs on different digraphs with the same arc pairs are compared this way
inline std::vector<std::vector<int>> chain_sequences(const MedialDigraph &d, const Pcd &p)
{
  std::vector<std::vector<int>> s;
  for (auto &c : p.chains)
    s.push_back(chain_vertices(d, c));
  std::sort(s.begin(), s.end());
  return s;
}

inline std::optional<std::string> pcd_violation(const MedialDigraph &d, const Pcd &p)
{
  std::vector<int> used(static_cast<std::size_t>(d.arc_count()), 0);
  std::vector<int> member(static_cast<std::size_t>(d.vertex_count()), 0);
  for (auto &c : p.chains) {
    int at = c.anchor;
    if (at < 1 || at > d.vertex_count())
      return std::string("chain anchor out of range");
    std::set<int> vs{at};
    for (int k : c.arcs) {
      if (k < 0 || k >= d.arc_count() || d.arc(k).from != at)
        return std::string("chain is not a directed path");
      ++used[k];
      at = d.arc(k).to;
      if (!vs.insert(at).second)
        return std::string("chain revisits a vertex");
    }
    for (int x : vs)
      ++member[x - 1];
  }
  for (int k = 0; k < d.arc_count(); ++k)
    if (used[k] != 1)
      return "arc " + std::to_string(k) + " not covered exactly once";
  for (int x = 1; x <= d.vertex_count(); ++x)
    if (member[x - 1] != 2)
      return "vertex " + std::to_string(x) + " lies on " + std::to_string(member[x - 1]) + " chains";
  return std::nullopt;
}

namespace detail {
inline std::map<std::tuple<int, int, int>, int> arc_index(const MedialDigraph &d)
{
  std::map<std::tuple<int, int, int>, int> idx;
  for (int k = 0; k < d.arc_count(); ++k)
    idx.emplace(std::tuple{d.arc(k).from, d.arc(k).to, d.arc(k).color}, k);
  return idx;
}
} // namespace detail

// One chain per non-isolated vertex of the graph, in vertex order.
inline Pcd pcd_from_leo(const Leo &leo, const MedialDigraph &d)
{
  auto idx = detail::arc_index(d);
  Pcd p;
  for (int v = 1; v <= leo.vertex_count(); ++v) {
    auto &o = leo.at(v);
    if (o.empty())
      continue;
    Chain c{o.front(), {}};
    for (std::size_t k = 0; k + 1 < o.size(); ++k)
      c.arcs.push_back(idx.at({o[k], o[k + 1], v}));
    p.chains.push_back(std::move(c));
  }
  return p;
}

inline Pcd pcd_from_leo(const Leo &leo) { return pcd_from_leo(leo, medial_digraph(leo)); }

// One chain per migt.
inline Pcd pcd_from_ptdc(const Leo &leo, const MedialDigraph &d)
{
  auto idx = detail::arc_index(d);
  Pcd p;
  Ptdc all = ptdc_of(leo);
  for (auto &t : all.trails()) {
    if (t.steps.empty())
      continue;
    Chain c{t.steps.front().edge, {}};
    for (std::size_t k = 0; k + 1 < t.steps.size(); ++k)
      c.arcs.push_back(idx.at({t.steps[k].edge, t.steps[k + 1].edge, t.steps[k].to}));
    p.chains.push_back(std::move(c));
  }
  return p;
}

inline Pcd pcd_from_ptdc(const Leo &leo) { return pcd_from_ptdc(leo, medial_digraph(leo)); }

// bits[x-1] in {0,1} on internal vertices, -1 elsewhere
struct Selector {
  std::vector<int> bits;
  bool operator==(const Selector &) const = default;
};

inline Selector flipped(Selector s)
{
  for (int &b : s.bits)
    if (b >= 0)
      b = 1 - b;
  return s;
}

namespace detail {

inline std::vector<int> sorted_in(const MedialDigraph &d, int x)
{
  auto v = d.in_arcs(x);
  std::sort(v.begin(), v.end(), [&](int a, int b) { return std::pair(d.arc(a).from, a) < std::pair(d.arc(b).from, b); });
  return v;
}

inline std::vector<int> sorted_out(const MedialDigraph &d, int x)
{
  auto v = d.out_arcs(x);
  std::sort(v.begin(), v.end(), [&](int a, int b) { return std::pair(d.arc(a).to, a) < std::pair(d.arc(b).to, b); });
  return v;
}

// (in-arc, out-arc) pairs joined at x under a choice
inline std::vector<std::pair<int, int>> pairing(const MedialDigraph &d, int x, int choice)
{
  auto I = sorted_in(d, x), O = sorted_out(d, x);
  std::vector<std::pair<int, int>> p;
  if (I.empty() || O.empty())
    return p;
  if (I.size() == 1 && O.size() == 1) {
    if (choice == 0)
      p.emplace_back(I[0], O[0]);
  } else if (I.size() == 1) {
    p.emplace_back(I[0], O[choice]);
  } else if (O.size() == 1) {
    p.emplace_back(I[choice], O[0]);
  } else {
    p.emplace_back(I[0], O[choice]);
    p.emplace_back(I[1], O[1 - choice]);
  }
  return p;
}

} // namespace detail

inline Selector selector_of(const MedialDigraph &d, const Pcd &p)
{
  std::set<std::pair<int, int>> joined;
  for (auto &c : p.chains)
    for (std::size_t k = 0; k + 1 < c.arcs.size(); ++k)
      joined.emplace(c.arcs[k], c.arcs[k + 1]);
  Selector s;
  s.bits.assign(static_cast<std::size_t>(d.vertex_count()), -1);
  for (int x = 1; x <= d.vertex_count(); ++x) {
    if (!d.is_internal(x))
      continue;
    for (int choice : {0, 1}) {
      auto want = detail::pairing(d, x, choice);
      std::size_t here = 0;
      for (auto &[a, b] : joined)
        here += d.arc(a).to == x;
      bool ok = here == want.size();
      for (auto &pr : want)
        ok = ok && joined.count(pr);
      if (ok) {
        s.bits[x - 1] = choice;
        break;
      }
    }
    if (s.bits[x - 1] < 0)
      fail(ErrorKind::precondition, "chain decomposition is not perfect at vertex " + std::to_string(x));
  }
  return s;
}

inline Pcd pcd_from_selector(const MedialDigraph &d, const Selector &s)
{
  if (static_cast<int>(s.bits.size()) != d.vertex_count())
    fail(ErrorKind::selector_domain, "selector size differs from vertex count");
  int L = d.arc_count();
  std::vector<int> next(static_cast<std::size_t>(L), -1);
  std::vector<char> has_prev(static_cast<std::size_t>(L), 0);
  std::vector<int> joins(static_cast<std::size_t>(d.vertex_count()), 0);
  for (int x = 1; x <= d.vertex_count(); ++x) {
    int b = s.bits[x - 1];
    if (d.is_internal(x) != (b == 0 || b == 1))
      fail(ErrorKind::selector_domain, "selector undefined or misplaced at vertex " + std::to_string(x));
    if (b < 0)
      continue;
    for (auto [a, o] : detail::pairing(d, x, b)) {
      next[a] = o;
      has_prev[o] = 1;
      ++joins[x - 1];
    }
  }
  Pcd p;
  int covered = 0;
  for (int k = 0; k < L; ++k) {
    if (has_prev[k])
      continue;
    Chain c{d.arc(k).from, {}};
    for (int a = k; a >= 0; a = next[a]) {
      c.arcs.push_back(a);
      ++covered;
    }
    p.chains.push_back(std::move(c));
  }
  if (covered != L)
    fail(ErrorKind::cyclic_digraph, "selector closes a chain into a cycle");
  for (int x = 1; x <= d.vertex_count(); ++x) {
    int on = d.indegree(x) + d.outdegree(x) - joins[x - 1];
    for (int k = on; k < 2; ++k)
      p.chains.push_back({x, {}});
  }
  return normalized(p);
}

inline Pcd pcd_dual(const MedialDigraph &d, const Pcd &p) { return pcd_from_selector(d, flipped(selector_of(d, p))); }

inline std::vector<Selector> all_selectors(const MedialDigraph &d)
{
  std::vector<int> internal;
  for (int x = 1; x <= d.vertex_count(); ++x)
    if (d.is_internal(x))
      internal.push_back(x);
  std::vector<Selector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << internal.size()); ++mask) {
    Selector s;
    s.bits.assign(static_cast<std::size_t>(d.vertex_count()), -1);
    for (std::size_t k = 0; k < internal.size(); ++k)
      s.bits[internal[k] - 1] = static_cast<int>(mask >> k & 1);
    out.push_back(std::move(s));
  }
  return out;
}

inline bool is_topological_sort(const MedialDigraph &d, const std::vector<int> &sort)
{
  if (static_cast<int>(sort.size()) != d.vertex_count())
    return false;
  std::vector<int> pos(static_cast<std::size_t>(d.vertex_count()), -1);
  for (int k = 0; k < static_cast<int>(sort.size()); ++k) {
    int x = sort[k];
    if (x < 1 || x > d.vertex_count() || pos[x - 1] >= 0)
      return false;
    pos[x - 1] = k;
  }
  for (auto &a : d.arcs())
    if (pos[a.from - 1] >= pos[a.to - 1])
      return false;
  return true;
}

// Gamma-vertex per chain (chain index + 1), Gamma-edge per M-vertex labelled by its sort position.
inline EdgeLabeledGraph egraph_from_pcd(const MedialDigraph &d, const Pcd &p, const std::vector<int> &sort)
{
  if (!is_acyclic(d))
    fail(ErrorKind::cyclic_digraph, "egraph_from_pcd needs an acyclic digraph");
  if (!is_topological_sort(d, sort))
    fail(ErrorKind::precondition, "not a topological sort");
  if (auto bad = pcd_violation(d, p))
    fail(ErrorKind::precondition, *bad);
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(d.vertex_count()));
  for (int c = 0; c < static_cast<int>(p.chains.size()); ++c)
    for (int x : chain_vertices(d, p.chains[c]))
      holders[x - 1].push_back(c + 1);
  std::vector<Edge> e;
  for (int x : sort)
    e.emplace_back(holders[x - 1][0], holders[x - 1][1]);
  return EdgeLabeledGraph(static_cast<int>(p.chains.size()), std::move(e), LabelMode::E);
}

// M relabelled so that vertex sort[k] becomes k+1
inline MedialDigraph relabel_by_sort(const MedialDigraph &d, const std::vector<int> &sort)
{
  std::vector<int> pos(static_cast<std::size_t>(d.vertex_count()));
  for (int k = 0; k < static_cast<int>(sort.size()); ++k)
    pos[sort[k] - 1] = k + 1;
  std::vector<Arc> arcs;
  for (auto a : d.arcs())
    arcs.push_back({pos[a.from - 1], pos[a.to - 1], a.color});
  return MedialDigraph(d.vertex_count(), std::move(arcs));
}

// brute-force automorphisms of the (multi)digraph, colours ignored
inline std::uint64_t automorphism_count(const MedialDigraph &d)
{
  int m = d.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (auto &a : d.arcs())
    ++adj[a.from - 1][a.to - 1];
  std::vector<int> map(static_cast<std::size_t>(m), -1);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::uint64_t count = 0;
  auto rec = [&](auto &&self, int k) -> void {
    if (k == m) {
      ++count;
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (used[c] || d.indegree(k + 1) != d.indegree(c + 1) || d.outdegree(k + 1) != d.outdegree(c + 1))
        continue;
      bool ok = adj[k][k] == adj[c][c];
      for (int j = 0; j < k && ok; ++j)
        ok = adj[k][j] == adj[c][map[j]] && adj[j][k] == adj[map[j]][c];
      if (!ok)
        continue;
      used[c] = 1;
      map[k] = c;
      self(self, k + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

struct EgraphCount {
  int iota = 0;
  std::uint64_t tau = 0, alpha = 0;
  std::uint64_t numerator = 0; // 2^iota * tau
  bool integral = false;
  std::uint64_t formula = 0;   // numerator / alpha when integral
  std::uint64_t brute = 0;     // distinct mode-E e-graphs from all (pcd, sort) pairs
  bool agree() const { return integral && formula == brute; }
};

inline EgraphCount count_egraphs_of_dag(const MedialDigraph &d)
{
  if (!is_acyclic(d))
    fail(ErrorKind::cyclic_digraph, "count_egraphs_of_dag needs a dag");
  EgraphCount r;
  r.iota = d.internal_count();
  r.tau = count_topological_sorts(d);
  r.alpha = automorphism_count(d);
  r.numerator = (std::uint64_t{1} << r.iota) * r.tau;
  r.integral = r.numerator % r.alpha == 0;
  r.formula = r.integral ? r.numerator / r.alpha : 0;
  auto sorts = topological_sorts(d);
  std::set<CanonicalForm> seen;
  for (auto &s : all_selectors(d)) {
    Pcd p = pcd_from_selector(d, s);
    for (auto &t : sorts)
      seen.insert(canonical_form(egraph_from_pcd(d, p, t)));
  }
  r.brute = seen.size();
  return r;
}

// All simple binary dags on k vertices up to isomorphism (arcs i->j with i<j in the representative).
inline std::vector<MedialDigraph> binary_dags(int k)
{
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      slots.emplace_back(i, j);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::set<std::vector<std::pair<int, int>>> classes;
  std::vector<MedialDigraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Arc> arcs;
    std::vector<int> in(static_cast<std::size_t>(k + 1)), outd(static_cast<std::size_t>(k + 1));
    bool ok = true;
    for (std::size_t s = 0; s < slots.size() && ok; ++s) {
      if (!(mask >> s & 1))
        continue;
      auto [i, j] = slots[s];
      arcs.push_back({i, j, 0});
      ok = ++outd[i] <= 2 && ++in[j] <= 2;
    }
    if (!ok)
      continue;
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::pair<int, int>> best;
    do {
      std::vector<std::pair<int, int>> enc;
      for (auto &a : arcs)
        enc.emplace_back(perm[a.from - 1], perm[a.to - 1]);
      std::sort(enc.begin(), enc.end());
      if (best.empty() || enc < best)
        best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (classes.insert(best).second)
      out.emplace_back(k, arcs);
  }
  return out;
}

// ---- flagged PCDs ----

struct FlaggedPcd {
  Pcd pcd;
  int flag = 0; // chain index
};

inline FlaggedPcd flagged_dual(const MedialDigraph &d, const FlaggedPcd &fp)
{
  if (fp.flag < 0 || fp.flag >= static_cast<int>(fp.pcd.chains.size()))
    fail(ErrorKind::precondition, "flag does not index a chain");
  const Chain &f = fp.pcd.chains[fp.flag];
  int x = f.anchor;
  auto starting = [&](const Pcd &p) {
    std::vector<int> idx;
    for (int c = 0; c < static_cast<int>(p.chains.size()); ++c)
      if (p.chains[c].anchor == x)
        idx.push_back(c);
    return idx;
  };
  FlaggedPcd out{pcd_dual(d, fp.pcd), -1};
  auto here = starting(fp.pcd), there = starting(out.pcd);
  if (here.size() == 1) {
    if (there.size() != 1)
      fail(ErrorKind::defect, "dual has no unique chain at the flag vertex");
    out.flag = there[0];
    return out;
  }
  int other = -1;
  for (int k : d.out_arcs(x))
    if (f.arcs.empty() || f.arcs.front() != k)
      other = k;
  for (int c : there) {
    auto &ch = out.pcd.chains[c];
    if (other >= 0 ? (!ch.arcs.empty() && ch.arcs.front() == other) : ch.arcs.empty()) {
      out.flag = c;
      return out;
    }
  }
  fail(ErrorKind::defect, "no dual flag found");
}

} // namespace mindbody
