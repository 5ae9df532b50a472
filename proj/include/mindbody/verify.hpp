#pragma once

#include "mindbody/braid.hpp"
#include "mindbody/io.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace mindbody {

struct Failure {
  std::string check;
  Json payload;
};

struct RunReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::int64_t cases = 0;
  std::int64_t failure_count = 0;
  std::vector<Failure> failures; // the first few per check
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return failure_count == 0; }

  void absorb(const RunReport &o)
  {
    cases += o.cases;
    failure_count += o.failure_count;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }

  Json to_json() const
  {
    Json f = Json::array();
    for (auto &x : failures)
      f.push_back({{"check", x.check}, {"counterexample", x.payload}});
    return {{"suite", suite}, {"seed", seed},  {"cases", cases}, {"failure_count", failure_count}, {"failures", f},
            {"notes", notes}, {"seconds", seconds}};
  }
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  int random_cases = 10000;
  int max_n = 8;
  int max_m = 12;
  int exhaustive_n = 4;
  int exhaustive_m = 4;
  bool inject_fault = false; // test mode: corrupts the Garside word
};

namespace detail {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Transposition random_transposition(Rng &rng, int n)
{
  int a = uniform(rng, 1, n), b = uniform(rng, 1, n - 1);
  if (b >= a)
    ++b;
  return Transposition(a, b);
}

inline Factorization random_factorization(Rng &rng, int n, int m)
{
  std::vector<Transposition> f;
  for (int i = 0; i < m; ++i)
    f.push_back(random_transposition(rng, n));
  return Factorization(n, std::move(f));
}

inline Factorization random_factorization(Rng &rng, const VerifyOptions &o)
{
  return random_factorization(rng, uniform(rng, 2, std::max(2, o.max_n)), uniform(rng, 0, o.max_m));
}

inline int strands_of(const Factorization &rho) { return std::max(1, rho.length()); }

// a word that depends only on rho, so that shrinking keeps the property meaningful
inline BraidWord word_for(const Factorization &rho, int len)
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto &t : rho.factors())
    h = (h ^ static_cast<std::uint64_t>(t.s() * 31 + t.t())) * 1099511628211ull;
  Rng rng(h);
  int m = strands_of(rho);
  BraidWord w(m);
  if (m < 2)
    return w;
  for (int k = 0; k < len; ++k) {
    int i = uniform(rng, 1, m - 1);
    w.push(uniform(rng, 0, 1) ? sigma(i) : sigma_inv(i));
  }
  return w;
}

inline BraidWord garside_for(int m, const VerifyOptions &o)
{
  if (m < 2)
    return BraidWord(std::max(m, 1));
  BraidWord d = garside_word(m);
  if (o.inject_fault) {
    auto l = d.letters();
    l.pop_back();
    return BraidWord(m, l);
  }
  return d;
}

inline void for_each_factorization(int n, int m, const std::function<void(const Factorization &)> &visit)
{
  std::vector<Transposition> all;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      all.emplace_back(s, t);
  std::vector<Transposition> cur;
  auto rec = [&](auto &&self) -> void {
    if (static_cast<int>(cur.size()) == m) {
      visit(Factorization(n, cur));
      return;
    }
    for (auto &t : all) {
      cur.push_back(t);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

// greedy factor deletion while the property keeps failing
inline Factorization shrink(Factorization rho, const std::function<bool(const Factorization &)> &holds)
{
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < rho.length(); ++i) {
      auto f = rho.factors();
      f.erase(f.begin() + i);
      Factorization c(rho.degree(), f);
      bool still_fails = false;
      try {
        still_fails = !holds(c);
      } catch (const std::exception &) {
        still_fails = true;
      }
      if (still_fails) {
        rho = c;
        progress = true;
        break;
      }
    }
  }
  return rho;
}

class Checker {
public:
  explicit Checker(RunReport &r) : r_(r) {}

  void expect(bool ok, const std::string &check, const std::function<Json()> &payload)
  {
    ++r_.cases;
    if (ok)
      return;
    ++r_.failure_count;
    if (++per_check_[check] <= 3)
      r_.failures.push_back({check, payload()});
  }

  // property over factorizations: exhaustive small cases, then random ones; failures shrunk
  void factorization_property(const std::string &check, const VerifyOptions &o, Rng &rng,
                              const std::function<bool(const Factorization &)> &holds)
  {
    auto safe = [&](const Factorization &rho) {
      try {
        return holds(rho);
      } catch (const std::exception &) {
        return false;
      }
    };
    auto report = [&](const Factorization &rho) {
      expect(safe(rho), check, [&] {
        Factorization small = shrink(rho, safe);
        return Json{{"input", to_json(rho)}, {"shrunk", to_json(small)}};
      });
    };
    for (int n = 2; n <= o.exhaustive_n; ++n)
      for (int m = 0; m <= o.exhaustive_m; ++m)
        for_each_factorization(n, m, report);
    for (int k = 0; k < o.random_cases; ++k)
      report(random_factorization(rng, o));
  }

private:
  RunReport &r_;
  std::map<std::string, int> per_check_;
};

template <typename F>
RunReport timed(const std::string &name, const VerifyOptions &o, F body)
{
  RunReport r;
  r.suite = name;
  r.seed = o.seed;
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(o.seed ^ std::hash<std::string>{}(name));
  Checker c(r);
  body(c, rng, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // namespace detail

// Involution facts, both dual computations, Garside and dualizer duals, bar-dual, dual of a concatenation.
inline RunReport verify_involution(const VerifyOptions &o = {})
{
  return detail::timed("involution", o, [&](detail::Checker &c, detail::Rng &rng, RunReport &) {
    c.factorization_property("dual is an involution", o, rng,
                             [](const Factorization &r) { return dual_factorization(dual_factorization(r)) == r; });
    c.factorization_property("dual formula equals migt graph", o, rng,
                             [](const Factorization &r) { return dual_factorization(r) == dual_factorization_via_graph(r); });
    c.factorization_property("graph dual is an involution", o, rng, [](const Factorization &r) {
      auto g = from_factorization(r);
      return dual_graph(dual_graph(g)) == g;
    });
    c.factorization_property("monodromy of dual is inverse", o, rng, [](const Factorization &r) {
      auto g = from_factorization(r);
      return monodromy(dual_factorization(r)) == inverse(monodromy(r)) && monodromy(g) == monodromy(r);
    });
    c.factorization_property("star-trail exchange", o, rng, [](const Factorization &r) {
      auto g = from_factorization(r);
      auto gd = dual_graph(g);
      Leo leo = leo_of(g), leod = leo_of(gd);
      for (int v = 1; v <= g.vertex_count(); ++v) {
        auto trail = migt(leo, v).labels();
        std::sort(trail.begin(), trail.end());
        if (leod.at(v) != trail)
          return false;
        if (migt(leod, v).labels() != leo.at(v))
          return false;
      }
      return true;
    });
    c.factorization_property("ptdc is a non-singular double cover", o, rng, [](const Factorization &r) {
      Leo leo = leo_of(from_factorization(r));
      std::vector<Trail> ts;
      for (int v = 1; v <= leo.vertex_count(); ++v)
        ts.push_back(migt(leo, v));
      return !ptdc_violation(leo, Ptdc(ts));
    });
    c.factorization_property("reverse of Garside action is the dual", o, rng, [&](const Factorization &r) {
      return reverse(act(r, detail::garside_for(detail::strands_of(r), o))) == dual_factorization(r);
    });
    c.factorization_property("dualizer computes the dual", o, rng, [&](const Factorization &r) {
      int m = detail::strands_of(r);
      LoopBraidWord d = detail::garside_for(m, o);
      d.append(reversal_swaps(m));
      auto x = act(r, d);
      return x == dual_factorization(r) && act(x, d) == r;
    });
    c.factorization_property("bar-dual", o, rng, [&](const Factorization &r) {
      auto b = bar_dual(r);
      bool last = r.empty() || b.factors().back() == r.factors().back();
      return last && b == reverse(act(r, inverse(detail::garside_for(detail::strands_of(r), o)))) &&
             b == reverse(dual_factorization(reverse(r))) && bar_dual(b) == r;
    });
    c.factorization_property("dual of a concatenation", o, rng, [](const Factorization &r) {
      std::vector<Factorization> parts;
      auto &f = r.factors();
      std::size_t at = 0;
      for (std::size_t len = 1; at < f.size(); ++len) {
        std::size_t e = std::min(f.size(), at + len);
        parts.emplace_back(r.degree(), std::vector<Transposition>(f.begin() + static_cast<long>(at), f.begin() + static_cast<long>(e)));
        at = e;
      }
      if (parts.empty())
        return dual_factorization(r).empty();
      return dual_concat(parts) == dual_factorization(r);
    });
    c.factorization_property("graph bijection commutes with reverse and concat", o, rng, [](const Factorization &r) {
      auto g = from_factorization(r);
      auto h = from_factorization(dual_factorization(r));
      return to_factorization(g) == r && from_factorization(reverse(r)) == reverse(g) &&
             from_factorization(concat(r, dual_factorization(r))) == concat(g, h);
    });
  });
}

// Action identities: crossing reversal, reversal, the central Garside square, conjugation by
// the Garside element, star of the Garside word, pure braids keep monodromy.
inline RunReport verify_action_identities(const VerifyOptions &o = {})
{
  return detail::timed("identities", o, [&](detail::Checker &c, detail::Rng &rng, RunReport &) {
    c.factorization_property("dual of an action", o, rng, [](const Factorization &r) {
      auto w = detail::word_for(r, 8);
      return dual_factorization(act(r, w)) == act(dual_factorization(r), star_word(w));
    });
    c.factorization_property("reverse of an action", o, rng, [](const Factorization &r) {
      auto w = detail::word_for(r, 8);
      return reverse(act(r, w)) == act(reverse(r), reverse_word(w));
    });
    c.factorization_property("Garside square conjugates by the monodromy", o, rng, [&](const Factorization &r) {
      auto d = detail::garside_for(detail::strands_of(r), o);
      auto x = act(r, d * d);
      return x == conjugate_left(r, monodromy(r)) && isomorphic_e(from_factorization(x), from_factorization(r));
    });
    c.factorization_property("Garside conjugation flips generators", o, rng, [&](const Factorization &r) {
      int m = detail::strands_of(r);
      auto d = detail::garside_for(m, o);
      for (int i = 1; i < m; ++i)
        if (act(r, inverse(d) * BraidWord(m, {sigma(i)}) * d) != act(r, BraidWord(m, {sigma(m - i)})))
          return false;
      return true;
    });
    c.factorization_property("star and reverse of the Garside word invert it", o, rng, [&](const Factorization &r) {
      auto d = detail::garside_for(detail::strands_of(r), o);
      auto inv = act(r, inverse(d));
      return act(r, star_word(d)) == inv && act(r, reverse_word(d)) == inv;
    });
    c.factorization_property("braid action keeps the monodromy", o, rng, [](const Factorization &r) {
      return monodromy(act(r, detail::word_for(r, 12))) == monodromy(r);
    });
  });
}

// outer Garside word cabled with inner Garside words acts like the big Garside word
inline RunReport verify_operad(const VerifyOptions &o = {}, int max_total = 7, int per_composition = 100)
{
  return detail::timed("operad", o, [&](detail::Checker &c, detail::Rng &rng, RunReport &r) {
    int compositions = 0;
    std::vector<int> widths;
    auto rec = [&](auto &&self, int rem) -> void {
      if (!widths.empty()) {
        ++compositions;
        int total = std::accumulate(widths.begin(), widths.end(), 0);
        std::vector<BraidWord> inner;
        for (int w : widths)
          inner.push_back(w >= 2 ? garside_word(w) : BraidWord(w));
        int k = static_cast<int>(widths.size());
        BraidWord outer = k >= 2 ? garside_word(k) : BraidWord(1);
        BraidWord cabled = operad_compose(outer, inner);
        BraidWord big = detail::garside_for(total, o);
        for (int t = 0; t < per_composition; ++t) {
          auto rho = detail::random_factorization(rng, detail::uniform(rng, 2, std::max(2, o.max_n)), total);
          c.expect(act(rho, cabled) == act(rho, big), "cabled Garside word", [&] {
            return Json{{"widths", widths}, {"input", to_json(rho)}, {"cabled", to_string(cabled)}};
          });
        }
      }
      for (int x = 1; x <= rem; ++x) {
        widths.push_back(x);
        self(self, rem - x);
        widths.pop_back();
      }
    };
    rec(rec, max_total);
    r.notes.push_back(std::to_string(compositions) + " width compositions with sum <= " + std::to_string(max_total));
  });
}

inline RunReport verify_garside(const VerifyOptions &o = {})
{
  RunReport r = verify_action_identities(o);
  r.suite = "garside";
  r.absorb(verify_operad(o));
  return r;
}

// braid and loop braid relations as action equalities
inline RunReport verify_braid_relations(const VerifyOptions &o = {})
{
  return detail::timed("braid-relations", o, [&](detail::Checker &c, detail::Rng &rng, RunReport &) {
    for (int k = 0; k < o.random_cases; ++k) {
      int m = detail::uniform(rng, 3, std::max(3, std::min(o.max_m, 10)));
      auto rho = detail::random_factorization(rng, detail::uniform(rng, 2, std::max(2, o.max_n)), m);
      int i = detail::uniform(rng, 1, m - 2);
      int j = detail::uniform(rng, 1, m - 1);
      auto A = [&](std::vector<Letter> l) { return act(rho, LoopBraidWord(m, std::move(l))); };
      auto payload = [&] { return Json{{"input", to_json(rho)}, {"i", i}, {"j", j}}; };
      bool far = std::abs(i - j) > 1;
      c.expect(!far || A({sigma(i), sigma(j)}) == A({sigma(j), sigma(i)}), "far generators commute", payload);
      c.expect(!far || A({sigma(i), sigma_inv(j)}) == A({sigma_inv(j), sigma(i)}), "far generator and inverse commute", payload);
      c.expect(A({sigma(i), sigma(i + 1), sigma(i)}) == A({sigma(i + 1), sigma(i), sigma(i + 1)}), "braid relation", payload);
      c.expect(A({sigma(j), sigma_inv(j)}) == rho && A({sigma_inv(j), sigma(j)}) == rho, "inverse letters cancel", payload);
      c.expect(A({swap_letter(j), swap_letter(j)}) == rho, "swap squares to one", payload);
      c.expect(!far || A({swap_letter(i), swap_letter(j)}) == A({swap_letter(j), swap_letter(i)}), "far swaps commute", payload);
      c.expect(A({swap_letter(i), swap_letter(i + 1), swap_letter(i)}) == A({swap_letter(i + 1), swap_letter(i), swap_letter(i + 1)}),
               "swap braid relation", payload);
      c.expect(!far || A({sigma(i), swap_letter(j)}) == A({swap_letter(j), sigma(i)}), "far mixed letters commute", payload);
      c.expect(A({swap_letter(i), swap_letter(i + 1), sigma(i)}) == A({sigma(i + 1), swap_letter(i), swap_letter(i + 1)}),
               "mixed relation s s sigma", payload);
      c.expect(A({sigma(i), sigma(i + 1), swap_letter(i)}) == A({swap_letter(i + 1), sigma(i), sigma(i + 1)}),
               "mixed relation sigma sigma s", payload);
    }
  });
}

// medial digraphs, chain decompositions and the counting lemma
inline RunReport verify_medial(const VerifyOptions &o = {})
{
  return detail::timed("medial", o, [&](detail::Checker &c, detail::Rng &rng, RunReport &r) {
    int cases = std::max(1, o.random_cases / 10);
    for (int k = 0; k < cases; ++k) {
      auto rho = detail::random_factorization(rng, o);
      auto g = from_factorization(rho);
      auto payload = [&] { return Json{{"input", to_json(rho)}}; };
      auto gd = dual_graph(g);
      MedialDigraph d = medial_digraph(g), dd = medial_digraph(gd);
      auto pairs = d.arc_pairs(), pairs_d = dd.arc_pairs();
      std::sort(pairs.begin(), pairs.end());
      std::sort(pairs_d.begin(), pairs_d.end());
      c.expect(pairs == pairs_d, "dual has the same medial digraph", payload);
      c.expect(is_acyclic(d), "medial digraph of an e-graph is a dag", payload);
      c.expect(d.is_binary(), "medial digraph is binary", payload);
      int active = 0;
      for (int x : g.degrees())
        active += x > 0;
      // isolated vertices of the graph have no medial counterpart
      c.expect(euler_characteristic(d) == active - g.edge_count(), "medial Euler characteristic", payload);
      Pcd leo_pcd = pcd_from_leo(leo_of(g), d), ptdc_pcd = pcd_from_ptdc(leo_of(g), d);
      bool valid = g.edge_count() == 0 || (!pcd_violation(d, leo_pcd) && !pcd_violation(d, ptdc_pcd));
      c.expect(valid, "leo and ptdc chains are PCDs", payload);
      int expected_chains = 2 * d.vertex_count() - d.arc_count();
      c.expect(g.edge_count() == 0 || static_cast<int>(leo_pcd.chains.size()) == expected_chains, "chain count 2m - l", payload);
      if (g.edge_count() == 0)
        continue;
      Pcd dual_pcd = pcd_dual(d, leo_pcd);
      c.expect(normalized(ptdc_pcd) == dual_pcd, "ptdc chains are the dual of the leo chains", payload);
      c.expect(chain_sequences(dd, pcd_from_leo(leo_of(gd), dd)) == chain_sequences(d, dual_pcd), "leo chains of the dual graph", payload);
      c.expect(pcd_dual(d, dual_pcd) == normalized(leo_pcd), "pcd dual is an involution", payload);
      c.expect(selector_of(d, dual_pcd) == flipped(selector_of(d, leo_pcd)), "pcd dual flips every bit", payload);
      if (d.internal_count() <= 8) {
        std::set<std::string> distinct; // parallel arcs: compare the arcs, not the vertex sequences
        bool all_valid = true;
        for (auto &s : all_selectors(d)) {
          Pcd p = pcd_from_selector(d, s);
          all_valid = all_valid && !pcd_violation(d, p) && selector_of(d, p) == s;
          distinct.insert(to_json(normalized(p)).dump());
        }
        c.expect(all_valid && distinct.size() == (std::size_t{1} << d.internal_count()), "2^iota chain decompositions", payload);
      }
    }
    for (int k = 1; k <= 5; ++k) {
      for (auto &d : binary_dags(k)) {
        auto arcs_json = [&] { return Json{{"dag", to_json(d)}}; };
        auto cnt = count_egraphs_of_dag(d);
        c.expect(cnt.agree(), "e-graph count formula", [&] {
          return Json{{"dag", to_json(d)}, {"iota", cnt.iota}, {"tau", cnt.tau}, {"alpha", cnt.alpha}, {"brute", cnt.brute}};
        });
        if (k > 4)
          continue;
        auto sorts = topological_sorts(d);
        for (auto &s : all_selectors(d)) {
          Pcd p = pcd_from_selector(d, s);
          for (auto &t : sorts) {
            auto g = egraph_from_pcd(d, p, t);
            MedialDigraph back = medial_digraph(g), want = relabel_by_sort(d, t);
            auto a = back.arc_pairs(), b = want.arc_pairs();
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            c.expect(a == b, "medial digraph of a reconstructed e-graph", arcs_json);
            std::vector<int> pos(static_cast<std::size_t>(d.vertex_count()));
            for (int q = 0; q < static_cast<int>(t.size()); ++q)
              pos[t[q] - 1] = q + 1;
            auto mapped = chain_sequences(d, p);
            for (auto &ch : mapped)
              for (int &x : ch)
                x = pos[x - 1];
            std::sort(mapped.begin(), mapped.end());
            c.expect(chain_sequences(back, pcd_from_leo(leo_of(g), back)) == mapped, "leo chains of a reconstructed e-graph",
                     arcs_json);
          }
          for (int f = 0; f < static_cast<int>(p.chains.size()); ++f) {
            auto q = flagged_dual(d, {p, f});
            auto back = flagged_dual(d, q);
            c.expect(back.pcd == p && back.pcd.chains[back.flag] == p.chains[f], "flagged dual is an involution", arcs_json);
          }
        }
      }
    }
    r.notes.push_back("binary dags up to isomorphism with 1..5 vertices");
  });
}

// n^{n-2} minimal factorizations and the self-dual e-tree counts
inline RunReport verify_counts(const VerifyOptions &o = {})
{
  return detail::timed("counts", o, [&](detail::Checker &c, detail::Rng &, RunReport &r) {
    for (int n = 2; n <= 6; ++n) {
      auto mf = enumerate_minimal_factorizations(zeta0(n));
      std::int64_t want = 1;
      for (int k = 0; k < n - 2; ++k)
        want *= n;
      c.expect(mf.agree && mf.tree_count == want && mf.brute_count == want, "n^(n-2) minimal factorizations",
               [&] { return Json{{"n", n}, {"tree", mf.tree_count}, {"brute", mf.brute_count}}; });
      r.notes.push_back("minimal factorizations n=" + std::to_string(n) + ": " + std::to_string(mf.tree_count));
    }
    auto e = euler_updown(8);
    for (int n = 3; n <= 7; ++n) {
      auto s = enumerate_selfdual_etrees(n);
      auto want = e[static_cast<std::size_t>(n - 1)];
      c.expect(s.filter == want && s.construct == want && s.rooted_filter == want && s.rooted_construct == want,
               "self-dual e-trees are counted by up/down numbers", [&] {
                 return Json{{"n", n}, {"filter", s.filter}, {"construct", s.construct}, {"rooted_filter", s.rooted_filter},
                             {"rooted_construct", s.rooted_construct}, {"updown", want}};
               });
      r.notes.push_back("self-dual e-trees n=" + std::to_string(n) + ": " + std::to_string(s.filter));
    }
  });
}

// tree bijections and their statistics
inline RunReport verify_trees(const VerifyOptions &o = {})
{
  return detail::timed("trees", o, [&](detail::Checker &c, detail::Rng &rng, RunReport &r) {
    for (int n = 2; n <= 6; ++n) {
      auto z = zeta0(n);
      auto zi = inverse(z);
      std::set<VTree> images;
      int literal_misses = 0, total = 0;
      for (auto &rho : enumerate_minimal_factorizations(z).list) {
        auto payload = [&] { return Json{{"input", to_json(rho)}}; };
        ++total;
        auto t = f_zeta(rho, z);
        c.expect(f_zeta_inverse(t, z) == rho, "f_zeta round trip", payload);
        auto rd = rooted_dual(t);
        c.expect(f_zeta_inverse(rd, zi) == dual_factorization(rho), "rooted dual commutes with the factorization dual", payload);
        VTree v = phi(rho);
        images.insert(v);
        c.expect(difference_distribution(rho) == edge_deletion_distribution(v), "difference index vs edge deletion", payload);
        auto d = degree_distribution(rho);
        c.expect(d == slid_trail_distribution(v), "degrees vs slid migt lengths", payload);
        literal_misses += d != path_length_distribution(v);
      }
      c.expect(static_cast<int>(images.size()) == total, "phi is injective", [&] { return Json{{"n", n}}; });
      r.notes.push_back("n=" + std::to_string(n) + ": greedy neighbour walk differs from the degree distribution on " +
                        std::to_string(literal_misses) + "/" + std::to_string(total));
      for (auto &t : rooted_etrees(n)) {
        auto payload = [&] { return Json{{"tree", to_json(t.tree)}, {"root", t.root}}; };
        c.expect(isomorphic(sliding_S_inverse(sliding_S(t)), t), "sliding round trip", payload);
        c.expect(isomorphic(rooted_dual(rooted_dual(t)), t), "rooted dual is an involution", payload);
        MedialDigraph d = medial_digraph(t.tree);
        Pcd p = pcd_from_leo(leo_of(t.tree), d);
        auto q = flagged_dual(d, {p, t.root - 1});
        auto rd = rooted_dual(t);
        MedialDigraph dd = medial_digraph(rd.tree);
        Pcd pd = pcd_from_leo(leo_of(rd.tree), dd);
        c.expect(chain_vertices(d, q.pcd.chains[q.flag]) == chain_vertices(dd, pd.chains[rd.root - 1]) &&
                     chain_sequences(d, q.pcd) == chain_sequences(dd, pd),
                 "flagged dual is the rooted dual", payload);
      }
    }
    for (int k = 0; k < o.random_cases; ++k) {
      int n = detail::uniform(rng, 2, 7);
      auto rho = detail::random_factorization(rng, n, n - 1);
      bool tree = graph_stats(from_factorization(rho)).is_tree, cyc = is_full_cycle(monodromy(rho));
      c.expect(tree == cyc, "tree iff full-cycle monodromy", [&] { return Json{{"input", to_json(rho)}}; });
    }
  });
}

namespace detail {
inline RotationSystem random_rotation_system(Rng &rng, int n, int m)
{
  auto rho = random_factorization(rng, n, m);
  auto g = from_factorization(rho);
  auto rs = completion(g);
  auto rot = rs.rotations();
  for (auto &c : rot)
    std::shuffle(c.begin(), c.end(), rng);
  return RotationSystem(n, rs.edges(), std::move(rot));
}
} // namespace detail

inline RunReport verify_surfaces(const VerifyOptions &o = {})
{
  return detail::timed("surfaces", o, [&](detail::Checker &c, detail::Rng &rng, RunReport &r) {
    Factorization fig1(4, {{3, 4}, {1, 3}, {1, 2}, {3, 4}, {2, 3}});
    auto p = peg_invariants(from_factorization(fig1));
    c.expect(p.chi == -1 && p.b == 1 && p.genus_total == 1, "torus with one hole", [] { return Json::object(); });
    int cases = std::max(1, o.random_cases / 10);
    for (int k = 0; k < cases; ++k) {
      auto rho = detail::random_factorization(rng, detail::uniform(rng, 2, 6), detail::uniform(rng, 0, 9));
      auto g = from_factorization(rho);
      auto payload = [&] { return Json{{"input", to_json(rho)}}; };
      auto inv = peg_invariants(g);
      c.expect(inv.b <= g.vertex_count() && ((inv.b - inv.chi) % 2 + 2) % 2 == 0, "b <= n and b = chi mod 2", payload);
      auto invd = peg_invariants(dual_graph(g));
      auto cyc = cycles(inverse(monodromy(rho)), true);
      c.expect(invd.chi == inv.chi && invd.b == inv.b && invd.genus == inv.genus && invd.boundary_cycles == cyc,
               "dual peg invariants", payload);
      auto rs = completion(g);
      auto top = ceg_topology(rs);
      c.expect(top.genus == inv.genus_total, "completion keeps the genus", payload);
      auto peg = peggable(rs);
      c.expect(peg.has_value() && ceg_isomorphic_labeled(completion(*peg), relabel_edges(rs, new_labels_of_sort(diverse_fas(rs)->sort))),
               "completions are peggable", payload);
      try {
        c.expect(ceg_isomorphic_labeled(dual_ceg(dual_ceg(rs)), rs), "dual ceg is an involution", payload);
      } catch (const Error &) {
        // a face meeting itself along an edge gives a loop, outside the model
      }
      if (rho.length() >= 1) {
        int e = detail::uniform(rng, 1, rho.length());
        std::vector<int> free;
        for (int v = 1; v <= rho.degree(); ++v)
          if (!rho[e].moves(v))
            free.push_back(v);
        if (!free.empty()) {
          int v = free[static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(free.size()) - 1))];
          c.expect(monodromy(t_operation(rho, v, e)) == monodromy(rho), "T-operation keeps the monodromy", payload);
        }
      }
      if (monodromy(rho).is_identity()) {
        c.expect(ceg_isomorphic_labeled(dual_ceg(rs), mirrored(completion(dual_graph(g)))), "dual of a closed completion", payload);
        auto x = concat(rho, dual_factorization(rho));
        c.expect(selfdual_check(ceg_of_identity_factorization(x)), "rho rho* is self-dual", payload);
      }
      auto wild = detail::random_rotation_system(rng, detail::uniform(rng, 2, 5), detail::uniform(rng, 1, 7));
      auto sub = subdivide_to_peggable_traced(wild);
      c.expect(peggable(sub.result).has_value() && ceg_topology(sub.result).genus == ceg_topology(wild).genus,
               "subdivision reaches a peggable ceg", [&] { return to_json(wild); });
    }
    int realized = 0;
    for (int n = 1; n <= 8; ++n) {
      std::vector<int> l;
      auto rec = [&](auto &&self, int rem, int mx) -> void {
        if (rem == 0) {
          bool adm = admissible_kn_type(n, l);
          bool ok = false;
          try {
            auto rho = realize_kn_type(n, l);
            ok = adm && is_complete_graph(from_factorization(rho)) && cycle_type(monodromy(rho)) == l;
          } catch (const Error &e) {
            ok = !adm && e.kind() == ErrorKind::infeasible_type;
          }
          realized += adm;
          c.expect(ok, "complete graph monodromy realization", [&] { return Json{{"n", n}, {"type", l}}; });
          return;
        }
        for (int k = std::min(rem, mx); k >= 1; --k) {
          l.push_back(k);
          self(self, rem - k, k);
          l.pop_back();
        }
      };
      rec(rec, n, n);
    }
    r.notes.push_back(std::to_string(realized) + " admissible cycle types realized on K_1..K_8");
  });
}

inline const std::vector<std::string> &suite_names()
{
  static const std::vector<std::string> names{"involution", "braid-relations", "garside", "medial", "counts", "trees", "surfaces", "all"};
  return names;
}

inline RunReport run_suite(const std::string &name, const VerifyOptions &o = {})
{
  if (name == "involution")
    return verify_involution(o);
  if (name == "braid-relations")
    return verify_braid_relations(o);
  if (name == "garside")
    return verify_garside(o);
  if (name == "medial")
    return verify_medial(o);
  if (name == "counts")
    return verify_counts(o);
  if (name == "trees")
    return verify_trees(o);
  if (name == "surfaces")
    return verify_surfaces(o);
  if (name == "all") {
    RunReport all;
    all.suite = "all";
    all.seed = o.seed;
    for (auto &s : suite_names())
      if (s != "all") {
        auto r = run_suite(s, o);
        all.absorb(r);
        all.seconds += r.seconds;
      }
    return all;
  }
  fail(ErrorKind::precondition, "unknown suite '" + name + "'");
}

} // namespace mindbody
