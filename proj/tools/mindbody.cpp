#include "mindbody/mindbody.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

using namespace mindbody;

namespace {

// exit codes
constexpr int ok_code = 0, check_failed = 1, usage = 2;

struct Input {
  std::string path = "-";
  std::string inline_json;

  Json read() const
  {
    std::string text;
    if (!inline_json.empty()) {
      text = inline_json;
    } else if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(path);
      if (!f)
        fail(ErrorKind::parse, "cannot open " + path);
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error &e) {
      // e.byte carries the location
      fail(ErrorKind::parse, std::string("bad JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
  }
};

void add_input(CLI::App *c, Input &in)
{
  c->add_option("-i,--input", in.path, "JSON file, - for stdin")->capture_default_str();
  c->add_option("-j,--json", in.inline_json, "JSON given inline");
}

void emit(const Json &j) { std::cout << j.dump() << "\n"; }

std::vector<int> parse_int_list(const std::string &s)
{
  std::vector<int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ','))
    if (!tok.empty()) {
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception &) {
        fail(ErrorKind::parse, "bad integer '" + tok + "'");
      }
    }
  return out;
}

bool is_rotation_json(const Json &j) { return j.is_object() && j.contains("rotations"); }
bool is_medial_json(const Json &j) { return j.is_object() && j.contains("arcs") && j.contains("vertices"); }

RotationSystem ceg_from(const Json &j)
{
  if (is_rotation_json(j))
    return rotation_system_from_json(j);
  return completion(from_factorization(factorization_or_graph(j)));
}

Json pcd_report(const EdgeLabeledGraph &g)
{
  MedialDigraph d = medial_digraph(g);
  Leo leo = leo_of(g);
  Pcd a = pcd_from_leo(leo, d), b = pcd_from_ptdc(leo, d);
  return {{"medial", to_json(d)},
          {"leo", to_json(a)},
          {"ptdc", to_json(b)},
          {"selector", selector_of(d, a).bits},
          {"dual_selector", selector_of(d, b).bits}};
}

int run_verify(const std::string &suite, const VerifyOptions &o)
{
  RunReport r = run_suite(suite, o);
  emit(r.to_json());
  return r.ok() ? ok_code : check_failed;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"mind-body duality toolkit"};
  app.require_subcommand(1);
  Input in;
  int code = ok_code;
  std::function<void()> action;

  // dual
  bool bar = false, both = false;
  auto *dual = app.add_subcommand("dual", "mind-body dual of a factorization or e-graph");
  add_input(dual, in);
  dual->add_flag("--bar", bar, "suffix-conjugation variant");
  dual->add_flag("--graph", both, "also compute through the migt graph and compare");
  dual->callback([&] {
    action = [&] {
      Json j = in.read();
      bool graph_in = j.contains("edges");
      Factorization rho = factorization_or_graph(j);
      if (bar) {
        emit({{"bar_dual", to_json(bar_dual(rho))}});
        return;
      }
      Factorization d = dual_factorization(rho);
      Json out{{"dual", to_json(d)}};
      if (graph_in) {
        EdgeLabeledGraph g = graph_from_json(j);
        out["dual_graph"] = to_json(dual_graph(g.with_mode(LabelMode::EV)));
      }
      if (both) {
        Factorization v = dual_factorization_via_graph(rho);
        out["via_graph"] = to_json(v);
        out["agree"] = v == d;
        if (v != d)
          code = check_failed;
      }
      emit(out);
    };
  });

  // monodromy
  auto *mono = app.add_subcommand("monodromy", "monodromy, migts and trail matching");
  add_input(mono, in);
  mono->callback([&] {
    action = [&] {
      Factorization rho = factorization_or_graph(in.read());
      auto g = from_factorization(rho);
      Leo leo = leo_of(g);
      Json match = Json::array();
      for (auto [v, u] : trail_matching(leo))
        match.push_back({{"forward", v}, {"backward", u}});
      Permutation mu = monodromy(rho);
      emit({{"monodromy", to_string(mu)}, {"images", mu.images()}, {"cycle_type", cycle_type(mu)},
            {"migts", to_json(ptdc_of(leo))}, {"matching", match}});
    };
  });

  // act
  std::string word;
  bool garside = false, dualizer = false;
  auto *act_cmd = app.add_subcommand("act", "right action of a (loop) braid word: s<i>, S<i> inverse, p<i> swap");
  add_input(act_cmd, in);
  act_cmd->add_option("-w,--word", word, "letters separated by spaces");
  act_cmd->add_flag("--garside", garside, "act by the Garside word");
  act_cmd->add_flag("--dualizer", dualizer, "act by the dualizer");
  act_cmd->callback([&] {
    action = [&] {
      Factorization rho = factorization_or_graph(in.read());
      int m = std::max(1, rho.length());
      LoopBraidWord w = parse_loop_word(word, m);
      if (garside)
        w = garside_word(m);
      if (dualizer)
        w = dualizer_word(m);
      emit({{"word", to_string(w)}, {"result", to_json(act(rho, w))}});
    };
  });

  // medial
  auto *med = app.add_subcommand("medial", "medial digraph of an e-graph");
  add_input(med, in);
  med->callback([&] {
    action = [&] {
      auto g = from_factorization(factorization_or_graph(in.read()));
      MedialDigraph d = medial_digraph(g);
      emit({{"medial", to_json(d)}, {"acyclic", is_acyclic(d)}, {"euler_characteristic", euler_characteristic(d)},
            {"internal", d.internal_count()}});
    };
  });

  // pcd
  std::string selector_text;
  auto *pcd = app.add_subcommand("pcd", "perfect chain decompositions");
  add_input(pcd, in);
  pcd->add_option("--selector", selector_text, "with a medial digraph input: bits for the internal vertices, e.g. 0110");
  pcd->callback([&] {
    action = [&] {
      Json j = in.read();
      if (!is_medial_json(j)) {
        emit(pcd_report(from_factorization(factorization_or_graph(j))));
        return;
      }
      MedialDigraph d = medial_from_json(j);
      Selector s;
      s.bits.assign(static_cast<std::size_t>(d.vertex_count()), -1);
      std::size_t k = 0;
      for (int x = 1; x <= d.vertex_count(); ++x) {
        if (d.in_arcs(x).empty() || d.out_arcs(x).empty())
          continue;
        if (k >= selector_text.size())
          fail(ErrorKind::selector_domain, "selector needs one bit per internal vertex");
        s.bits[static_cast<std::size_t>(x - 1)] = selector_text[k++] == '1';
      }
      if (k != selector_text.size())
        fail(ErrorKind::selector_domain, "selector needs one bit per internal vertex");
      Pcd p = pcd_from_selector(d, s);
      emit({{"pcd", to_json(p)}, {"dual", to_json(pcd_dual(d, p))}});
    };
  });

  // peg-invariants
  auto *peg = app.add_subcommand("peg-invariants", "chi, boundary count and genus of the peg");
  add_input(peg, in);
  peg->callback([&] { action = [&] { emit(to_json(peg_invariants(from_factorization(factorization_or_graph(in.read()))))); }; });

  // peggable
  bool subdivide = false;
  auto *pegg = app.add_subcommand("peggable", "diverse FAS search on a ceg (rotation system or completion of an e-graph)");
  add_input(pegg, in);
  pegg->add_flag("--subdivide", subdivide, "subdivide until peggable first");
  pegg->callback([&] {
    action = [&] {
      RotationSystem rs = ceg_from(in.read());
      Json out = Json::object();
      if (subdivide) {
        auto s = subdivide_to_peggable_traced(rs);
        out["subdivided_edges"] = s.subdivided_edges;
        out["rounds"] = s.rounds;
        out["ceg"] = to_json(s.result);
        rs = s.result;
      }
      auto fas = diverse_fas(rs);
      out["peggable"] = fas.has_value();
      if (fas) {
        MedialDigraph d = medial_digraph_ceg(rs);
        Json arcs = Json::array();
        for (int k : fas->arcs)
          arcs.push_back({{"from", d.arc(k).from}, {"to", d.arc(k).to}, {"color", d.arc(k).color}});
        out["fas"] = arcs;
        out["sort"] = fas->sort;
        out["labeling"] = to_json(labeling_from_sort(rs, fas->sort));
      }
      emit(out);
    };
  });

  // realize-kn
  int n = 0;
  std::string type_text;
  auto *real = app.add_subcommand("realize-kn", "labelling of K_n with a given monodromy cycle type");
  real->add_option("-n,--n", n, "order")->required();
  real->add_option("-t,--type", type_text, "cycle type, e.g. 3,2")->required();
  real->callback([&] {
    action = [&] {
      auto lambda = parse_int_list(type_text);
      Factorization rho = realize_kn_type(n, lambda);
      emit({{"factorization", to_json(rho)}, {"monodromy", to_string(monodromy(rho))}});
    };
  });

  // selfdual-check
  auto *sd = app.add_subcommand("selfdual-check", "is the closed ceg isomorphic to its dual");
  add_input(sd, in);
  sd->callback([&] {
    action = [&] {
      Json j = in.read();
      RotationSystem rs = is_rotation_json(j) ? rotation_system_from_json(j) : ceg_of_identity_factorization(factorization_or_graph(j));
      emit({{"selfdual", selfdual_check(rs)}, {"topology", {{"genus", ceg_topology(rs).genus}, {"faces", ceg_topology(rs).f}}}});
    };
  });

  // phi
  auto *ph = app.add_subcommand("phi", "vertex-labelled tree of a minimal factorization of (n ... 2 1)");
  add_input(ph, in);
  ph->callback([&] {
    action = [&] {
      Factorization rho = factorization_or_graph(in.read());
      VTree t = phi(rho);
      emit({{"tree", to_json(t)},
            {"difference", distribution_json(difference_distribution(rho))},
            {"edge_deletion", distribution_json(edge_deletion_distribution(t))},
            {"degree", distribution_json(degree_distribution(rho))},
            {"path_length", distribution_json(path_length_distribution(t))}});
    };
  });

  // stats
  std::string kind = "diff";
  int stats_n = 0;
  auto *st = app.add_subcommand("stats", "distribution of one statistic, for one input or over all minimal factorizations of size n");
  add_input(st, in);
  st->add_option("-k,--kind", kind, "diff|edel|deg|plen")->check(CLI::IsMember({"diff", "edel", "deg", "plen"}));
  st->add_option("-n,--n", stats_n, "aggregate over the whole population");
  st->callback([&] {
    action = [&] {
      auto one = [&](const Factorization &rho) {
        if (kind == "diff")
          return difference_distribution(rho);
        if (kind == "deg")
          return degree_distribution(rho);
        VTree t = phi(rho);
        return kind == "edel" ? edge_deletion_distribution(t) : path_length_distribution(t);
      };
      Distribution total;
      if (stats_n > 0) {
        auto mf = enumerate_minimal_factorizations(zeta0(stats_n));
        for (auto &rho : mf.list) {
          auto d = one(rho);
          total.resize(std::max(total.size(), d.size()), 0);
          for (std::size_t i = 0; i < d.size(); ++i)
            total[i] += d[i];
        }
      } else {
        total = one(factorization_or_graph(in.read()));
      }
      emit({{"kind", kind}, {"distribution", distribution_json(total)}});
    };
  });

  // enum-minfacts
  int mf_n = 4;
  std::string zeta_text, format = "json";
  bool list = false;
  auto *em = app.add_subcommand("enum-minfacts", "minimal factorizations of an n-cycle");
  em->add_option("-n,--n", mf_n, "degree")->capture_default_str();
  em->add_option("--zeta", zeta_text, "the cycle, default (n ... 2 1)");
  em->add_flag("--list", list, "print the factorizations");
  em->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  em->callback([&] {
    action = [&] {
      Permutation z = zeta_text.empty() ? zeta0(mf_n) : parse_permutation(zeta_text, mf_n);
      auto mf = enumerate_minimal_factorizations(z);
      if (format == "csv") {
        std::cout << "n,tree_count,brute_count,agree\n"
                  << mf_n << "," << mf.tree_count << "," << mf.brute_count << "," << (mf.agree ? "true" : "false") << "\n";
        if (list)
          for (auto &rho : mf.list)
            std::cout << to_string(rho) << "\n";
      } else {
        Json out{{"n", mf_n}, {"zeta", to_string(z)}, {"tree_count", mf.tree_count}, {"brute_count", mf.brute_count}, {"agree", mf.agree}};
        if (list) {
          Json l = Json::array();
          for (auto &rho : mf.list)
            l.push_back(to_json(rho));
          out["list"] = l;
        }
        emit(out);
      }
      code = mf.agree ? ok_code : check_failed;
    };
  });

  // enum-selfdual
  int sd_n = 5;
  bool rooted = false, witnesses = false;
  auto *es = app.add_subcommand("enum-selfdual", "self-dual e-trees, by filtering and by zigzag construction");
  es->add_option("-n,--n", sd_n, "number of vertices")->capture_default_str();
  es->add_flag("--rooted", rooted, "also count rooted self-dual e-trees");
  es->add_flag("--witnesses", witnesses, "print the trees");
  es->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  es->callback([&] {
    action = [&] {
      auto s = enumerate_selfdual_etrees(sd_n, rooted);
      bool agree = s.filter == s.construct && (!rooted || s.rooted_filter == s.rooted_construct);
      if (format == "csv") {
        std::cout << "n,filter,construct" << (rooted ? ",rooted_filter,rooted_construct" : "") << "\n"
                  << sd_n << "," << s.filter << "," << s.construct;
        if (rooted)
          std::cout << "," << s.rooted_filter << "," << s.rooted_construct;
        std::cout << "\n";
      } else {
        Json out{{"n", sd_n}, {"filter", s.filter}, {"construct", s.construct}, {"agree", agree}};
        if (rooted) {
          out["rooted_filter"] = s.rooted_filter;
          out["rooted_construct"] = s.rooted_construct;
        }
        if (witnesses) {
          Json w = Json::array();
          for (auto &g : s.witnesses)
            w.push_back(to_json(g));
          out["witnesses"] = w;
        }
        emit(out);
      }
      code = agree ? ok_code : check_failed;
    };
  });

  // verify
  std::string suite = "all";
  VerifyOptions vo;
  auto *ver = app.add_subcommand("verify", "run an identity suite");
  ver->add_option("suite", suite, "involution|braid-relations|garside|medial|counts|trees|surfaces|all")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  ver->add_option("--seed", vo.seed, "random seed")->capture_default_str();
  ver->add_option("--cases", vo.random_cases, "random cases per property")->capture_default_str();
  ver->add_option("--max-n", vo.max_n, "largest degree")->capture_default_str();
  ver->add_option("--max-m", vo.max_m, "longest factorization")->capture_default_str();
  ver->add_flag("--inject-fault", vo.inject_fault, "harness self-test: corrupt the Garside word");
  ver->callback([&] { action = [&] { code = run_verify(suite, vo); }; });

  // export
  std::string fmt = "dot", what = "auto";
  auto *ex = app.add_subcommand("export", "DOT or normalized JSON of a graph, medial digraph or ceg");
  add_input(ex, in);
  ex->add_option("-f,--format", fmt, "dot|json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  ex->add_option("--as", what, "auto|graph|medial|ceg")->check(CLI::IsMember({"auto", "graph", "medial", "ceg"}))->capture_default_str();
  ex->callback([&] {
    action = [&] {
      Json j = in.read();
      auto out = [&](const auto &obj) {
        if (fmt == "dot")
          std::cout << to_dot(obj);
        else
          emit(to_json(obj));
      };
      if (is_rotation_json(j)) {
        if (what != "auto" && what != "ceg")
          fail(ErrorKind::unsupported, "a rotation system exports only as a ceg");
        out(rotation_system_from_json(j));
      } else if (is_medial_json(j)) {
        if (what != "auto" && what != "medial")
          fail(ErrorKind::unsupported, "a medial digraph exports only as itself");
        out(medial_from_json(j));
      } else {
        EdgeLabeledGraph g = j.contains("edges") ? graph_from_json(j) : from_factorization(factorization_from_json(j));
        if (what == "medial")
          out(medial_digraph(g));
        else if (what == "ceg")
          out(completion(g));
        else
          out(g);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int r = app.exit(e);
    return r == 0 ? ok_code : usage;
  }
  try {
    action();
  } catch (const Error &e) {
    std::cerr << Json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return e.kind() == ErrorKind::defect ? check_failed : usage;
  } catch (const std::exception &e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return check_failed;
  }
  return code;
}
