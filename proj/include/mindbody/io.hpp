#pragma once

#include "mindbody/surface.hpp"
#include "mindbody/trees.hpp"

#include <json.hpp>

#include <map>

namespace mindbody {

using Json = nlohmann::json;

namespace detail {

inline const Json &field(const Json &j, const char *key, const char *what)
{
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::parse, std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

inline int as_int(const Json &j, const std::string &where)
{
  if (!j.is_number_integer())
    fail(ErrorKind::parse, where + ": expected an integer");
  return j.get<int>();
}

inline std::pair<int, int> as_pair(const Json &j, const std::string &where)
{
  if (!j.is_array() || j.size() != 2)
    fail(ErrorKind::parse, where + ": expected a pair");
  return {as_int(j[0], where), as_int(j[1], where)};
}

} // namespace detail

// ---- factorizations and graphs ----

inline Json to_json(const Factorization &rho)
{
  Json f = Json::array();
  for (auto &t : rho.factors())
    f.push_back({t.s(), t.t()});
  return {{"n", rho.degree()}, {"factors", f}};
}

inline Factorization factorization_from_json(const Json &j)
{
  int n = detail::as_int(detail::field(j, "n", "factorization"), "n");
  auto &fs = detail::field(j, "factors", "factorization");
  if (!fs.is_array())
    fail(ErrorKind::parse, "factors: expected an array");
  std::vector<Transposition> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto [a, b] = detail::as_pair(fs[i], "factors[" + std::to_string(i) + "]");
    if (a == b)
      fail(ErrorKind::precondition, "factors[" + std::to_string(i) + "]: not a transposition");
    out.emplace_back(a, b);
  }
  return Factorization(n, std::move(out));
}

inline Json to_json(const EdgeLabeledGraph &g)
{
  Json e = Json::array();
  for (auto [u, v] : g.edges())
    e.push_back({u, v});
  Json j{{"n", g.vertex_count()}, {"edges", e}};
  if (g.mode() == LabelMode::E)
    j["mode"] = "E";
  return j;
}

inline EdgeLabeledGraph graph_from_json(const Json &j)
{
  int n = detail::as_int(detail::field(j, "n", "graph"), "n");
  auto &es = detail::field(j, "edges", "graph");
  if (!es.is_array())
    fail(ErrorKind::parse, "edges: expected an array");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < es.size(); ++i)
    e.push_back(detail::as_pair(es[i], "edges[" + std::to_string(i) + "]"));
  LabelMode m = j.value("mode", std::string("EV")) == "E" ? LabelMode::E : LabelMode::EV;
  return EdgeLabeledGraph(n, std::move(e), m);
}

// either schema; a graph is read through its factorization
inline Factorization factorization_or_graph(const Json &j)
{
  if (j.contains("factors"))
    return factorization_from_json(j);
  if (j.contains("edges") && !j.contains("rotations"))
    return to_factorization(graph_from_json(j));
  fail(ErrorKind::parse, "expected a factorization or a graph");
}

// ---- trails ----

inline Json to_json(const Trail &t)
{
  Json steps = Json::array();
  for (auto &s : t.steps)
    steps.push_back({{"edge", s.edge}, {"to", s.to}});
  return {{"start", t.start}, {"steps", steps}};
}

inline Trail trail_from_json(const Json &j)
{
  Trail t;
  t.start = detail::as_int(detail::field(j, "start", "trail"), "start");
  for (auto &s : detail::field(j, "steps", "trail"))
    t.steps.push_back({detail::as_int(detail::field(s, "edge", "step"), "edge"),
                       detail::as_int(detail::field(s, "to", "step"), "to")});
  return t;
}

inline Json to_json(const Ptdc &p)
{
  Json a = Json::array();
  for (auto &t : p.trails())
    a.push_back(to_json(t));
  return a;
}

// ---- medial digraphs and PCDs ----

inline Json to_json(const MedialDigraph &d)
{
  Json arcs = Json::array();
  for (auto &a : d.arcs())
    arcs.push_back({{"from", a.from}, {"to", a.to}, {"color", a.color}});
  return {{"vertices", d.vertex_count()}, {"arcs", arcs}};
}

inline MedialDigraph medial_from_json(const Json &j)
{
  int m = detail::as_int(detail::field(j, "vertices", "medial digraph"), "vertices");
  std::vector<Arc> arcs;
  for (auto &a : detail::field(j, "arcs", "medial digraph")) {
    Arc x{detail::as_int(detail::field(a, "from", "arc"), "from"), detail::as_int(detail::field(a, "to", "arc"), "to"),
          a.contains("color") ? detail::as_int(a.at("color"), "color") : 0};
    if (x.from < 1 || x.to < 1 || x.from > m || x.to > m)
      fail(ErrorKind::precondition, "arc endpoint outside 1.." + std::to_string(m));
    arcs.push_back(x);
  }
  return MedialDigraph(m, std::move(arcs));
}

inline Json to_json(const Pcd &p)
{
  Json a = Json::array();
  for (auto &c : p.chains)
    a.push_back({{"anchor", c.anchor}, {"arcs", c.arcs}});
  return a;
}

inline Pcd pcd_from_json(const Json &j)
{
  Pcd p;
  for (auto &c : j)
    p.chains.push_back({detail::as_int(detail::field(c, "anchor", "chain"), "anchor"),
                        detail::field(c, "arcs", "chain").get<std::vector<int>>()});
  return p;
}

// ---- rotation systems ----

// Each dart is written [edge, far endpoint]; the edges are recovered from the darts.
inline Json to_json(const RotationSystem &rs)
{
  Json rot = Json::object();
  for (int x = 1; x <= rs.vertex_count(); ++x) {
    Json l = Json::array();
    for (int d : rs.rotation(x))
      l.push_back({RotationSystem::edge_of(d), rs.dart_vertex(RotationSystem::opposite(d))});
    rot[std::to_string(x)] = l;
  }
  return {{"n", rs.vertex_count()}, {"rotations", rot}};
}

inline RotationSystem rotation_system_from_json(const Json &j)
{
  auto &rot = detail::field(j, "rotations", "rotation system");
  if (!rot.is_object())
    fail(ErrorKind::parse, "rotations: expected an object keyed by vertex");
  int n = 0;
  std::map<int, std::vector<std::pair<int, int>>> by_vertex;
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    int x = 0;
    try {
      x = std::stoi(it.key());
    } catch (const std::exception &) {
      fail(ErrorKind::parse, "rotations: bad vertex key '" + it.key() + "'");
    }
    n = std::max(n, x);
    for (auto &d : it.value())
      by_vertex[x].push_back(detail::as_pair(d, "rotations[" + it.key() + "]"));
  }
  if (j.contains("n"))
    n = std::max(n, detail::as_int(j.at("n"), "n"));
  int m = 0;
  for (auto &[x, l] : by_vertex)
    for (auto [e, w] : l)
      m = std::max(m, e);
  std::vector<Edge> edges(static_cast<std::size_t>(m), Edge{0, 0});
  for (auto &[x, l] : by_vertex)
    for (auto [e, w] : l) {
      if (e < 1)
        fail(ErrorKind::parse, "edge labels start at 1");
      Edge want{std::min(x, w), std::max(x, w)};
      auto &have = edges[e - 1];
      if (have.first != 0 && have != want)
        fail(ErrorKind::precondition, "edge " + std::to_string(e) + " has inconsistent endpoints");
      have = want;
    }
  std::vector<std::vector<int>> r(static_cast<std::size_t>(n));
  for (auto &[x, l] : by_vertex)
    for (auto [e, w] : l) {
      if (x < 1)
        fail(ErrorKind::parse, "vertex ids start at 1");
      r[x - 1].push_back(2 * (e - 1) + (edges[e - 1].first == x ? 0 : 1));
    }
  return RotationSystem(n, std::move(edges), std::move(r));
}

// ---- other results ----

inline Json to_json(const VTree &t)
{
  Json e = Json::array();
  for (auto [u, v] : t.edges)
    e.push_back({u, v});
  return {{"n", t.n}, {"edges", e}};
}

inline Json to_json(const PegInvariants &p)
{
  return {{"chi", p.chi},       {"b", p.b}, {"components", p.components}, {"genus_total", p.genus_total},
          {"genus", p.genus}, {"boundary_cycles", p.boundary_cycles}};
}

inline Json distribution_json(const Distribution &d)
{
  Json o = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i])
      o[std::to_string(i)] = d[i];
  return o;
}

// ---- DOT ----

namespace detail {
inline const char *palette(int c)
{
  static const char *colors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"};
  return colors[(c - 1 + 1000) % 10];
}
} // namespace detail

inline std::string to_dot(const EdgeLabeledGraph &g)
{
  std::ostringstream o;
  o << "graph G {\n";
  for (int v = 1; v <= g.vertex_count(); ++v)
    o << "  " << v << (g.mode() == LabelMode::E ? " [label=\"\"]" : "") << ";\n";
  for (int i = 1; i <= g.edge_count(); ++i)
    o << "  " << g.edge(i).first << " -- " << g.edge(i).second << " [label=\"" << i << "\"];\n";
  o << "}\n";
  return o.str();
}

inline std::string to_dot(const MedialDigraph &d)
{
  std::ostringstream o;
  o << "digraph M {\n";
  for (int x = 1; x <= d.vertex_count(); ++x)
    o << "  " << x << ";\n";
  for (auto &a : d.arcs())
    o << "  " << a.from << " -> " << a.to << " [color=" << detail::palette(a.color) << ", label=\"" << a.color << "\"];\n";
  o << "}\n";
  return o.str();
}

inline std::string to_dot(const RotationSystem &rs)
{
  std::ostringstream o;
  o << "graph R {\n";
  for (int x = 1; x <= rs.vertex_count(); ++x) {
    o << "  " << x << " [xlabel=\"";
    auto l = rs.label_cycle(x);
    for (std::size_t k = 0; k < l.size(); ++k)
      o << (k ? " " : "") << l[k];
    o << "\"];\n";
  }
  for (int i = 1; i <= rs.edge_count(); ++i)
    o << "  " << rs.edges()[i - 1].first << " -- " << rs.edges()[i - 1].second << " [label=\"" << i << "\"];\n";
  o << "}\n";
  return o.str();
}

} // namespace mindbody
