#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "rab/cli.hpp"
#include "rab/error.hpp"

namespace rab {

using nlohmann::ordered_json;

namespace {

bool numeric_labels(const Diagram& d) {
  for (const auto& l : d.labels())
    if (l.empty() || l.size() > 9 || !std::all_of(l.begin(), l.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      return false;
  return true;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void check_format(const std::string& format) {
  if (format != "dot" && format != "json") fail("SchemaError", "format: expected dot or json");
}

}  // namespace

ordered_json word_to_json(const Word& w, const Diagram& d) {
  bool numeric = numeric_labels(d);
  ordered_json out = ordered_json::array();
  for (const Letter& x : w) {
    if (numeric) out.push_back({std::stoi(d.label(x.type)), x.color});
    else out.push_back({d.label(x.type), x.color});
  }
  return out;
}

ordered_json portrait_to_json(const GraphProduct& G, const Portrait& g) {
  const Diagram& d = G.diagram();
  ordered_json out;
  switch (g.kind()) {
    case Portrait::Kind::Leaf: {
      const auto& L = g.leaf_data();
      out["kind"] = "leaf";
      out["base_image"] = word_to_json(apply(G, g, Word{}), d);
      out["anchor"] = word_to_json(L.anchor, d);
      out["anchor_image"] = word_to_json(L.anchor_image, d);
      ordered_json defaults = ordered_json::object();
      for (Type i = 0; i < G.rank(); ++i) {
        ordered_json gens = ordered_json::array();
        for (const auto& p : L.transport[i].generators()) gens.push_back(p);
        defaults[d.label(i)] = gens;
      }
      out["defaults"] = defaults;
      ordered_json as = ordered_json::array();
      for (const auto& [T, p] : L.assignments)
        as.push_back({{"tree_wall", word_to_json(T.rep, d)}, {"type", d.label(T.type)}, {"perm", p}});
      out["assignments"] = as;
      return out;
    }
    case Portrait::Kind::Compose:
      out["kind"] = "compose";
      out["outer"] = portrait_to_json(G, g.outer());
      out["inner"] = portrait_to_json(G, g.inner());
      return out;
    case Portrait::Kind::Inverse:
      out["kind"] = "inverse";
      out["of"] = portrait_to_json(G, g.outer());
      return out;
    case Portrait::Kind::Piecewise:
      out["kind"] = "wing_restriction";
      out["panel"] = {{"type", d.label(members(g.wing_panel().types)[0])},
                      {"rep", word_to_json(g.wing_panel().rep, d)}};
      out["wing_chamber"] = word_to_json(g.wing_chamber(), d);
      out["inner"] = portrait_to_json(G, g.outer());
      return out;
  }
  return out;
}

std::string export_ball(const GraphProduct& G, int radius, const std::string& format) {
  check_format(format);
  const Diagram& d = G.diagram();
  auto chambers = ball(G, Word{}, radius);
  std::map<Word, std::size_t> id;
  for (std::size_t k = 0; k < chambers.size(); ++k) id[chambers[k]] = k;
  struct Edge {
    std::size_t a, b;
    Type type;
  };
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < chambers.size(); ++k)
    for (Type i = 0; i < G.rank(); ++i)
      for (int c = 1; c < G.q(i); ++c) {
        auto it = id.find(G.times(chambers[k], i, c));
        if (it != id.end() && it->second > k) edges.push_back({k, it->second, i});
      }
  std::ostringstream os;
  if (format == "dot") {
    os << "graph ball {\n";
    for (const auto& w : chambers) os << "  " << quoted(to_string(w, d)) << ";\n";
    for (const auto& e : edges)
      os << "  " << quoted(to_string(chambers[e.a], d)) << " -- " << quoted(to_string(chambers[e.b], d))
         << " [label=" << quoted(d.label(e.type)) << "];\n";
    os << "}\n";
    return os.str();
  }
  ordered_json nodes = ordered_json::array();
  for (const auto& w : chambers) nodes.push_back(word_to_json(w, d));
  ordered_json es = ordered_json::array();
  for (const auto& e : edges) es.push_back({{"source", e.a}, {"target", e.b}, {"type", d.label(e.type)}});
  ordered_json out{{"radius", radius}, {"nodes", nodes}, {"edges", es}};
  return out.dump(2) + "\n";
}

std::string export_treewall(const GraphProduct& G, Type i, int radius, const std::string& format) {
  check_format(format);
  const Diagram& d = G.diagram();
  TreeWallTree t = tree_wall_tree(G, i, ball(G, Word{}, radius));
  std::ostringstream os;
  if (format == "dot") {
    os << "graph treewall_" << d.label(i) << " {\n";
    for (std::size_t k = 0; k < t.walls.size(); ++k)
      os << "  w" << k << " [shape=box, label=" << quoted(to_string(t.walls[k].rep, d)) << "];\n";
    for (std::size_t k = 0; k < t.cores.size(); ++k)
      os << "  r" << k << " [label=" << quoted(to_string(t.cores[k].rep, d)) << "];\n";
    for (const auto& e : t.edges)
      os << "  w" << e.wall << " -- r" << e.core << " [label=" << quoted(to_string(e.key.rep, d)) << "];\n";
    os << "}\n";
    return os.str();
  }
  ordered_json walls = ordered_json::array(), cores = ordered_json::array(), edges = ordered_json::array();
  for (const auto& w : t.walls) walls.push_back(word_to_json(w.rep, d));
  for (const auto& c : t.cores) cores.push_back(word_to_json(c.rep, d));
  for (const auto& e : t.edges)
    edges.push_back({{"wall", e.wall}, {"core", e.core}, {"residue", word_to_json(e.key.rep, d)}});
  ordered_json out{{"type", d.label(i)}, {"radius", radius}, {"walls", walls}, {"cores", cores}, {"edges", edges},
                   {"acyclic", t.acyclic()}};
  return out.dump(2) + "\n";
}

}  // namespace rab
