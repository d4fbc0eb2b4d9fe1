#include <fstream>
#include <set>
#include <sstream>

#include "rab/cli.hpp"
#include "rab/error.hpp"

namespace rab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string type_name(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail("SchemaError", field + ": type names must be strings or integers");
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail("SchemaError", where + (where.empty() ? "" : ".") + k + ": unknown key");
}

LocalData parse_local(const json& obj, const std::string& field, const Diagram& d, const std::vector<int>& q) {
  if (!obj.is_object()) fail("SchemaError", field + ": expected an object keyed by type");
  LocalData out(d.rank());
  std::vector<bool> seen(d.rank(), false);
  for (const auto& [key, entry] : obj.items()) {
    std::string where = field + "." + key;
    Type i = d.index_of(key);
    if (!entry.is_object()) fail("SchemaError", where + ": expected {\"degree\", \"generators\"}");
    only_keys(entry, {"degree", "generators"}, where);
    if (!entry.contains("degree") || !entry["degree"].is_number_integer())
      fail("SchemaError", where + ".degree: missing or not an integer");
    if (!entry.contains("generators") || !entry["generators"].is_array())
      fail("SchemaError", where + ".generators: missing or not an array");
    int degree = entry["degree"].get<int>();
    if (degree != q[i])
      fail("DegreeMismatch", where + ".degree: " + std::to_string(degree) + " but q is " + std::to_string(q[i]));
    std::vector<Perm> gens;
    for (std::size_t g = 0; g < entry["generators"].size(); ++g) {
      const json& arr = entry["generators"][g];
      std::string gw = where + ".generators[" + std::to_string(g) + "]";
      if (!arr.is_array()) fail("SchemaError", gw + ": expected an image array");
      Perm p;
      for (const auto& x : arr) {
        if (!x.is_number_integer()) fail("SchemaError", gw + ": images must be integers");
        p.push_back(x.get<int>());
      }
      if (static_cast<int>(p.size()) != degree)
        fail("DegreeMismatch", gw + ": has " + std::to_string(p.size()) + " images, degree is " + std::to_string(degree));
      if (!is_permutation(p)) fail("SchemaError", gw + ": not a bijection");
      gens.push_back(std::move(p));
    }
    out[i] = PermGroup(degree, std::move(gens));
    seen[i] = true;
  }
  for (Type i = 0; i < d.rank(); ++i)
    if (!seen[i]) fail("SchemaError", field + "." + d.label(i) + ": missing local group");
  return out;
}

ordered_json local_to_json(const LocalData& F, const Diagram& d) {
  ordered_json out = ordered_json::object();
  for (Type i = 0; i < d.rank(); ++i) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : F[i].generators()) gens.push_back(g);
    out[d.label(i)] = {{"degree", F[i].degree()}, {"generators", gens}};
  }
  return out;
}

}  // namespace

BuildingSpec parse_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("ParseError", "line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!root.is_object()) fail("SchemaError", "top level: expected an object");
  only_keys(root, {"types", "infinity_edges", "q", "F", "Facute"}, "");
  for (const char* k : {"types", "q", "F"})
    if (!root.contains(k)) fail("SchemaError", std::string(k) + ": missing");

  if (!root["types"].is_array() || root["types"].empty()) fail("SchemaError", "types: expected a nonempty array");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < root["types"].size(); ++k)
    labels.push_back(type_name(root["types"][k], "types[" + std::to_string(k) + "]"));

  std::vector<std::pair<std::string, std::string>> edges;
  if (root.contains("infinity_edges")) {
    const json& e = root["infinity_edges"];
    if (!e.is_array()) fail("SchemaError", "infinity_edges: expected an array of pairs");
    for (std::size_t k = 0; k < e.size(); ++k) {
      std::string where = "infinity_edges[" + std::to_string(k) + "]";
      if (!e[k].is_array() || e[k].size() != 2) fail("SchemaError", where + ": expected a pair");
      edges.emplace_back(type_name(e[k][0], where), type_name(e[k][1], where));
    }
  }

  BuildingSpec spec;
  spec.diagram = Diagram(labels, edges);
  const Diagram& d = spec.diagram;

  if (!root["q"].is_object()) fail("SchemaError", "q: expected an object keyed by type");
  spec.q.assign(d.rank(), 0);
  for (const auto& [key, v] : root["q"].items()) {
    Type i = d.index_of(key);
    if (!v.is_number_integer() || v.get<long long>() < 2) fail("SchemaError", "q." + key + ": expected an integer >= 2");
    spec.q[i] = v.get<int>();
  }
  for (Type i = 0; i < d.rank(); ++i)
    if (spec.q[i] == 0) fail("SchemaError", "q." + d.label(i) + ": missing");

  spec.F = parse_local(root["F"], "F", d, spec.q);
  if (root.contains("Facute")) {
    spec.Facute = parse_local(root["Facute"], "Facute", d, spec.q);
    spec.facute_given = true;
  } else {
    spec.Facute = spec.F;
  }
  auto report = validate_local_data(spec.F, spec.Facute, spec.q, d);
  if (!report.valid) {
    std::string msg = "Facute: ";
    for (std::size_t k = 0; k < report.violations.size(); ++k) msg += (k ? "; " : "") + report.violations[k];
    fail("SchemaError", msg);
  }
  return spec;
}

BuildingSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

ordered_json spec_to_json(const BuildingSpec& spec) {
  const Diagram& d = spec.diagram;
  ordered_json out;
  out["types"] = d.labels();
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : d.edges()) edges.push_back({d.label(a), d.label(b)});
  out["infinity_edges"] = edges;
  ordered_json q = ordered_json::object();
  for (Type i = 0; i < d.rank(); ++i) q[d.label(i)] = spec.q[i];
  out["q"] = q;
  out["F"] = local_to_json(spec.F, d);
  if (spec.facute_given) out["Facute"] = local_to_json(spec.Facute, d);
  return out;
}

int exit_code_for(const std::string& kind) {
  static const std::set<std::string> input{"ParseError",   "SchemaError",       "DegreeMismatch",
                                           "UnknownType",  "ColorOutOfRange",   "UnknownSuite",
                                           "TypeMismatch", "NotAPanel",         "PreconditionViolated",
                                           "InvalidPanelClosedSet"};
  static const std::set<std::string> resource{"BallTooLarge", "GroupTooLarge", "RankTooLarge", "EscapesBound",
                                              "PathEscapesBall"};
  if (input.count(kind)) return 2;
  if (resource.count(kind)) return 3;
  return 4;
}

}  // namespace rab
