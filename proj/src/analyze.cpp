#include <sstream>

#include "rab/cli.hpp"

namespace rab {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> labels_of(const Diagram& d, TypeSet s) {
  std::vector<std::string> out;
  for (Type i : members(s)) out.push_back(d.label(i));
  return out;
}

// Local conditions shared by both simplicity criteria.
void local_conditions(const Diagram& d, const LocalData& H, const std::string& name, Verdict& v) {
  TypeSet transitive = 0;
  for (Type i = 0; i < d.rank(); ++i) {
    if (!stabilizer_analysis(H[i]).gen_by_point_stabs)
      v.reasons.push_back(name + "_" + d.label(i) + " not generated by point stabilizers");
    if (is_transitive(H[i])) transitive |= bit(i);
  }
  if (!vertex_cover_within(d, transitive))
    for (auto [a, b] : d.edges())
      if (!has(transitive, a) && !has(transitive, b))
        v.reasons.push_back("infinity edge {" + d.label(a) + "," + d.label(b) + "} has no transitive endpoint");
  v.value = v.reasons.empty() ? "true" : "false";
}

}  // namespace

AnalysisReport analyze(const BuildingSpec& spec) {
  const Diagram& d = spec.diagram;
  GraphProduct G = spec.product();
  AnalysisReport r;
  r.thick = G.thick();
  Decomposition dec = decompose(d);
  r.irreducible = dec.irreducible;
  for (TypeSet c : dec.components) r.components.push_back(labels_of(d, c));
  for (Type i : dec.isolated) r.components.push_back({d.label(i)});
  TypeSet rungs = rung_types(d);
  r.rung_types = labels_of(d, rungs);
  r.ladderful = is_ladderful(d);

  r.rung_constraint_ok = true;
  std::vector<std::string> rung_violations;
  for (Type i : members(rungs))
    if (!spec.F[i].same_group(spec.Facute[i])) {
      r.rung_constraint_ok = false;
      rung_violations.push_back("rung type " + d.label(i) + ": F_" + d.label(i) + " differs from Facute_" + d.label(i));
    }

  bool equal_data = true;
  for (Type i = 0; i < d.rank(); ++i) equal_data = equal_data && spec.F[i].same_group(spec.Facute[i]);
  if (r.ladderful) r.collapse = "G_equals_U_by_ladderful";
  else if (equal_data) r.collapse = "G_equals_U_local_data_equal";
  else if (!r.irreducible) r.collapse = "reducible_decomposition";

  r.discrete = true;
  r.all_acute_free = true;
  for (Type i = 0; i < d.rank(); ++i) {
    r.discrete = r.discrete && stabilizer_analysis(spec.F[i]).free;
    r.all_acute_free = r.all_acute_free && stabilizer_analysis(spec.Facute[i]).free;
  }
  r.orbit_count = orbit_count(G, spec.F);

  Verdict& g = r.g_virtually_simple;
  if (!r.thick)
    for (Type i = 0; i < d.rank(); ++i)
      if (G.q(i) < 3) g.reasons.push_back("not thick: q_" + d.label(i) + " = " + std::to_string(G.q(i)));
  if (!r.irreducible) g.reasons.push_back("diagram is reducible");
  if (d.rank() < 2) g.reasons.push_back("fewer than two types");
  if (r.all_acute_free) g.reasons.push_back("all local groups free");
  for (const auto& s : rung_violations) g.reasons.push_back(s);
  if (!g.reasons.empty()) g.value = "precondition_failed";
  else local_conditions(d, spec.Facute, "Facute", g);

  Verdict& u = r.u_acute_simple;
  if (!r.irreducible) u.reasons.push_back("diagram is reducible");
  if (r.all_acute_free) u.reasons.push_back("all local groups free");
  if (!u.reasons.empty()) u.value = "precondition_failed";
  else local_conditions(d, spec.Facute, "Facute", u);

  if (r.rung_constraint_ok) r.info.push_back("closure of G(F,Facute) is U(Facute)");
  return r;
}

ordered_json report_to_json(const AnalysisReport& r) {
  auto verdict = [](const Verdict& v) { return ordered_json{{"value", v.value}, {"reasons", v.reasons}}; };
  ordered_json out;
  out["thick"] = r.thick;
  out["irreducible"] = r.irreducible;
  out["components"] = r.components;
  out["rung_types"] = r.rung_types;
  out["ladderful"] = r.ladderful;
  out["collapse"] = r.collapse;
  out["discrete"] = r.discrete;
  out["all_acute_free"] = r.all_acute_free;
  out["orbit_count"] = r.orbit_count;
  out["rung_constraint_ok"] = r.rung_constraint_ok;
  out["u_acute_simple"] = verdict(r.u_acute_simple);
  out["g_virtually_simple"] = verdict(r.g_virtually_simple);
  out["info"] = r.info;
  return out;
}

std::string report_to_text(const AnalysisReport& r) {
  auto list = [](const std::vector<std::string>& xs) {
    std::string s = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + xs[k];
    return s + "}";
  };
  auto yn = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream os;
  os << "thick: " << yn(r.thick) << "\n";
  os << "irreducible: " << yn(r.irreducible) << "\n";
  os << "components:";
  for (const auto& c : r.components) os << " " << list(c);
  os << "\n";
  os << "rung_types: " << list(r.rung_types) << "\n";
  os << "ladderful: " << yn(r.ladderful) << "\n";
  os << "collapse: " << r.collapse << "\n";
  os << "discrete: " << yn(r.discrete) << "\n";
  os << "all_acute_free: " << yn(r.all_acute_free) << "\n";
  os << "orbit_count: " << r.orbit_count << "\n";
  os << "rung_constraint_ok: " << yn(r.rung_constraint_ok) << "\n";
  for (const auto& [name, v] : {std::pair{"u_acute_simple", &r.u_acute_simple},
                                std::pair{"g_virtually_simple", &r.g_virtually_simple}}) {
    os << name << ": " << v->value;
    for (const auto& reason : v->reasons) os << "\n  - " << reason;
    os << "\n";
  }
  for (const auto& line : r.info) os << "info: " << line << "\n";
  return os.str();
}

}  // namespace rab
