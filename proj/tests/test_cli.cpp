#include "doctest.h"
#include "helpers.hpp"
#include "rab/cli.hpp"
#include "rab/error.hpp"

using namespace rab;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kSym3 = R"({"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})";
const char* kC3 = R"({"degree": 3, "generators": [[1, 2, 0]]})";

std::string tree_spec(const std::string& f, const std::string& fa = "") {
  std::string s = R"({"types": ["1", "2"], "infinity_edges": [["1", "2"]], "q": {"1": 3, "2": 3},
                     "F": {"1": )" + f + R"(, "2": )" + f + "}";
  if (!fa.empty()) s += R"(, "Facute": {"1": )" + fa + R"(, "2": )" + fa + "}";
  return s + "}";
}

std::string pentagon_spec() {
  std::string s = R"({"types": ["a", "b", "c", "d", "e"],
    "infinity_edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "a"]],
    "q": {"a": 3, "b": 3, "c": 3, "d": 3, "e": 3}, "F": {)";
  for (char t : std::string("abcde")) s += std::string(t == 'a' ? "" : ", ") + "\"" + t + "\": " + kSym3;
  return s + "}}";
}

}  // namespace

TEST_CASE("spec parsing") {
  BuildingSpec s = parse_spec(tree_spec(kSym3));
  CHECK(s.diagram.rank() == 2);
  CHECK(s.q == std::vector<int>{3, 3});
  CHECK(s.F[0].order() == 6);
  CHECK_FALSE(s.facute_given);
  CHECK(s.Facute[1].order() == 6);

  CHECK(kind_of([] { parse_spec(tree_spec(R"({"degree": 3, "generators": [[0, 0, 2]]})")); }) == "SchemaError");
  CHECK(message_of([] { parse_spec(tree_spec(R"({"degree": 3, "generators": [[0, 0, 2]]})")); })
            .find("F.1.generators[0]") != std::string::npos);
  CHECK(kind_of([] { parse_spec(tree_spec(R"({"degree": 2, "generators": [[1, 0]]})")); }) == "DegreeMismatch");
  CHECK(kind_of([] { parse_spec(tree_spec(R"({"degree": 3, "generators": [[1, 0]]})")); }) == "DegreeMismatch");

  std::string extra = tree_spec(kSym3);
  extra.insert(1, R"("colour": 1, )");
  CHECK(kind_of([&] { parse_spec(extra); }) == "SchemaError");
  CHECK(message_of([&] { parse_spec(extra); }).find("colour") != std::string::npos);

  std::string broken = "{\n  \"types\": [\"1\",\n  ]\n}";
  CHECK(kind_of([&] { parse_spec(broken); }) == "ParseError");
  CHECK(message_of([&] { parse_spec(broken); }).find("line 3") != std::string::npos);

  CHECK(kind_of([] {
          parse_spec(R"({"types": ["1", "2"], "infinity_edges": [["1", "7"]], "q": {"1": 3, "2": 3},
                         "F": {"1": {"degree": 3, "generators": []}, "2": {"degree": 3, "generators": []}}})");
        }) == "UnknownType");
  CHECK(kind_of([] { parse_spec(R"({"types": ["1"], "infinity_edges": [], "q": {"1": 3}, "F": {}})"); }) ==
        "SchemaError");
  // Facute must contain F and share its point stabilizers.
  CHECK(kind_of([] { parse_spec(tree_spec(kSym3, kC3)); }) == "SchemaError");
}

TEST_CASE("spec round trip") {
  BuildingSpec s = parse_spec(tree_spec(kC3, kSym3));
  BuildingSpec t = parse_spec(spec_to_json(s).dump());
  CHECK(t.diagram == s.diagram);
  CHECK(t.q == s.q);
  for (Type i = 0; i < 2; ++i) {
    CHECK(t.F[i].elements() == s.F[i].elements());
    CHECK(t.Facute[i].elements() == s.Facute[i].elements());
  }
}

TEST_CASE("analyzer truth table") {
  AnalysisReport p = analyze(parse_spec(pentagon_spec()));
  CHECK(p.ladderful);
  CHECK(p.thick);
  CHECK(p.irreducible);
  CHECK(p.collapse == "G_equals_U_by_ladderful");
  CHECK(p.u_acute_simple.value == "true");
  CHECK(p.g_virtually_simple.value == "true");
  CHECK(p.rung_types.size() == 5);
  CHECK(p.orbit_count == 0);

  AnalysisReport c = analyze(parse_spec(tree_spec(kC3)));
  CHECK(c.all_acute_free);
  CHECK(c.discrete);
  CHECK(c.collapse == "G_equals_U_local_data_equal");
  CHECK(c.g_virtually_simple.value == "precondition_failed");
  CHECK(c.g_virtually_simple.reasons == std::vector<std::string>{"all local groups free"});
  CHECK(c.u_acute_simple.value == "precondition_failed");

  AnalysisReport m = analyze(parse_spec(tree_spec(kC3, kSym3)));
  CHECK(m.rung_constraint_ok);
  CHECK(m.rung_types.empty());
  CHECK(m.discrete);
  CHECK_FALSE(m.all_acute_free);
  CHECK(m.collapse == "none");
  CHECK(m.g_virtually_simple.value == "true");
  CHECK(m.u_acute_simple.value == "true");
  CHECK(m.orbit_count == 2);
  CHECK(m.info == std::vector<std::string>{"closure of G(F,Facute) is U(Facute)"});
}

TEST_CASE("analyzer failures carry reasons") {
  // q = 2 on one side: not thick.
  auto thin = parse_spec(R"({"types": ["1", "2"], "infinity_edges": [["1", "2"]], "q": {"1": 2, "2": 3},
    "F": {"1": {"degree": 2, "generators": [[1, 0]]}, "2": {"degree": 3, "generators": [[1, 2, 0]]}},
    "Facute": {"1": {"degree": 2, "generators": [[1, 0]]}, "2": {"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}}})");
  AnalysisReport t = analyze(thin);
  CHECK_FALSE(t.thick);
  CHECK(t.g_virtually_simple.value == "precondition_failed");
  CHECK(t.g_virtually_simple.reasons == std::vector<std::string>{"not thick: q_1 = 2"});

  // Facute fixing a point on both sides of an edge: no transitive endpoint.
  const char* fix0 = R"({"degree": 3, "generators": [[0, 2, 1]]})";
  AnalysisReport e = analyze(parse_spec(tree_spec(fix0)));
  CHECK(e.g_virtually_simple.value == "false");
  CHECK(std::count(e.g_virtually_simple.reasons.begin(), e.g_virtually_simple.reasons.end(),
                   "infinity edge {1,2} has no transitive endpoint") == 1);

  // Reducible: two commuting types.
  auto red = parse_spec(R"({"types": ["1", "2"], "infinity_edges": [], "q": {"1": 3, "2": 3},
    "F": {"1": )" + std::string(kSym3) + R"(, "2": )" + kSym3 + "}}");
  AnalysisReport r = analyze(red);
  CHECK_FALSE(r.irreducible);
  CHECK(r.components.size() == 2);
  CHECK(r.g_virtually_simple.value == "precondition_failed");

  for (const auto* rep : {&t, &e, &r})
    for (const auto* v : {&rep->g_virtually_simple, &rep->u_acute_simple})
      if (v->value != "true") CHECK_FALSE(v->reasons.empty());
}

TEST_CASE("analyzer output is deterministic") {
  auto s = parse_spec(pentagon_spec());
  CHECK(report_to_json(analyze(s)).dump() == report_to_json(analyze(s)).dump());
  CHECK(report_to_text(analyze(s)) == report_to_text(analyze(s)));
  CHECK(report_to_json(analyze(s))["collapse"] == "G_equals_U_by_ladderful");
}

TEST_CASE("census table") {
  CensusResult c = census(6);
  auto j = census_to_json(c);
  CHECK(j["counts"] == nlohmann::ordered_json::array({0, 0, 0, 0, 1, 10}));
  CHECK(isomorphic(c.by_rank[4][0], fx::pentagon()));
  CHECK(census(2).by_rank[1].empty());
  CHECK(kind_of([] { census(9); }) == "RankTooLarge");
}

TEST_CASE("exports") {
  GraphProduct T(fx::tree(), {3, 3});
  std::string dot = export_ball(T, 2, "dot");
  CHECK(dot == export_ball(T, 2, "dot"));
  long nodes = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find(" -- ") != std::string::npos) ++edges;
    else if (line.rfind("  \"", 0) == 0) ++nodes;
  }
  CHECK(nodes == 13);
  CHECK(edges == 18);  // six full panels, a triangle each

  auto j = nlohmann::json::parse(export_ball(T, 2, "json"));
  CHECK(j["nodes"].size() == 13);
  CHECK(j["nodes"][1] == nlohmann::json::parse("[[1, 1]]"));

  auto tw = nlohmann::json::parse(export_treewall(T, 0, 3, "json"));
  CHECK(tw["acyclic"] == true);
  CHECK(tw["edges"].size() > 0);
  for (const auto& e : tw["edges"]) CHECK(e["wall"].get<std::size_t>() < tw["walls"].size());
  CHECK(export_treewall(T, 0, 3, "dot").rfind("graph treewall_1 {", 0) == 0);
  CHECK(kind_of([&] { export_ball(T, 2, "svg"); }) == "SchemaError");
}

TEST_CASE("suite driver") {
  auto s = parse_spec(tree_spec(kC3, kSym3));
  CHECK(suite_names().size() == 9);
  CHECK(kind_of([&] { run_suite(s, {"nonsense"}); }) == "UnknownSuite");
  for (const auto& name : suite_names()) {
    SuiteOptions o;
    o.suite = name;
    o.radius = 2;
    o.samples = 10;
    o.seed = 5;
    auto a = run_suite(s, o);
    auto b = run_suite(s, o);
    CHECK(a.violations == 0);
    CHECK(a.checks == b.checks);
    CHECK(a.tallies == b.tallies);
  }
  SuiteOptions bad{"portrait-algebra", 2, 5, 1, 3, true};
  auto r = run_suite(s, bad);
  CHECK(r.violations > 0);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->dump().find("InconsistentPortrait") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for("ParseError") == 2);
  CHECK(exit_code_for("SchemaError") == 2);
  CHECK(exit_code_for("UnknownSuite") == 2);
  CHECK(exit_code_for("DegreeMismatch") == 2);
  CHECK(exit_code_for("BallTooLarge") == 3);
  CHECK(exit_code_for("GroupTooLarge") == 3);
  CHECK(exit_code_for("InconsistentPortrait") == 4);
}

TEST_CASE("word serialization") {
  Diagram d({"x", "y"}, {{"x", "y"}});
  GraphProduct G(d, {3, 3});
  Word w = G.times(G.times(Word{}, 0, 2), 1, 1);
  CHECK(word_to_json(w, d).dump() == R"([["x",2],["y",1]])");
  CHECK(word_to_json(fx::W({{2, 1}}), fx::tree()).dump() == "[[2,1]]");
}
