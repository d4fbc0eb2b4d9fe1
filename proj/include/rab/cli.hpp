#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rab/universal.hpp"

namespace rab {

struct BuildingSpec {
  Diagram diagram;
  std::vector<int> q;
  LocalData F;
  LocalData Facute;
  bool facute_given = false;

  GraphProduct product() const { return GraphProduct(diagram, q); }
};

// ParseError (with line and column), SchemaError naming the field,
// DegreeMismatch, or a local-data violation reported as SchemaError.
BuildingSpec parse_spec(const std::string& text);
BuildingSpec load_spec(const std::string& path);
nlohmann::ordered_json spec_to_json(const BuildingSpec& spec);

struct Verdict {
  std::string value;  // "true", "false" or "precondition_failed"
  std::vector<std::string> reasons;
};

struct AnalysisReport {
  bool thick = false;
  bool irreducible = false;
  std::vector<std::vector<std::string>> components;
  std::vector<std::string> rung_types;
  bool ladderful = false;
  std::string collapse = "none";
  bool discrete = false;
  bool all_acute_free = false;
  long long orbit_count = 0;
  bool rung_constraint_ok = false;
  Verdict u_acute_simple;
  Verdict g_virtually_simple;
  std::vector<std::string> info;
};

AnalysisReport analyze(const BuildingSpec& spec);
nlohmann::ordered_json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

struct CensusResult {
  int max_rank = 0;
  std::vector<std::vector<Diagram>> by_rank;  // index rank-1
};
CensusResult census(int max_rank);
nlohmann::ordered_json census_to_json(const CensusResult& c);

nlohmann::ordered_json word_to_json(const Word& w, const Diagram& d);
nlohmann::ordered_json portrait_to_json(const GraphProduct& G, const Portrait& g);

std::string export_ball(const GraphProduct& G, int radius, const std::string& format);
std::string export_treewall(const GraphProduct& G, Type i, int radius, const std::string& format);

struct SuiteOptions {
  std::string suite;
  int radius = 3;
  int samples = 100;
  std::uint64_t seed = 1;
  int panels = 5;  // panels per portrait pair in portrait-algebra
  bool inject_corruption = false;
};

struct SuiteResult {
  std::string suite;
  long long checks = 0;
  long long violations = 0;
  std::map<std::string, long long> tallies;  // suite-specific counters
  std::optional<nlohmann::ordered_json> counterexample;  // first violation found
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const BuildingSpec& spec, const SuiteOptions& opt);  // UnknownSuite

// Exit status for an error kind: 2 input, 3 resource bound, 4 property violation.
int exit_code_for(const std::string& kind);

}  // namespace rab
