#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rab/cli.hpp"
#include "rab/error.hpp"

namespace {

int run_analyze(const std::string& path, bool as_json) {
  auto report = rab::analyze(rab::load_spec(path));
  if (as_json) std::cout << rab::report_to_json(report).dump(2) << "\n";
  else std::cout << rab::report_to_text(report);
  return 0;
}

int run_census(int max_rank, const std::string& dot_dir, bool as_json) {
  auto result = rab::census(max_rank);
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    for (int n = 1; n <= max_rank; ++n) {
      const auto& ds = result.by_rank[n - 1];
      for (std::size_t k = 0; k < ds.size(); ++k) {
        std::string name = "rank" + std::to_string(n) + "_" + std::to_string(k);
        std::ofstream(std::filesystem::path(dot_dir) / (name + ".dot")) << rab::to_dot(ds[k], name);
      }
    }
  }
  if (as_json) {
    std::cout << rab::census_to_json(result).dump(2) << "\n";
    return 0;
  }
  for (int n = 1; n <= max_rank; ++n) std::cout << "rank " << n << ": " << result.by_rank[n - 1].size() << "\n";
  return 0;
}

int run_check(const std::string& path, const rab::SuiteOptions& opt) {
  auto spec = rab::load_spec(path);
  auto r = rab::run_suite(spec, opt);
  nlohmann::ordered_json out{{"suite", r.suite},           {"radius", opt.radius}, {"samples", opt.samples},
                             {"seed", opt.seed},           {"checks", r.checks},   {"violations", r.violations},
                             {"tallies", r.tallies}};
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  std::cout << out.dump(2) << "\n";
  return r.violations ? 4 : 0;
}

int run_export(const std::string& path, const std::string& what, const std::string& type, int radius,
               const std::string& format) {
  auto spec = rab::load_spec(path);
  auto G = spec.product();
  if (what == "ball") {
    std::cout << rab::export_ball(G, radius, format);
  } else if (what == "treewall" || what == "gamma") {
    if (type.empty()) rab::fail("SchemaError", "--type is required for tree-wall exports");
    std::cout << rab::export_treewall(G, spec.diagram.index_of(type), radius, format);
  } else {
    rab::fail("SchemaError", "--what must be ball, treewall or gamma");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right-angled building toolkit"};
  app.require_subcommand(1);

  std::string spec_path;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "Simplicity and structure report for a building spec");
  analyze->add_option("spec", spec_path, "Spec JSON file")->required();
  analyze->add_flag("--json", as_json, "Emit JSON");

  int max_rank = 6;
  std::string dot_dir;
  auto* census = app.add_subcommand("census", "Irreducible ladderful diagrams per rank");
  census->add_option("--max-rank", max_rank, "Largest rank")->required();
  census->add_option("--dot", dot_dir, "Directory for one DOT file per diagram");
  census->add_flag("--json", as_json, "Emit JSON");

  rab::SuiteOptions opt;
  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("spec", spec_path, "Spec JSON file")->required();
  check->add_option("--suite", opt.suite, "Suite name")->required();
  check->add_option("--radius", opt.radius, "Ball radius");
  check->add_option("--samples", opt.samples, "Number of samples");
  check->add_option("--seed", opt.seed, "Random seed");
  check->add_option("--panels", opt.panels, "Panels per portrait pair (portrait-algebra)");
  check->add_flag("--inject-corruption", opt.inject_corruption, "Plant an inconsistent portrait (negative control)");

  std::string what = "ball", type, format = "dot";
  int radius = 2;
  auto* exp = app.add_subcommand("export", "DOT or JSON export of a ball or a tree-wall tree");
  exp->add_option("spec", spec_path, "Spec JSON file")->required();
  exp->add_option("--what", what, "ball, treewall or gamma");
  exp->add_option("--type", type, "Type label for tree-wall exports");
  exp->add_option("--radius", radius, "Ball radius");
  exp->add_option("--format", format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(spec_path, as_json);
    if (census->parsed()) return run_census(max_rank, dot_dir, as_json);
    if (check->parsed()) return run_check(spec_path, opt);
    if (exp->parsed()) return run_export(spec_path, what, type, radius, format);
  } catch (const rab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rab::exit_code_for(e.kind());
  }
  return 2;
}
