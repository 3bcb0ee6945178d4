// z2cover: verify, analyze and search Z_2^4-covers of the degree-5 del Pezzo
// surface given by building data files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "z2cover/analysis.hpp"
#include "z2cover/bdfile.hpp"
#include "z2cover/expr.hpp"
#include "z2cover/report.hpp"
#include "z2cover/search.hpp"

namespace {

using nlohmann::json;
using namespace z2cover;

enum ExitCode { exit_ok = 0, exit_failed = 1, exit_structural = 2 };

struct Options {
  std::string format = "text";
  bool strict = false;
};

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

// warnings only fail the run under --strict
int settle(int code, const BdFile& file, const Options& opt) {
  if (opt.strict && !file.warnings.empty() && code == exit_ok) return exit_failed;
  return code;
}

int cmd_verify(const std::string& path, const Options& opt, bool explain_mode) {
  BdFile file = load_bd_file(path);
  print_warnings(file.warnings);
  PardiniReport pardini = verify_pardini(file.bd);
  BranchGeometryReport geometry = verify_branch_geometry(file.bd);
  bool ok = pardini.ok() && geometry.ok();

  if (opt.format == "json") {
    json j{{"command", explain_mode ? "explain" : "verify"},
           {"file", path},
           {"warnings", file.warnings},
           {"pardini", pardini_json(pardini)},
           {"branch_geometry", branch_geometry_json(geometry)},
           {"ok", ok}};
    std::cout << j.dump(2) << "\n";
  } else if (explain_mode) {
    std::cout << explain_text(file.bd, pardini);
    std::cout << branch_geometry_text(geometry);
    std::cout << (ok ? "building data verified\n" : "building data INVALID\n");
  } else {
    std::cout << pardini_text(pardini);
    std::cout << branch_geometry_text(geometry);
    std::cout << (ok ? "building data verified\n" : "building data INVALID\n");
  }
  return settle(ok ? exit_ok : exit_failed, file, opt);
}

int cmd_invariants(const std::string& path, const Options& opt) {
  BdFile file = load_bd_file(path);
  print_warnings(file.warnings);
  PardiniReport pardini = verify_pardini(file.bd);
  if (!pardini.ok()) {
    if (opt.format == "json")
      std::cout << json{{"command", "invariants"}, {"file", path},
                        {"pardini", pardini_json(pardini)}, {"ok", false}}
                       .dump(2)
                << "\n";
    else
      std::cout << pardini_text(pardini) << "not a cover; invariants unavailable\n";
    return exit_failed;
  }
  CoverInvariants inv = invariants(file.bd);
  if (opt.format == "json")
    std::cout << json{{"command", "invariants"},
                      {"file", path},
                      {"warnings", file.warnings},
                      {"invariants", invariants_json(inv)},
                      {"ok", true}}
                     .dump(2)
              << "\n";
  else
    std::cout << invariants_text(inv);
  return settle(exit_ok, file, opt);
}

int cmd_analyze(const std::string& path, const Options& opt) {
  BdFile file = load_bd_file(path);
  print_warnings(file.warnings);
  PardiniReport pardini = verify_pardini(file.bd);
  if (!pardini.ok()) {
    if (opt.format == "json")
      std::cout << json{{"command", "analyze"}, {"file", path},
                        {"pardini", pardini_json(pardini)}, {"ok", false}}
                       .dump(2)
                << "\n";
    else
      std::cout << pardini_text(pardini) << "not a cover; nothing to analyze\n";
    return exit_failed;
  }

  Degree20Report rep = check_degree20(file.bd);
  json genera;
  std::string genera_text;
  if (rep.all_pass()) {
    for (int i = 1; i <= 4; ++i) {
      int g = pencil_genus(file.bd, pencil_class(i));
      genera["f" + std::to_string(i)] = g;
      genera_text += "  genus of the f" + std::to_string(i) + " pencil: " + std::to_string(g) + "\n";
    }
  }

  if (opt.format == "json") {
    json j{{"command", "analyze"},
           {"file", path},
           {"warnings", file.warnings},
           {"criterion", criterion_json(rep)},
           {"ok", rep.all_pass()}};
    if (!genera.is_null()) j["pencil_genera"] = genera;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << criterion_text(rep);
    if (!genera_text.empty()) std::cout << "pencils:\n" << genera_text;
  }
  return settle(rep.all_pass() ? exit_ok : exit_failed, file, opt);
}

int cmd_factorize(const std::string& path, const Options& opt) {
  BdFile file = load_bd_file(path);
  print_warnings(file.warnings);
  PardiniReport pardini = verify_pardini(file.bd);
  if (!pardini.ok()) {
    std::cout << (opt.format == "json"
                      ? json{{"command", "factorize"}, {"file", path},
                             {"pardini", pardini_json(pardini)}, {"ok", false}}
                            .dump(2) + "\n"
                      : pardini_text(pardini) + "not a cover; nothing to factor\n");
    return exit_failed;
  }
  Subgroup gamma = Subgroup::generated_by(
      4, {GroupElement::parse("0001"), GroupElement::parse("0010")});
  BidoubleData bid = quotient_factorization(file.bd, gamma);
  if (opt.format == "json")
    std::cout << json{{"command", "factorize"},
                      {"file", path},
                      {"warnings", file.warnings},
                      {"bidouble", bidouble_json(bid)},
                      {"ok", true}}
                     .dump(2)
              << "\n";
  else
    std::cout << bidouble_text(bid);
  return settle(exit_ok, file, opt);
}

int cmd_deform(const std::string& path, const Options& opt) {
  BdFile file = load_bd_file(path);
  print_warnings(file.warnings);
  PardiniReport pardini = verify_pardini(file.bd);
  if (!pardini.ok()) {
    std::cout << (opt.format == "json"
                      ? json{{"command", "deform"}, {"file", path},
                             {"pardini", pardini_json(pardini)}, {"ok", false}}
                            .dump(2) + "\n"
                      : pardini_text(pardini) + "not a cover\n");
    return exit_failed;
  }
  DeformationReport rep = deformations(file.bd);
  if (opt.format == "json")
    std::cout << json{{"command", "deform"},
                      {"file", path},
                      {"warnings", file.warnings},
                      {"deformations", deformation_json(rep)},
                      {"ok", true}}
                     .dump(2)
              << "\n";
  else
    std::cout << deformation_text(rep);
  return settle(exit_ok, file, opt);
}

SearchConfig read_search_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j = json::parse(in);
  SearchConfig cfg;
  if (j.contains("catalog")) {
    std::vector<NamedCurve> catalog;
    for (const auto& name : j["catalog"]) catalog.push_back(NamedCurve::parse(name));
    cfg.catalog = std::move(catalog);
  }
  if (j.contains("sigma_support")) {
    std::vector<GroupElement> support;
    for (const auto& s : j["sigma_support"]) support.push_back(GroupElement::parse(s));
    cfg.sigma_support = std::move(support);
  }
  cfg.max_pencil_members = j.value("max_pencil_members", cfg.max_pencil_members);
  cfg.component_budget = j.value("component_budget", cfg.component_budget);
  cfg.symmetry = j.value("symmetry", cfg.symmetry);
  cfg.time_budget_seconds = j.value("time_budget_seconds", cfg.time_budget_seconds);
  cfg.workers = j.value("workers", cfg.workers);
  return cfg;
}

int cmd_search(const std::string& config_path, const std::string& out_dir, const Options& opt) {
  SearchConfig cfg = read_search_config(config_path);
  SearchOutcome outcome = enumerate_covers(cfg);

  std::filesystem::create_directories(out_dir);
  json hits = json::array();
  std::string table;
  for (size_t i = 0; i < outcome.results.size(); ++i) {
    const SearchResult& res = outcome.results[i];
    char name[32];
    std::snprintf(name, sizeof name, "hit_%04zu.bd", i + 1);
    std::ofstream out(std::filesystem::path(out_dir) / name);
    out << serialize_bd(res.bd);

    int k2 = res.report.conclusions ? res.report.conclusions->k2 : 0;
    size_t fixed = res.report.conclusions ? res.report.conclusions->fixed_part.size() : 0;
    hits.push_back(json{{"file", name}, {"k2", k2}, {"fixed_part_size", fixed},
                        {"key", res.key}});
    table += std::string(name) + "  K^2=" + std::to_string(k2) +
             "  fixed=" + std::to_string(fixed) + "  key=" + res.key + "\n";
  }

  if (opt.format == "json") {
    std::cout << json{{"command", "search"},
                      {"config", config_path},
                      {"out", out_dir},
                      {"count", outcome.results.size()},
                      {"complete", outcome.complete},
                      {"hits", hits}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << table;
    std::cout << outcome.results.size() << " cover(s) found; run "
              << (outcome.complete ? "complete" : "INCOMPLETE (time budget exceeded)") << "\n";
  }
  if (!outcome.complete && opt.strict) return exit_failed;
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"building data of Z_2^4-covers of the degree-5 del Pezzo surface"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--strict", opt.strict, "treat warnings as failures");

  std::string file, config, out_dir = "search_out";
  CLI::App* verify = app.add_subcommand("verify", "check the cover relations and branch geometry");
  verify->add_option("file", file)->required();
  CLI::App* invariants = app.add_subcommand("invariants", "numerical invariants of the cover");
  invariants->add_option("file", file)->required();
  CLI::App* analyze = app.add_subcommand("analyze", "run the degree-20 criterion");
  analyze->add_option("file", file)->required();
  CLI::App* factorize = app.add_subcommand("factorize", "bidouble factorization through X/<0001,0010>");
  factorize->add_option("file", file)->required();
  CLI::App* deform = app.add_subcommand("deform", "natural deformation dimensions");
  deform->add_option("file", file)->required();
  CLI::App* explain = app.add_subcommand("explain", "write out all fifteen relations");
  explain->add_option("file", file)->required();
  CLI::App* search = app.add_subcommand("search", "enumerate covers over the curve catalog");
  search->add_option("config", config, "JSON search configuration")->required();
  search->add_option("--out", out_dir, "directory for the result files")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_structural;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, opt, false);
    if (explain->parsed()) return cmd_verify(file, opt, true);
    if (invariants->parsed()) return cmd_invariants(file, opt);
    if (analyze->parsed()) return cmd_analyze(file, opt);
    if (factorize->parsed()) return cmd_factorize(file, opt);
    if (deform->parsed()) return cmd_deform(file, opt);
    if (search->parsed()) return cmd_search(config, out_dir, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_structural;
  }
  return exit_structural;
}
