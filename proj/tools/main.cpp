#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "borda/errors.hpp"
#include "borda/fixtures.hpp"
#include "borda/report.hpp"

namespace {

using namespace borda;

struct CommonFlags {
  std::vector<std::string> methods;
  bool all_methods = false;
  std::string format = "table";
  int spoiler_cap = 10;
  std::string tie_break = "index";
  std::vector<std::string> writein_patterns;
  std::string last_place_unranked = "on";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  CLI::Option* methods =
      cmd->add_option("--method", flags.methods,
                      "Method to run (EBC, QBC, ABC, BCU, MBC, Plurality, IRV); "
                      "repeatable. Default: the five Borda variations");
  cmd->add_flag("--all-methods", flags.all_methods, "Run all seven methods")
      ->excludes(methods);
  cmd->add_option("--format", flags.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--max-spoiler-candidates", flags.spoiler_cap,
                  "Largest slate searched for spoilers (default 10)");
  cmd->add_option("--tie-break", flags.tie_break,
                  "Tie policy: index (lowest roster index) or report-only")
      ->check(CLI::IsMember({"index", "report-only"}));
  cmd->add_option("--writein-pattern", flags.writein_patterns,
                  "Candidate name treated as a write-in; repeatable "
                  "(default: Write-In, Write-in, UWI)");
  cmd->add_option("--last-place-unranked", flags.last_place_unranked,
                  "Give the unique unranked candidate a last-place vote "
                  "(default on)")
      ->check(CLI::IsMember({"on", "off"}));
}

RunConfig config_from(const CommonFlags& flags) {
  RunConfig config;
  if (flags.all_methods) {
    config.methods.assign(kAllMethods.begin(), kAllMethods.end());
  } else if (!flags.methods.empty()) {
    config.methods.clear();
    for (const std::string& name : flags.methods) {
      auto m = method_from_name(name);
      if (!m) throw InputError("unknown method '" + name + "'");
      config.methods.push_back(*m);
    }
  }
  if (flags.format == "json") config.format = OutputFormat::json;
  else if (flags.format == "csv") config.format = OutputFormat::csv;
  else config.format = OutputFormat::table;
  config.spoiler_cap = flags.spoiler_cap;
  config.tie_rule = flags.tie_break == "report-only" ? TieRule::report_only
                                                     : TieRule::lowest_index;
  if (!flags.writein_patterns.empty())
    config.writein_patterns = flags.writein_patterns;
  config.unranked_last = flags.last_place_unranked != "off";
  config.validate();
  return config;
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Ranked-choice election analysis under Borda count variations"};
  app.require_subcommand(1);

  CommonFlags analyze_flags;
  std::string analyze_path;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Analyze one CVR file or bundled fixture");
  analyze_cmd->add_option("path", analyze_path, "CVR csv file or fixture name")
      ->required();
  add_common(analyze_cmd, analyze_flags);

  CommonFlags batch_flags;
  std::string batch_dir, batch_out;
  CLI::App* batch_cmd =
      app.add_subcommand("batch", "Analyze every .csv file in a directory");
  batch_cmd->add_option("dir", batch_dir, "Directory of CVR csv files")->required();
  add_common(batch_cmd, batch_flags);
  batch_cmd->add_option("--out", batch_out, "Write the report to a file");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "Bundled elections");
  CLI::App* fixtures_list = fixtures_cmd->add_subcommand("list", "List fixtures");
  std::string export_dir;
  CLI::App* fixtures_export =
      fixtures_cmd->add_subcommand("export", "Write fixtures as CVR csv files");
  fixtures_export->add_option("dir", export_dir, "Output directory")->required();
  fixtures_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (analyze_cmd->parsed()) {
    RunConfig config = config_from(analyze_flags);
    ElectionReport report = analyze(analyze_path, config);
    std::cout << emit(report, config.format);
    return 0;
  }
  if (batch_cmd->parsed()) {
    RunConfig config = config_from(batch_flags);
    BatchResult result = batch(batch_dir, config);
    write_out(emit(result, config.format), batch_out);
    if (!result.errors.empty() && config.format != OutputFormat::table) {
      for (const std::string& e : result.errors)
        std::cerr << "error: " << e << "\n";
    }
    return 0;
  }
  if (fixtures_list->parsed()) {
    for (const Fixture& f : bundled_fixtures())
      std::cout << f.name << "  -  " << f.description << "\n";
    return 0;
  }
  if (fixtures_export->parsed()) {
    std::filesystem::create_directories(export_dir);
    for (const Fixture& f : bundled_fixtures()) {
      std::filesystem::path path =
          std::filesystem::path(export_dir) / (f.name + ".csv");
      std::ofstream out(path);
      if (!out) throw InputError("cannot write '" + path.string() + "'");
      out << fixture_to_csv(f);
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const borda::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
