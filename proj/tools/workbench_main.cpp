#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "workbench/cli.hpp"
#include "workbench/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wb::ConfigError(path, "cannot read config file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A config reference is a built-in example name or a path to a JSON file.
wb::AnalysisConfig load_config(const std::string& ref,
                               std::optional<long> maxdeg) {
  wb::Json j;
  if (wb::has_example(ref)) {
    j = wb::example_config(ref);
  } else {
    try {
      j = wb::Json::parse(read_file(ref));
    } catch (const nlohmann::json::parse_error& e) {
      throw wb::ConfigError(ref, e.what());
    }
  }
  if (maxdeg) j["maxdeg"] = *maxdeg;
  return wb::parse_config(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded algebra analysis workbench"};
  app.require_subcommand(1);

  std::string run_ref;
  long maxdeg = -1;
  std::string out_path;
  CLI::App* cmd_run =
      app.add_subcommand("run", "run an analysis config (file or example name)");
  cmd_run->add_option("config", run_ref, "config JSON file or example name")
      ->required();
  cmd_run->add_option("--maxdeg", maxdeg, "override the truncation degree");
  cmd_run->add_option("--out", out_path, "write the JSON report to this file");

  std::string show_name;
  CLI::App* cmd_examples =
      app.add_subcommand("examples", "list built-in example configs");
  cmd_examples->add_option("--show", show_name,
                           "print the config JSON of one example");

  std::string regress_ref;
  CLI::App* cmd_regress = app.add_subcommand(
      "regress", "run a config and compare against its expected block");
  cmd_regress->add_option("config", regress_ref,
                          "config JSON file or example name (default: all "
                          "built-in examples)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_run->parsed()) {
      wb::AnalysisConfig cfg = load_config(
          run_ref, maxdeg >= 0 ? std::optional<long>(maxdeg) : std::nullopt);
      wb::Report rep = wb::run(cfg);
      std::cout << rep.human;
      std::string text = rep.data.dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw wb::Error("cannot write report to " + out_path);
        out << text;
        std::cout << "report written to " << out_path << "\n";
      }
      return 0;
    }
    if (cmd_examples->parsed()) {
      if (!show_name.empty()) {
        std::cout << wb::example_config(show_name).dump(2) << "\n";
        return 0;
      }
      for (const wb::CatalogEntry& e : wb::list_examples()) {
        std::cout << e.name;
        for (std::size_t i = e.name.size(); i < 24; ++i) std::cout << ' ';
        std::cout << ' ' << e.summary << "\n";
      }
      return 0;
    }
    if (cmd_regress->parsed()) {
      if (!regress_ref.empty()) {
        wb::AnalysisConfig cfg = load_config(regress_ref, std::nullopt);
        wb::RegressionResult rr = wb::regression(cfg);
        if (rr.pass) {
          std::cout << "regression: pass\n";
          return 0;
        }
        std::cout << "regression: FAIL\n";
        for (const std::string& d : rr.diffs) std::cout << "  " << d << "\n";
        return 3;
      }
      int failed = 0;
      for (const wb::CatalogEntry& entry : wb::list_examples()) {
        wb::AnalysisConfig cfg = wb::parse_config(wb::example_config(entry.name));
        wb::RegressionResult rr = wb::regression(cfg);
        std::cout << (rr.pass ? "pass  " : "FAIL  ") << entry.name << "\n";
        for (const std::string& d : rr.diffs) std::cout << "  " << d << "\n";
        if (!rr.pass) ++failed;
      }
      if (failed == 0) return 0;
      std::cout << failed << " example(s) FAILED\n";
      return 3;
    }
  } catch (const wb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
