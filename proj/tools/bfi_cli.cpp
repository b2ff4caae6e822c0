// bfi: convergence studies for BFECC-boosted grid-to-grid interpolation.
//
//   bfi study run <config> [--out-dir DIR]
//   bfi study preset <name> [--out-dir DIR]
//   bfi verify expansions
//   bfi preset list
//   bfi preset export <name> <path>
//
// Exit status: 0 success, 1 acceptance failure (order outside band or
// expansion gap above 5%), 2 usage, configuration or I/O error.
// BFI_THREADS caps the worker count.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bfi/analysis.hpp"
#include "bfi/error.hpp"
#include "bfi/presets.hpp"
#include "bfi/study.hpp"

namespace {

constexpr double kMaxExpansionGap = 0.05;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bfi::Error(bfi::ErrorCode::io_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw bfi::Error(bfi::ErrorCode::io_error, "cannot write '" + path.string() + "'");
}

int run(const bfi::StudyConfig& config, const std::string& out_dir) {
  const bfi::StudyReport report = bfi::run_study(config);
  const std::string csv = bfi::report_csv(report);
  const std::string table = bfi::report_table(report);
  std::cout << table;

  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    write_file(dir / (config.name + ".csv"), csv);
    write_file(dir / (config.name + ".txt"), table);
  }
  if (!config.csv_path.empty()) write_file(config.csv_path, csv);
  if (!config.table_path.empty()) write_file(config.table_path, table);

  const auto violations = bfi::band_violations(report);
  for (const auto& v : violations) std::cerr << "band violation: " << v << '\n';
  return violations.empty() ? 0 : 1;
}

int verify_expansions() {
  fmt::print("{:<30} {:>5} {:>14} {:>14} {:>10}\n", "case", "power", "predicted",
             "estimated", "gap");
  bool ok = true;
  for (const bfi::ExpansionCase& c : bfi::expansion_matrix()) {
    const bfi::ExpansionCheck r = bfi::leading_error_check(c.request);
    std::string factors;
    for (std::size_t a = 0; a < r.factors.size(); ++a) {
      factors += fmt::format("{}{:.6g}", a == 0 ? "" : ", ", r.factors[a]);
    }
    const bool pass = r.relative_gap <= kMaxExpansionGap;
    ok = ok && pass;
    fmt::print("{:<30} {:>5} {:>14.6e} {:>14.6e} {:>10.3e} {}  coefficients [{}]\n", c.label,
               r.power, r.predicted, r.estimated, r.relative_gap, pass ? "ok" : "FAIL",
               factors);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BFECC interpolation convergence studies"};
  app.require_subcommand(1);

  auto* study = app.add_subcommand("study", "run a convergence study");
  study->require_subcommand(1);
  std::string config_path, preset_name, out_dir;
  auto* study_run = study->add_subcommand("run", "run a study from a config file");
  study_run->add_option("config", config_path, "config file")->required();
  study_run->add_option("--out-dir", out_dir, "directory for <name>.csv and <name>.txt");
  auto* study_preset = study->add_subcommand("preset", "run a named preset");
  study_preset->add_option("name", preset_name, "preset name")->required();
  study_preset->add_option("--out-dir", out_dir, "directory for <name>.csv and <name>.txt");

  auto* verify = app.add_subcommand("verify", "numerical checks");
  verify->require_subcommand(1);
  auto* verify_exp = verify->add_subcommand("expansions", "check leading-error coefficients");

  auto* preset = app.add_subcommand("preset", "inspect presets");
  preset->require_subcommand(1);
  auto* preset_list = preset->add_subcommand("list", "list preset names");
  std::string export_path;
  auto* preset_export = preset->add_subcommand("export", "write a preset's config file");
  preset_export->add_option("name", preset_name, "preset name")->required();
  preset_export->add_option("path", export_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (study_run->parsed()) return run(bfi::parse_config(read_file(config_path)), out_dir);
    if (study_preset->parsed()) {
      return run(bfi::parse_config(bfi::find_preset(preset_name).config), out_dir);
    }
    if (verify_exp->parsed()) return verify_expansions();
    if (preset_list->parsed()) {
      for (const bfi::Preset& p : bfi::presets()) fmt::print("{:<18} {}\n", p.name, p.summary);
      return 0;
    }
    if (preset_export->parsed()) {
      write_file(export_path, bfi::find_preset(preset_name).config);
      return 0;
    }
  } catch (const bfi::Error& e) {
    std::cerr << "error: " << bfi::to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
