/// @file study.hpp
/// @brief Convergence studies: configuration, execution and report output.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bfi/analysis.hpp"
#include "bfi/grid.hpp"
#include "bfi/interp.hpp"

namespace bfi {

/// Scheme layered over the underlying interpolation.
enum class Booster { none, bfecc, maccormack };

std::string_view to_string(Booster b);

enum class TargetTransform { shift, rotate, perturb, ratio };

std::string_view to_string(TargetTransform t);

struct StudyConfig {
  std::string name = "study";
  std::string title;
  int dim = 1;
  std::string function;
  Method method = Method::multilinear;
  std::vector<Booster> boosters{Booster::none, Booster::bfecc};
  std::size_t margin = 2;   ///< target cells excluded at each hull face
  std::size_t padding = 2;  ///< source cells beyond the target bounding box

  Vec3 lower{0.0, 0.0, 0.0};
  Vec3 upper{1.0, 1.0, 1.0};

  std::vector<double> spacings;  ///< source spacing along x, halving per level
  Vec3 aspect{1.0, 1.0, 1.0};    ///< per-axis spacing multipliers

  TargetTransform transform = TargetTransform::shift;
  Vec3 shift{};             ///< fractional shift in units of the source spacing
  double angle_deg = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};
  double amplitude = 0.1;
  double ratio = 1.0;       ///< source spacing / target spacing
  bool split = false;       ///< split the target into ratio^d subgrids

  std::map<Booster, std::pair<double, double>> bands;  ///< allowed linf orders

  std::string csv_path;
  std::string table_path;
};

struct LevelResult {
  double spacing = 0.0;
  std::size_t nodes_measured = 0;
  std::map<Booster, ErrorNorms> errors;
  double seconds = 0.0;
};

struct StudyReport {
  StudyConfig config;
  std::vector<LevelResult> levels;
  /// Orders between consecutive levels; +inf marks an exact reproduction.
  std::map<Booster, std::vector<double>> order_linf;
  std::map<Booster, std::vector<double>> order_rms;
};

/// Parse the sectioned key-value format. Throws Error(parse_error) with the
/// line and key on malformed input or unknown keys, and
/// Error(validation_error) listing every offending field.
StudyConfig parse_config(std::string_view text);

/// Throws Error(validation_error) naming every field out of range.
void validate_config(const StudyConfig& config);

/// Source and target grids of one refinement level.
struct LevelGrids {
  Grid source;
  std::vector<Grid> targets;    ///< one grid, or the subgrids of a split target
  Grid measured;                ///< grid whose nodes are measured (the unsplit target)
  std::vector<Index3> offsets;  ///< subgrid offsets within `measured` (split only)
  Index3 factor{1, 1, 1};
};

LevelGrids level_grids(const StudyConfig& config, double spacing);

/// Only configuration-level checks; per-level failures throw.
StudyReport run_study(const StudyConfig& config);

/// Columns: level, spacing, method, linf, rms, order_linf, order_rms, nodes_measured.
std::string report_csv(const StudyReport& report);
/// Aligned table with one error/order column pair per scheme.
std::string report_table(const StudyReport& report);
/// Human-readable descriptions of linf orders outside the configured bands.
std::vector<std::string> band_violations(const StudyReport& report);

}  // namespace bfi
