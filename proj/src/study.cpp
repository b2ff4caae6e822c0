#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "bfi/bfecc.hpp"
#include "bfi/error.hpp"
#include "bfi/study.hpp"
#include "bfi/test_functions.hpp"

namespace bfi {

namespace {

std::size_t nodes_across(double length, double h) {
  return static_cast<std::size_t>(std::floor(length / h + 1e-9)) + 1;
}

/// Uniform source lattice anchored at `anchor` (a lattice node) with the
/// given spacing, covering `box` plus `padding` cells on every side.
Grid covering_source(int dim, const Vec3& anchor, const Vec3& h, const std::array<Vec3, 2>& box,
                     std::size_t padding) {
  Index3 counts{1, 1, 1};
  Vec3 origin{};
  Vec3 spacing{1.0, 1.0, 1.0};
  const auto pad = static_cast<double>(padding);
  for (int a = 0; a < dim; ++a) {
    const double lo = std::floor((box[0][a] - anchor[a]) / h[a] + 1e-9) - pad;
    const double hi = std::ceil((box[1][a] - anchor[a]) / h[a] - 1e-9) + pad;
    counts[a] = static_cast<std::size_t>(hi - lo) + 1;
    origin[a] = anchor[a] + lo * h[a];
    spacing[a] = h[a];
  }
  return make_uniform_grid(dim, counts, spacing, origin);
}

std::string method_label(const StudyConfig& c, Booster b) {
  return b == Booster::none ? std::string(to_string(c.method)) : std::string(to_string(b));
}

std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{}", v);
}

}  // namespace

LevelGrids level_grids(const StudyConfig& c, double spacing) {
  const int dim = c.dim;
  Vec3 h{1.0, 1.0, 1.0};
  Vec3 w{};
  for (int a = 0; a < dim; ++a) {
    h[a] = spacing * c.aspect[a];
    w[a] = c.shift[a] * h[a];
  }

  const double ratio = c.transform == TargetTransform::ratio ? c.ratio : 1.0;
  Index3 counts{1, 1, 1};
  Vec3 th{1.0, 1.0, 1.0};
  for (int a = 0; a < dim; ++a) {
    th[a] = h[a] / ratio;
    counts[a] = nodes_across(c.upper[a] - c.lower[a], th[a]);
  }
  const Grid base = make_uniform_grid(dim, counts, th, c.lower);

  Vec3 anchor = c.lower;
  Grid target = base;
  switch (c.transform) {
    case TargetTransform::shift:
    case TargetTransform::ratio:
      target = shift_grid(base, w);
      break;
    case TargetTransform::rotate: {
      Vec3 center{};
      for (int a = 0; a < dim; ++a) center[a] = 0.5 * (c.lower[a] + c.upper[a]);
      target = rotate_grid(shift_grid(base, w), c.angle_deg, c.axis, center);
      break;
    }
    case TargetTransform::perturb: {
      Vec3 lengths{1.0, 1.0, 1.0};
      for (int a = 0; a < dim; ++a) lengths[a] = c.upper[a] - c.lower[a];
      target = shift_grid(perturb_grid(base, c.amplitude, lengths), w);
      anchor = target.origin();
      break;
    }
  }

  LevelGrids out{covering_source(dim, anchor, h, target.bounding_box(), c.padding), {}, target,
                 {}, {1, 1, 1}};
  if (c.split) {
    const auto f = static_cast<std::size_t>(std::llround(c.ratio));
    for (int a = 0; a < dim; ++a) out.factor[a] = f;
    out.targets = split_fine_grid(target, out.factor);
    out.offsets = subgrid_offsets(dim, out.factor);
  } else {
    out.targets.push_back(target);
    out.offsets.push_back({0, 0, 0});
  }
  return out;
}

StudyReport run_study(const StudyConfig& c) {
  validate_config(c);
  const TestFunction& tf = test_function(c.function);

  StudyReport report;
  report.config = c;
  for (double spacing : c.spacings) {
    const auto t0 = std::chrono::steady_clock::now();
    const LevelGrids grids = level_grids(c, spacing);
    const Grid& measured = grids.measured;
    const Field f = sample_function(grids.source, tf);

    // Values per scheme and measurement mask, indexed by node of `measured`.
    const std::size_t n = measured.size();
    std::map<Booster, std::vector<double>> approx;
    for (Booster b : c.boosters) approx[b].assign(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::uint8_t> mask(n, 0);

    for (std::size_t s = 0; s < grids.targets.size(); ++s) {
      const Grid& target = grids.targets[s];
      const Index3& off = grids.offsets[s];
      const GridTransfer transfer(grids.source, target, c.method);
      for (Booster b : c.boosters) {
        const BfeccResult r = b == Booster::none    ? transfer.linear(f)
                              : b == Booster::bfecc ? transfer.bfecc(f)
                                                    : transfer.maccormack(f);
        for (std::size_t node = 0; node < target.size(); ++node) {
          Index3 idx = target.unflatten(node);
          bool inner = r.mask[node] == NodeStatus::bfecc;
          for (int a = 0; a < c.dim; ++a) {
            idx[a] = off[a] + grids.factor[a] * idx[a];
            inner = inner && idx[a] >= c.margin && idx[a] + c.margin < measured.counts()[a];
          }
          const std::size_t m = measured.flatten(idx);
          approx[b][m] = r.values[node];
          if (b == c.boosters.front()) mask[m] = inner ? 1 : 0;
        }
      }
    }

    const Field exact = sample_function(measured, tf);
    LevelResult level;
    level.spacing = spacing;
    for (Booster b : c.boosters) {
      level.errors[b] = error_norms(approx[b], exact.values, mask);
      level.nodes_measured = level.errors[b].count;
    }
    level.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.levels.push_back(std::move(level));
  }

  for (Booster b : c.boosters) {
    auto orders = [&](auto pick) {
      std::vector<double> out;
      for (std::size_t k = 1; k < report.levels.size(); ++k) {
        const double prev = pick(report.levels[k - 1].errors.at(b));
        const double cur = pick(report.levels[k].errors.at(b));
        const double e[2] = {prev, cur};
        try {
          out.push_back(observed_order(e).front());
        } catch (const Error& err) {
          if (err.code() != ErrorCode::nonpositive_error) throw;
          out.push_back(std::numeric_limits<double>::infinity());
        }
      }
      return out;
    };
    report.order_linf[b] = orders([](const ErrorNorms& e) { return e.linf; });
    report.order_rms[b] = orders([](const ErrorNorms& e) { return e.rms; });
  }
  return report;
}

std::string report_csv(const StudyReport& r) {
  std::string out = "level,spacing,method,linf,rms,order_linf,order_rms,nodes_measured\n";
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    const LevelResult& level = r.levels[k];
    for (Booster b : r.config.boosters) {
      const ErrorNorms& e = level.errors.at(b);
      const std::string ol = k == 0 ? "" : number(r.order_linf.at(b)[k - 1]);
      const std::string orms = k == 0 ? "" : number(r.order_rms.at(b)[k - 1]);
      out += fmt::format("{},{},{},{},{},{},{},{}\n", k, number(level.spacing),
                         method_label(r.config, b), number(e.linf), number(e.rms), ol, orms,
                         level.nodes_measured);
    }
  }
  return out;
}

std::string report_table(const StudyReport& r) {
  const StudyConfig& c = r.config;
  constexpr int kCol = 13;
  std::string out;
  out += fmt::format("{}: {}\n", c.name, c.title.empty() ? c.name : c.title);
  out += fmt::format("function: {}\n", test_function(c.function).formula);

  out += fmt::format("{:<{}}", "", kCol);
  for (Booster b : c.boosters) out += fmt::format("| {:<{}}", method_label(c, b), 2 * kCol);
  out += "\n";
  out += fmt::format("{:<{}}", "dx", kCol);
  for (std::size_t i = 0; i < c.boosters.size(); ++i) {
    out += fmt::format("| {:<{}}{:<{}}", "error", kCol, "order", kCol);
  }
  out += "\n";
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    const LevelResult& level = r.levels[k];
    out += fmt::format("{:<{}.6g}", level.spacing, kCol);
    for (Booster b : c.boosters) {
      const std::string order = k == 0 ? "" : fmt::format("{:.6g}", r.order_linf.at(b)[k - 1]);
      out += fmt::format("| {:<{}.5e}{:<{}}", level.errors.at(b).linf, kCol, order, kCol);
    }
    out += "\n";
  }
  if (!r.levels.empty()) {
    out += fmt::format("errors: max norm over {} measured target nodes (finest level)\n",
                       r.levels.back().nodes_measured);
  }
  return out;
}

std::vector<std::string> band_violations(const StudyReport& r) {
  std::vector<std::string> out;
  for (const auto& [booster, band] : r.config.bands) {
    const auto it = r.order_linf.find(booster);
    if (it == r.order_linf.end()) continue;
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      const double o = it->second[k];
      if (!(o >= band.first && o <= band.second)) {
        out.push_back(fmt::format("{} order {:.4f} at level {} outside [{}, {}]",
                                  method_label(r.config, booster), o, k + 1, band.first,
                                  band.second));
      }
    }
  }
  return out;
}

}  // namespace bfi
