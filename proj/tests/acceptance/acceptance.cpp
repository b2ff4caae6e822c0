// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed
// here and never derived from the measured values.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bfi/analysis.hpp"
#include "bfi/bfecc.hpp"
#include "bfi/error.hpp"
#include "bfi/presets.hpp"
#include "bfi/study.hpp"

using namespace bfi;

namespace {

struct Timed {
  StudyReport report;
  double seconds;
};

Timed run_preset(std::string_view name) {
  const StudyConfig c = parse_config(find_preset(name).config);
  const auto t0 = std::chrono::steady_clock::now();
  StudyReport r = run_study(c);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(r), s};
}

std::string list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += fmt::format("{}{:.3f}", i ? ", " : "", v[i]);
  return "{" + out + "}";
}

bool near_each(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!(std::abs(got[i] - want[i]) <= tol)) return false;
  }
  return true;
}

bool within(const std::vector<double>& got, double lo, double hi) {
  for (double o : got) {
    if (!(o >= lo && o <= hi)) return false;
  }
  return !got.empty();
}

bool smaller_everywhere(const StudyReport& r, Booster a, Booster b) {
  for (const LevelResult& level : r.levels) {
    if (!(level.errors.at(a).linf < level.errors.at(b).linf)) return false;
  }
  return !r.levels.empty();
}

const std::vector<double>& orders(const StudyReport& r, Booster b) { return r.order_linf.at(b); }

int failures = 0;

void report(int id, std::string_view name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  fmt::print("[{}] criterion {:>2} {}: {}\n", ok ? "PASS" : "FAIL", id, name, detail);
}

void guarded(int id, std::string_view name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, fmt::format("exception: {}", e.what()));
  }
}

// ---- property helpers -------------------------------------------------------

double wavy(const Vec3& p) { return 2.0 + std::sin(3.0 * p[0] + p[1]) * std::cos(2.0 * p[2]); }
double affine(const Vec3& p) { return 0.7 + 1.3 * p[0] - 2.1 * p[1] + 0.4 * p[2]; }

Field sample(const Grid& g, double (*f)(const Vec3&)) {
  std::vector<double> v(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) v[n] = f(g.position(n));
  return {g, std::move(v)};
}

Grid box(int dim, std::size_t n, double h) {
  return make_uniform_grid(dim, {n, n, n}, {h, h, h}, {0.0, 0.0, 0.0});
}

bool zero_shift_identity() {
  for (int dim = 1; dim <= 3; ++dim) {
    const Grid g = box(dim, 9, 0.125);
    const Field f = sample(g, wavy);
    const GridTransfer t(g, g, Method::multilinear);
    for (const BfeccResult& r : {t.bfecc(f), t.maccormack(f)}) {
      if (std::memcmp(r.values.values.data(), f.values.data(), f.size() * sizeof(double)) != 0) {
        return false;
      }
    }
  }
  return true;
}

double affine_error() {
  const Grid src = box(3, 13, 0.1);
  const std::vector<Grid> targets{
      shift_grid(box(3, 12, 0.1), {0.025, 0.05, 0.075}),
      rotate_grid(shift_grid(box(3, 12, 0.1), {0.02, 0.02, 0.02}), 3.0, {0, 0, 1},
                  {0.6, 0.6, 0.6}),
      shift_grid(perturb_grid(box(3, 15, 0.08), 0.1, {1.12, 1.12, 1.12}), {0.62, 0.62, 0.62})};
  const Field f = sample(src, affine);
  double worst = 0.0;
  for (const Grid& target : targets) {
    for (Method m : {Method::multilinear, Method::lls}) {
      const GridTransfer t(src, target, m);
      for (const BfeccResult& r : {t.bfecc(f), t.maccormack(f)}) {
        for (std::size_t n = 0; n < target.size(); ++n) {
          if (r.mask[n] == NodeStatus::invalid) continue;
          worst = std::max(worst, std::abs(r.values[n] - affine(target.position(n))));
        }
      }
    }
  }
  return worst;
}

double partition_error() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  const Grid src = shift_grid(
      perturb_grid(box(3, 12, 0.1), 0.2, {1.1, 1.1, 1.1}), {0.55, 0.55, 0.55});
  std::vector<Vec3> pts;
  for (int i = 0; i < 500; ++i) pts.push_back({0.1 + 0.9 * u(rng), 0.1 + 0.9 * u(rng), 0.1 + 0.9 * u(rng)});
  for (Method m : {Method::multilinear, Method::lls}) {
    const TransferPlan plan = build_transfer_plan(src, pts, m);
    for (std::size_t e = 0; e < plan.size(); ++e) {
      if (!plan.valid(e)) continue;
      double sum = 0.0;
      for (double w : plan.weights(e)) sum += w;
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  }
  return worst;
}

double linearity_error() {
  const Grid src = box(2, 21, 0.05);
  const Grid target = rotate_grid(shift_grid(src, {0.012, 0.031, 0}), 7.0, {}, {0.5, 0.5, 0});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(src.size()), b(src.size()), c(src.size());
  for (std::size_t n = 0; n < src.size(); ++n) {
    a[n] = u(rng);
    b[n] = u(rng);
    c[n] = 2.5 * a[n] - 0.75 * b[n];
  }
  double worst = 0.0;
  for (Method m : {Method::multilinear, Method::lls}) {
    const GridTransfer t(src, target, m);
    const BfeccResult ra = t.bfecc({src, a}), rb = t.bfecc({src, b}), rc = t.bfecc({src, c});
    for (std::size_t n = 0; n < target.size(); ++n) {
      if (rc.mask[n] == NodeStatus::invalid) continue;
      worst = std::max(worst, std::abs(rc.values[n] - (2.5 * ra.values[n] - 0.75 * rb.values[n])));
    }
  }
  return worst;
}

// Independent 1D transcription: forward, backward, compensate, forward.
double transcription_error() {
  const double h = 0.1, alpha = 0.3;
  const std::size_t n = 8;
  const Grid src = make_uniform_grid(1, {n, 1, 1}, {h, 1, 1}, {});
  const Grid tgt = shift_grid(src, {alpha * h, 0, 0});
  std::vector<double> x(n), y(n), f(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(i) * h;
    y[i] = x[i] + alpha * h;
    f[i] = std::exp(x[i]) * std::sin(4.0 * x[i]);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto lerp = [](const std::vector<double>& xs, const std::vector<double>& fs, double q) {
    if (q < xs.front() || q > xs.back()) return std::numeric_limits<double>::quiet_NaN();
    std::size_t i = 0;
    while (i + 2 < xs.size() && q >= xs[i + 1]) ++i;
    const double t = (q - xs[i]) / (xs[i + 1] - xs[i]);
    return (1.0 - t) * fs[i] + t * fs[i + 1];
  };
  std::vector<double> fstar(n), fhat(n);
  std::vector<bool> comp(n);
  for (std::size_t j = 0; j < n; ++j) fstar[j] = lerp(x, f, y[j]);
  for (std::size_t i = 0; i < n; ++i) {
    const double ft = lerp(y, fstar, x[i]);
    comp[i] = !std::isnan(ft);
    fhat[i] = comp[i] ? f[i] + (f[i] - ft) / 2.0 : f[i];
  }
  const BfeccResult r = bfecc_interpolate(src, Field(src, f), tgt, Method::multilinear);
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double expected = nan;
    if (!std::isnan(fstar[j])) {
      const std::size_t i = j;  // alpha in (0,1): cell j contains y_j
      expected = comp[i] && comp[i + 1] ? lerp(x, fhat, y[j]) : fstar[j];
    }
    if (std::isnan(expected) != std::isnan(r.values[j])) return 1.0;
    if (!std::isnan(expected)) worst = std::max(worst, std::abs(r.values[j] - expected));
  }
  return worst;
}

double round_trip_error() {
  const double h = 0.05;
  const Grid g = shift_grid(
      perturb_grid(make_uniform_grid(3, {9, 9, 9}, {h, h, h}, {}), 0.3, {0.4, 0.4, 0.4}),
      {0.01, 0.02, -0.01});
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> cell(0, 7);
  double worst = 0.0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Index3 c{cell(rng), cell(rng), cell(rng)};
    const Vec3 p = g.cell_point(c, {u(rng), u(rng), u(rng)});
    const CellLocation loc = g.locate(p);
    if (!loc.inside) return 1.0;
    const Vec3 q = g.cell_point(loc.cell, loc.local);
    worst = std::max(worst, std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]));
  }
  return worst;
}

}  // namespace

int main() {
  guarded(1, "1D quarter shift", [] {
    const Timed t = run_preset("table1");
    const auto& lin = orders(t.report, Booster::none);
    const auto& bf = orders(t.report, Booster::bfecc);
    const bool ok = near_each(lin, {2.11, 2.06, 2.03}, 0.15) &&
                    near_each(bf, {3.00, 3.00, 3.00}, 0.15) && t.seconds < 1.0;
    report(1, "1D quarter shift", ok,
           fmt::format("linear {} bfecc {} (tol 0.15), {:.3f}s (< 1s)", list(lin), list(bf),
                       t.seconds));
  });

  guarded(2, "2D centroid super-convergence", [] {
    const Timed t = run_preset("table3");
    const auto& lin = orders(t.report, Booster::none);
    const auto& bf = orders(t.report, Booster::bfecc);
    const bool ok = near_each(bf, {3.98, 4.01, 3.99}, 0.2) &&
                    near_each(lin, {2.0, 2.0, 2.0}, 0.15) && t.seconds < 5.0;
    report(2, "2D centroid super-convergence", ok,
           fmt::format("bfecc {} (tol 0.2), bilinear {} (2 +- 0.15), {:.3f}s (< 5s)", list(bf),
                       list(lin), t.seconds));
  });

  guarded(3, "BFECC vs MacCormack on least squares", [] {
    const Timed q = run_preset("table4");
    const Timed c = run_preset("table7");
    const bool quarter = within(orders(q.report, Booster::bfecc), 2.8, 3.2) &&
                         within(orders(q.report, Booster::maccormack), 2.8, 3.2);
    const bool centroid = within(orders(c.report, Booster::bfecc), 3.8, 4.2) &&
                          within(orders(c.report, Booster::maccormack), 2.8, 3.2);
    const bool smaller = smaller_everywhere(q.report, Booster::bfecc, Booster::maccormack) &&
                         smaller_everywhere(c.report, Booster::bfecc, Booster::maccormack);
    report(3, "BFECC vs MacCormack on least squares", quarter && centroid && smaller,
           fmt::format("quarter bfecc {} mac {} ([2.8,3.2]); centroid bfecc {} ([3.8,4.2]) "
                       "mac {} ([2.8,3.2]); bfecc error smaller at every level: {}",
                       list(orders(q.report, Booster::bfecc)),
                       list(orders(q.report, Booster::maccormack)),
                       list(orders(c.report, Booster::bfecc)),
                       list(orders(c.report, Booster::maccormack)), smaller));
  });

  guarded(4, "3D spacing ratio sqrt(2)", [] {
    const Timed t = run_preset("table8");
    const auto& bf = orders(t.report, Booster::bfecc);
    const bool smaller = smaller_everywhere(t.report, Booster::bfecc, Booster::none);
    report(4, "3D spacing ratio sqrt(2)", within(bf, 1.85, 2.2) && smaller,
           fmt::format("bfecc {} ([1.85,2.2]); bfecc error below trilinear at every level: {}",
                       list(bf), smaller));
  });

  guarded(5, "3D perturbed target", [] {
    const Timed t = run_preset("table9");
    const auto& bf = orders(t.report, Booster::bfecc);
    const double finest = t.report.levels.back().seconds;
    report(5, "3D perturbed target", near_each(bf, {2.79, 2.91, 3.06}, 0.25) && finest < 60.0,
           fmt::format("bfecc {} (tol 0.25), finest level {:.2f}s (< 60s)", list(bf), finest));
  });

  guarded(6, "3D rotated target", [] {
    const Timed t = run_preset("table10");
    const auto& bf = orders(t.report, Booster::bfecc);
    const bool smaller = smaller_everywhere(t.report, Booster::bfecc, Booster::none);
    report(6, "3D rotated target", smaller && !bf.empty() && bf.back() < 2.5,
           fmt::format("bfecc {} (final < 2.5); bfecc error below trilinear at every level: {}",
                       list(bf), smaller));
  });

  guarded(7, "3D spacing 1:0.9:1.2", [] {
    // "Tends to order p": the final order lies within tol of p and every
    // order lies within tol of the reference column, whose first entries
    // (3.21, 3.22) are themselves pre-asymptotic.
    auto tends = [](const std::vector<double>& got, double p, const std::vector<double>& column,
                    double tol) {
      return !got.empty() && std::abs(got.back() - p) <= tol && near_each(got, column, tol);
    };
    const auto q = orders(run_preset("table11").report, Booster::bfecc);
    const auto c = orders(run_preset("table12").report, Booster::bfecc);
    const auto l = orders(run_preset("table13").report, Booster::bfecc);
    const bool ok = tends(q, 3.0, {3.21, 3.06, 3.01}, 0.2) &&
                    tends(c, 4.0, {3.94, 3.99, 4.00}, 0.2) &&
                    tends(l, 3.0, {3.22, 3.06, 3.01}, 0.25);
    report(7, "3D spacing 1:0.9:1.2", ok,
           fmt::format("quarter {} (-> 3, tol 0.2), centroid {} (-> 4, tol 0.2), least squares "
                       "{} (-> 3, tol 0.25)",
                       list(q), list(c), list(l)));
  });

  guarded(8, "leading-error expansions", [] {
    bool ok = true;
    std::string detail;
    for (const ExpansionCase& c : expansion_matrix()) {
      if (c.request.scheme != ExpansionScheme::bfecc) continue;
      const ExpansionCheck r = leading_error_check(c.request);
      ok = ok && r.relative_gap <= 0.05;
      detail += fmt::format("{}{} h^{} gap {:.1e}", detail.empty() ? "" : "; ", c.label, r.power,
                            r.relative_gap);
    }
    report(8, "leading-error expansions", ok, detail + " (<= 0.05)");
  });

  guarded(9, "property suite", [] {
    const bool identity = zero_shift_identity();
    const double aff = affine_error(), pou = partition_error(), lin = linearity_error(),
                 lit = transcription_error(), loc = round_trip_error();
    const bool ok = identity && aff <= 1e-12 && pou <= 1e-13 && lin <= 1e-12 && lit <= 1e-14 &&
                    loc <= 1e-10;
    report(9, "property suite", ok,
           fmt::format("zero-shift bitwise {}, affine {:.1e} (<= 1e-12), partition of unity "
                       "{:.1e} (<= 1e-13), linearity {:.1e} (<= 1e-12), 1D transcription "
                       "{:.1e} (<= 1e-14), locate round trip {:.1e} (<= 1e-10)",
                       identity, aff, pou, lin, lit, loc));
  });

  guarded(10, "scope of reproduction", [] {
    const std::vector<double> fine{1.0, 2.0, 3.0}, medium{1.001, 2.001, 3.001},
        coarse{1.005, 2.005, 3.005};
    const double kappa = three_grid_order(coarse, medium, fine);
    bool degenerate = false;
    try {
      three_grid_order(coarse, fine, fine);
    } catch (const Error& e) {
      degenerate = e.code() == ErrorCode::zero_denominator;
    }
    report(10, "scope of reproduction", std::abs(kappa - 2.0) <= 1e-9 && degenerate,
           fmt::format("flow-problem results are not reproduced; three-grid estimator gives "
                       "{:.6f} on a constructed ratio of 4 and rejects a vanishing "
                       "denominator: {}",
                       kappa, degenerate));
  });

  fmt::print("{} criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
