// Leading-error measurement for plain and BFECC multilinear interpolation.
//
// For each spacing h a small source lattice is laid out so that the target
// node of index K (the lattice centre) lands on the probe point after the
// fractional shift. The scaled error (f_new - f)/h^p then tends to the Taylor
// coefficient of the h^p term as h -> 0; polynomial extrapolation in h
// removes the O(h) and O(h^2) corrections.

#include <cmath>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "bfi/analysis.hpp"
#include "bfi/bfecc.hpp"
#include "bfi/error.hpp"

namespace bfi {

namespace {

constexpr std::size_t kHalfWidth = 4;

double cubic_factor(double a) { return a * (a - 1.0) * (8.0 * a - 4.0) / 24.0; }
double quartic_factor(double a) { return -9.0 * (a * (a - 1.0)) * (a * (a - 1.0)) / 24.0; }
double quadratic_factor(double a) { return a * (1.0 - a) / 2.0; }

}  // namespace

ExpansionCheck leading_error_check(const ExpansionRequest& req) {
  if (req.dim != 1 && req.dim != 2) {
    throw Error(ErrorCode::invalid_argument, "leading_error_check supports 1D and 2D only");
  }
  if (req.function == nullptr) {
    throw Error(ErrorCode::invalid_argument, "leading_error_check needs a test function");
  }
  if (req.spacings.size() < 3) {
    throw Error(ErrorCode::insufficient_levels, "leading_error_check needs at least 3 spacings");
  }
  for (int a = 0; a < req.dim; ++a) {
    if (!(req.shift[a] >= 0.0 && req.shift[a] < 1.0)) {
      throw Error(ErrorCode::invalid_argument, "fractional shifts must lie in [0,1)");
    }
  }
  const TestFunction& tf = *req.function;
  const Vec3 probe = tf.probe;

  ExpansionCheck out;
  out.probe = probe;
  if (req.scheme == ExpansionScheme::linear) {
    out.power = 2;
    for (int a = 0; a < req.dim; ++a) {
      out.factors.push_back(quadratic_factor(req.shift[a]));
      out.partials.push_back(tf.axis_derivative(probe, a, 2));
    }
  } else if (req.dim == 1 && std::abs(8.0 * req.shift[0] - 4.0) < 1e-12) {
    out.power = 4;
    out.factors.push_back(quartic_factor(req.shift[0]));
    out.partials.push_back(tf.axis_derivative(probe, 0, 4));
  } else {
    out.power = 3;
    bool any = false;
    for (int a = 0; a < req.dim; ++a) {
      out.factors.push_back(cubic_factor(req.shift[a]));
      out.partials.push_back(tf.axis_derivative(probe, a, 3));
      any = any || out.factors.back() != 0.0;
    }
    if (!any) {
      throw Error(ErrorCode::invalid_argument,
                  "no closed-form leading term: every cubic coefficient vanishes");
    }
  }
  for (std::size_t a = 0; a < out.factors.size(); ++a) {
    out.predicted += out.factors[a] * out.partials[a];
  }

  for (double h : req.spacings) {
    if (!(h > 0.0)) throw Error(ErrorCode::invalid_argument, "spacings must be positive");
    Index3 counts{1, 1, 1};
    Vec3 spacing{1.0, 1.0, 1.0};
    Vec3 origin{};
    Vec3 w{};
    for (int a = 0; a < req.dim; ++a) {
      counts[a] = 2 * kHalfWidth + 1;
      spacing[a] = h;
      origin[a] = probe[a] - req.shift[a] * h - static_cast<double>(kHalfWidth) * h;
      w[a] = req.shift[a] * h;
    }
    const Grid source = make_uniform_grid(req.dim, counts, spacing, origin);
    const Grid target = shift_grid(source, w);
    const Field f = sample_function(source, tf);

    const GridTransfer transfer(source, target, Method::multilinear);
    const BfeccResult r =
        req.scheme == ExpansionScheme::linear ? transfer.linear(f) : transfer.bfecc(f);
    const std::size_t node = target.flatten({kHalfWidth, req.dim == 2 ? kHalfWidth : 0, 0});
    if (r.mask[node] != NodeStatus::bfecc) {
      throw Error(ErrorCode::invalid_argument, "probe node is not fully compensated");
    }
    const double exact = tf.value(target.position(node));
    out.scaled_errors.push_back((r.values[node] - exact) / std::pow(h, out.power));
  }

  out.estimated = extrapolate_to_zero(req.spacings, out.scaled_errors);
  out.relative_gap = std::abs(out.estimated - out.predicted) / std::abs(out.predicted);
  return out;
}

std::vector<ExpansionCase> expansion_matrix() {
  const TestFunction* f1 = &test_function("sin_pi_x");
  const TestFunction* f2 = &test_function("sin_pi_x_2y");
  std::vector<ExpansionCase> out;
  for (double a : {0.1, 0.25, 0.4, 0.5}) {
    ExpansionRequest r;
    r.dim = 1;
    r.shift = {a, 0.0, 0.0};
    r.function = f1;
    out.push_back({fmt::format("1D bfecc alpha={:g}", a), r});
  }
  {
    ExpansionRequest r;
    r.dim = 1;
    r.shift = {0.25, 0.0, 0.0};
    r.function = f1;
    r.scheme = ExpansionScheme::linear;
    out.push_back({"1D linear alpha=0.25", r});
  }
  for (const auto& [a, b] : {std::pair{0.25, 0.25}, std::pair{0.4, 0.1}, std::pair{0.25, 0.0}}) {
    ExpansionRequest r;
    r.dim = 2;
    r.shift = {a, b, 0.0};
    r.function = f2;
    out.push_back({fmt::format("2D bfecc alpha={:g} beta={:g}", a, b), r});
  }
  return out;
}

}  // namespace bfi
