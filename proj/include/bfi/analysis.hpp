/// @file analysis.hpp
/// @brief Error norms, convergence-order estimates and leading-error checks.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bfi/grid.hpp"
#include "bfi/test_functions.hpp"

namespace bfi {

struct ErrorNorms {
  double linf = 0.0;
  double rms = 0.0;
  std::size_t count = 0;
};

/// Norms of approx - exact over entries with mask != 0. An empty mask span
/// selects every entry. Throws Error(empty_mask) when nothing is selected.
ErrorNorms error_norms(std::span<const double> approx, std::span<const double> exact,
                       std::span<const std::uint8_t> mask = {});

/// order_k = log2(e_{k-1} / e_k) for errors at successively halved spacings.
/// Throws Error(insufficient_levels) for fewer than two errors and
/// Error(nonpositive_error) if any error is <= 0.
std::vector<double> observed_order(std::span<const double> errors);

/// kappa = log2(||f_h - f_h/2||_2 / ||f_h/2 - f_h/4||_2) over a common point set.
/// Throws Error(zero_denominator) if the two finest fields coincide.
double three_grid_order(std::span<const double> coarse, std::span<const double> medium,
                        std::span<const double> fine);

/// Value at h = 0 of the polynomial through (h_i, q_i) (Neville's scheme).
double extrapolate_to_zero(std::span<const double> h, std::span<const double> q);

enum class ExpansionScheme { linear, bfecc };

struct ExpansionRequest {
  int dim = 1;                 ///< 1 or 2
  Vec3 shift{0.25, 0.0, 0.0};  ///< fractional shifts (alpha, beta)
  const TestFunction* function = nullptr;
  std::vector<double> spacings{0.02, 0.01, 0.005};
  ExpansionScheme scheme = ExpansionScheme::bfecc;
};

struct ExpansionCheck {
  int power = 3;                    ///< error measured as (f_new - f) / h^power
  std::vector<double> factors;      ///< closed-form coefficient per axis
  std::vector<double> partials;     ///< matching axis derivative at the probe
  double predicted = 0.0;           ///< sum of factors * partials
  double estimated = 0.0;           ///< extrapolated limit of the scaled errors
  double relative_gap = 0.0;
  std::vector<double> scaled_errors;
  Vec3 probe{};
};

/// Measure the leading error term of plain multilinear or BFECC interpolation
/// at the test function's probe point and compare it with the closed-form
/// Taylor coefficient. For 1D BFECC at alpha = 1/2 the cubic term vanishes and
/// the quartic term is checked instead. Throws Error(insufficient_levels)
/// for fewer than three spacings.
ExpansionCheck leading_error_check(const ExpansionRequest& request);

struct ExpansionCase {
  std::string label;
  ExpansionRequest request;
};

/// Default verification matrix: 1D BFECC at alpha in {0.1, 0.25, 0.4, 0.5},
/// the 1D linear expansion, and 2D BFECC at (0.25, 0.25), (0.4, 0.1) and the
/// separable case (0.25, 0).
std::vector<ExpansionCase> expansion_matrix();

}  // namespace bfi
