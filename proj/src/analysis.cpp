#include "bfi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bfi/error.hpp"

namespace bfi {

ErrorNorms error_norms(std::span<const double> approx, std::span<const double> exact,
                       std::span<const std::uint8_t> mask) {
  if (approx.size() != exact.size() || (!mask.empty() && mask.size() != approx.size())) {
    throw Error(ErrorCode::invalid_argument, "error_norms: size mismatch");
  }
  ErrorNorms n;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    if (!mask.empty() && !mask[i]) continue;
    const double d = std::abs(approx[i] - exact[i]);
    n.linf = std::max(n.linf, d);
    sum_sq += d * d;
    ++n.count;
  }
  if (n.count == 0) throw Error(ErrorCode::empty_mask, "error_norms: mask selects no nodes");
  n.rms = std::sqrt(sum_sq / static_cast<double>(n.count));
  return n;
}

std::vector<double> observed_order(std::span<const double> errors) {
  if (errors.size() < 2) {
    throw Error(ErrorCode::insufficient_levels, "observed_order needs at least two levels");
  }
  for (double e : errors) {
    if (!(e > 0.0)) {
      throw Error(ErrorCode::nonpositive_error,
                  "observed_order: non-positive error " + std::to_string(e));
    }
  }
  std::vector<double> orders;
  for (std::size_t k = 1; k < errors.size(); ++k) {
    orders.push_back(std::log2(errors[k - 1] / errors[k]));
  }
  return orders;
}

double three_grid_order(std::span<const double> coarse, std::span<const double> medium,
                        std::span<const double> fine) {
  if (coarse.size() != medium.size() || medium.size() != fine.size() || coarse.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "three_grid_order: fields must share a non-empty point set");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    num += (coarse[i] - medium[i]) * (coarse[i] - medium[i]);
    den += (medium[i] - fine[i]) * (medium[i] - fine[i]);
  }
  if (den == 0.0) {
    throw Error(ErrorCode::zero_denominator, "three_grid_order: finest difference vanishes");
  }
  return std::log(std::sqrt(num) / std::sqrt(den)) / std::log(2.0);
}

double extrapolate_to_zero(std::span<const double> h, std::span<const double> q) {
  if (h.size() != q.size() || h.empty()) {
    throw Error(ErrorCode::invalid_argument, "extrapolate_to_zero: size mismatch");
  }
  std::vector<double> p(q.begin(), q.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      // P_{i..i+m}(0) from P_{i..i+m-1}(0) and P_{i+1..i+m}(0).
      p[i] = (h[i] * p[i + 1] - h[i + m] * p[i]) / (h[i] - h[i + m]);
    }
  }
  return p[0];
}

}  // namespace bfi
