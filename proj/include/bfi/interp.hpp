/// @file interp.hpp
/// @brief Local cell interpolation weights and reusable grid-to-point transfer plans.
///
/// Corner ordering everywhere is lexicographic over offsets with the lowest
/// axis fastest: corner k has offset bit a = (k >> a) & 1 on axis a.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bfi/field.hpp"
#include "bfi/grid.hpp"

namespace bfi {

enum class Method { multilinear, lls };

std::string_view to_string(Method m);
/// Accepts "multilinear" or "lls"; throws Error(invalid_argument) otherwise.
Method parse_method(std::string_view name);

/// Weights for the 2^d corners of one cell.
struct CornerWeights {
  std::array<double, 8> values{};
  int count = 0;

  std::span<const double> view() const { return {values.data(), static_cast<std::size_t>(count)}; }
  double operator[](int k) const { return values[k]; }
};

/// Tensor-product weights at cell-local coordinates in [0,1]^d.
CornerWeights multilinear_weights(int dim, const Vec3& local);

/// Weights that evaluate, at `p`, the affine function fitted in the least
/// squares sense to values at the 2^d `vertices`. Throws
/// Error(rank_deficient) for degenerate vertex sets.
CornerWeights lls_weights(int dim, std::span<const Vec3> vertices, const Vec3& p);

/// Precomputed stencils from a source grid to a list of target points.
class TransferPlan {
 public:
  const Grid& source() const { return source_; }
  Method method() const { return method_; }
  std::size_t size() const { return valid_.size(); }
  int corners() const { return corners_; }

  bool valid(std::size_t entry) const { return valid_[entry] != 0; }
  /// Source node of corner k of the entry's cell. Meaningful for valid entries.
  std::size_t node(std::size_t entry, int k) const { return base_[entry] + offsets_[k]; }
  std::span<const double> weights(std::size_t entry) const {
    return {weights_.data() + entry * corners_, static_cast<std::size_t>(corners_)};
  }

 private:
  friend TransferPlan build_transfer_plan(const Grid&, std::span<const Vec3>, Method);
  friend TransferPlan build_transfer_plan(const Grid&, const Grid&, Method);
  TransferPlan(const Grid& source, Method method, std::size_t n);
  template <typename PointAt>
  void fill(const PointAt& point_at);

  Grid source_;
  Method method_;
  int corners_;
  std::array<std::size_t, 8> offsets_{};
  std::vector<std::size_t> base_;
  std::vector<double> weights_;
  std::vector<std::uint8_t> valid_;
};

/// Locate every target in `source` and record its stencil. Targets outside
/// the source hull, or whose location fails, become invalid entries.
TransferPlan build_transfer_plan(const Grid& source, std::span<const Vec3> targets, Method method);
/// Same, with the nodes of `target` as the target points.
TransferPlan build_transfer_plan(const Grid& source, const Grid& target, Method method);

/// Values at the plan's targets. An entry is valid when its stencil is valid
/// and none of the contributing source values is NaN; invalid entries hold NaN.
struct Transfer {
  std::vector<double> values;
  std::vector<std::uint8_t> valid;
};

/// Throws Error(grid_mismatch) if `f` does not live on the plan's source grid.
Transfer apply_plan(const TransferPlan& plan, const Field& f);
/// Values indexed by source node; throws Error(grid_mismatch) on a size mismatch.
Transfer apply_plan(const TransferPlan& plan, std::span<const double> source_values);

}  // namespace bfi
