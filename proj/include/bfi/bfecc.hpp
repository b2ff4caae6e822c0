/// @file bfecc.hpp
/// @brief Back-and-forth error compensation and correction between two grids.
///
/// With P_fwd the source->target plan and P_bwd the target->source plan:
///   f*    = P_fwd f                      forward values on the target
///   f~    = P_bwd f*                     round-trip values on the source
///   f^    = f + (f - f~)/2               compensated source values
///   f_new = P_fwd f^                     (BFECC)
///   f_new = f* + (f - f~)_b/2            (modified MacCormack)
/// where b is the base corner of the target node's forward stencil, the node
/// the target value departs from when the transfer is read as one advection
/// step. Transporting the correction with P_fwd instead would reproduce BFECC
/// exactly, since P_fwd is linear.
/// Where f~ is unavailable the source value is left uncompensated.

#pragma once

#include <cstdint>
#include <vector>

#include "bfi/field.hpp"
#include "bfi/interp.hpp"

namespace bfi {

enum class NodeStatus : std::uint8_t {
  bfecc,            ///< every pass had a complete stencil
  fallback_linear,  ///< forward stencil complete, compensation chain not; value = f*
  invalid,          ///< no forward stencil; value = NaN
};

struct BfeccResult {
  Field values;
  std::vector<NodeStatus> mask;
};

/// Both transfer plans between a source and a target grid, built once and
/// reused by every scheme.
class GridTransfer {
 public:
  /// Throws Error(dim_mismatch) when the grids differ in dimension.
  GridTransfer(const Grid& source, const Grid& target, Method method);

  const Grid& source() const { return forward_.source(); }
  const Grid& target() const { return target_; }
  const TransferPlan& forward() const { return forward_; }
  const TransferPlan& backward() const { return backward_; }

  /// Plain underlying interpolation (f*), masked like the boosted schemes.
  BfeccResult linear(const Field& f) const;
  BfeccResult bfecc(const Field& f) const;
  BfeccResult maccormack(const Field& f) const;

 private:
  struct RoundTrip {
    Transfer forward;                 // f*
    std::vector<double> correction;   // (f - f~)/2, zero where f~ is invalid
    std::vector<std::uint8_t> compensated;
  };
  RoundTrip round_trip(const Field& f) const;
  std::vector<NodeStatus> statuses(const Transfer& fwd,
                                   const std::vector<std::uint8_t>& compensated) const;

  Grid target_;
  TransferPlan forward_;
  TransferPlan backward_;
};

/// Throws Error(dim_mismatch) or Error(grid_mismatch) (f not on `source`).
BfeccResult bfecc_interpolate(const Grid& source, const Field& f, const Grid& target, Method method);
BfeccResult maccormack_interpolate(const Grid& source, const Field& f, const Grid& target,
                                   Method method);

}  // namespace bfi
