#include "bfi/bfecc.hpp"

#include <limits>

#include "bfi/error.hpp"

namespace bfi {

GridTransfer::GridTransfer(const Grid& source, const Grid& target, Method method)
    : target_(target),
      forward_(build_transfer_plan(source, target, method)),
      backward_(build_transfer_plan(target, source, method)) {}

GridTransfer::RoundTrip GridTransfer::round_trip(const Field& f) const {
  if (!(f.grid == source())) {
    throw Error(ErrorCode::grid_mismatch, "field does not live on the transfer's source grid");
  }
  RoundTrip rt;
  rt.forward = apply_plan(forward_, std::span<const double>(f.values));
  const Transfer back = apply_plan(backward_, std::span<const double>(rt.forward.values));

  const std::size_t n = f.values.size();
  rt.correction.assign(n, 0.0);
  rt.compensated = back.valid;
  for (std::size_t i = 0; i < n; ++i) {
    if (back.valid[i]) rt.correction[i] = 0.5 * (f.values[i] - back.values[i]);
  }
  return rt;
}

std::vector<NodeStatus> GridTransfer::statuses(const Transfer& fwd,
                                               const std::vector<std::uint8_t>& compensated) const {
  std::vector<NodeStatus> mask(fwd.valid.size(), NodeStatus::invalid);
  const int corners = forward_.corners();
  for (std::size_t e = 0; e < mask.size(); ++e) {
    if (!fwd.valid[e]) continue;
    bool full = true;
    for (int k = 0; k < corners && full; ++k) full = compensated[forward_.node(e, k)] != 0;
    mask[e] = full ? NodeStatus::bfecc : NodeStatus::fallback_linear;
  }
  return mask;
}

BfeccResult GridTransfer::linear(const Field& f) const {
  RoundTrip rt = round_trip(f);
  std::vector<NodeStatus> mask = statuses(rt.forward, rt.compensated);
  return {Field(target_, std::move(rt.forward.values)), std::move(mask)};
}

BfeccResult GridTransfer::bfecc(const Field& f) const {
  RoundTrip rt = round_trip(f);
  std::vector<double> compensated_values(f.values.size());
  for (std::size_t i = 0; i < compensated_values.size(); ++i) {
    compensated_values[i] = f.values[i] + rt.correction[i];
  }
  const Transfer second = apply_plan(forward_, std::span<const double>(compensated_values));

  std::vector<NodeStatus> mask = statuses(rt.forward, rt.compensated);
  std::vector<double> out(mask.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t e = 0; e < out.size(); ++e) {
    if (mask[e] == NodeStatus::bfecc) {
      out[e] = second.values[e];
    } else if (mask[e] == NodeStatus::fallback_linear) {
      out[e] = rt.forward.values[e];
    }
  }
  return {Field(target_, std::move(out)), std::move(mask)};
}

BfeccResult GridTransfer::maccormack(const Field& f) const {
  RoundTrip rt = round_trip(f);

  // The correction is not interpolated: each target node takes it from its
  // departure node, the base corner of its forward stencil.
  std::vector<NodeStatus> mask = statuses(rt.forward, rt.compensated);
  std::vector<double> out(mask.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t e = 0; e < out.size(); ++e) {
    if (mask[e] == NodeStatus::bfecc) {
      out[e] = rt.forward.values[e] + rt.correction[forward_.node(e, 0)];
    } else if (mask[e] == NodeStatus::fallback_linear) {
      out[e] = rt.forward.values[e];
    }
  }
  return {Field(target_, std::move(out)), std::move(mask)};
}

BfeccResult bfecc_interpolate(const Grid& source, const Field& f, const Grid& target,
                              Method method) {
  if (source.dim() != target.dim()) {
    throw Error(ErrorCode::dim_mismatch, "source and target grids differ in dimension");
  }
  if (!(f.grid == source)) throw Error(ErrorCode::grid_mismatch, "field is not on the source grid");
  return GridTransfer(source, target, method).bfecc(f);
}

BfeccResult maccormack_interpolate(const Grid& source, const Field& f, const Grid& target,
                                   Method method) {
  if (source.dim() != target.dim()) {
    throw Error(ErrorCode::dim_mismatch, "source and target grids differ in dimension");
  }
  if (!(f.grid == source)) throw Error(ErrorCode::grid_mismatch, "field is not on the source grid");
  return GridTransfer(source, target, method).maccormack(f);
}

}  // namespace bfi
