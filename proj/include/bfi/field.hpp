#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bfi/grid.hpp"

namespace bfi {

/// Scalar values attached one-to-one to the nodes of a grid.
struct Field {
  Grid grid;
  std::vector<double> values;

  Field() = default;
  /// Throws Error(grid_mismatch) if the value count differs from the node count.
  Field(Grid g, std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t node) const { return values[node]; }
};

}  // namespace bfi
