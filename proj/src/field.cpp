#include "bfi/field.hpp"

#include <string>

#include "bfi/error.hpp"

namespace bfi {

Field::Field(Grid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw Error(ErrorCode::grid_mismatch, "field has " + std::to_string(values.size()) +
                                              " values for a grid of " +
                                              std::to_string(grid.size()) + " nodes");
  }
}

}  // namespace bfi
