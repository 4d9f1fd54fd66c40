#include "mbspec/grid.hpp"

#include <string>

namespace mbspec {

Grid::Grid(int dim, int points_per_axis) : dim_(dim), n_(points_per_axis) {
  if (dim_ != 2 && dim_ != 3)
    throw ConfigError("grid dimension must be 2 or 3, got " + std::to_string(dim_));
  if (n_ < 8 || n_ % 2 != 0)
    throw ConfigError("points per axis must be an even integer >= 8, got " +
                      std::to_string(n_));
  size_ = 1;
  for (int a = 0; a < dim_; ++a) size_ *= static_cast<std::size_t>(n_);
}

}  // namespace mbspec
