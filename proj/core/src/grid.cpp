#include "gsqg/grid.hpp"

#include <cmath>
#include <string>

#include "gsqg/error.hpp"

namespace gsqg {

Grid2D::Grid2D(std::size_t n_side, double box_length) : n_(n_side), length_(box_length) {
  if (n_side < 8 || (n_side & (n_side - 1)) != 0) {
    throw ConfigError("grid n_side must be a power of two >= 8, got " + std::to_string(n_side));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw ConfigError("grid box_length must be positive and finite");
  }
}

double Grid2D::max_wavenumber() const {
  return std::sqrt(2.0) * fundamental_wavenumber() * static_cast<double>(n_ / 2);
}

}  // namespace gsqg
