#include "cellgeom/curve.hpp"

#include <cmath>
#include <stdexcept>

namespace cellgeom {

void Curve::validate() const {
  for (size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].y))
      throw std::invalid_argument("Curve: non-finite y at index " +
                                  std::to_string(i));
    if (i > 0 && !(points[i].x > points[i - 1].x))
      throw std::invalid_argument("Curve: x must be strictly increasing");
  }
}

}  // namespace cellgeom
