#include "cellgeom/network.hpp"

#include <cmath>
#include <stdexcept>

namespace cellgeom {

void NetworkConfig::validate() const {
  if (!(std::isfinite(lambda) && lambda > 0.0))
    throw std::invalid_argument("lambda must be positive");
  if (!(std::isfinite(mu) && mu > 0.0))
    throw std::invalid_argument("mu must be positive");
  if (!(std::isfinite(sigma2) && sigma2 >= 0.0))
    throw std::invalid_argument("sigma2 must be >= 0");
  pathloss.validate();
  cellgeom::validate(los);
}

}  // namespace cellgeom
