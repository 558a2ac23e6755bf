#pragma once

#include "cellgeom/propagation.hpp"

namespace cellgeom {

// Downlink network description shared by the analytic and Monte Carlo
// engines. lambda is the BS density in BS/km^2; mu is the Rayleigh fading
// rate; sigma2 is the noise power normalized by the transmit power
// (0 = interference limited).
struct NetworkConfig {
  double lambda = 100.0;
  double mu = 1.0;
  double sigma2 = 0.0;
  PathLossParams pathloss;
  LosModel los = QuadExp{};

  void validate() const;  // throws std::invalid_argument
};

}  // namespace cellgeom
