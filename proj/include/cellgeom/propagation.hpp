#pragma once

#include <variant>

namespace cellgeom {

// Two-branch power-law path loss. k_*_db is the path loss in dB at 1 km,
// so the linear gain of a branch is 10^(-k_db/10) * d^(-beta). Every
// distance in this library is in km.
struct PathLossParams {
  double k_los_db = 103.8;
  double beta_los = 2.09;
  double k_nlos_db = 145.4;
  double beta_nlos = 3.75;

  double k_los_linear() const;
  double k_nlos_linear() const;

  // Coefficients of the NLOS<->LOS equal-power distance mapping:
  // inverse_equivalent_distance(d) = k_eq() * d^beta_eq().
  double k_eq() const;
  double beta_eq() const;

  void validate() const;  // throws std::invalid_argument
};

// LOS probability models. Lengths in km; ExpLinear::alpha is per km.
struct QuadExp {
  double l = 0.0825;
};
struct ThreeGpp {
  double d0 = 0.156;
  double d1 = 0.030;
};
struct ExpLinear {
  double alpha = 8.59;
  double p = 0.101;
};
struct AlwaysLos {};
struct NeverLos {};

using LosModel = std::variant<QuadExp, ThreeGpp, ExpLinear, AlwaysLos, NeverLos>;

void validate(const LosModel& model);  // throws std::invalid_argument
const char* los_model_name(const LosModel& model);

// P[LOS at distance d]; in [0,1] for every model and every d >= 0.
// ExpLinear is clamped to 1 below d = p/alpha; ThreeGpp(0) = 1 by
// continuous extension. Throws std::domain_error for d < 0.
double los_probability(const LosModel& model, double d_km);

// Distance at which the LOS probability first drops to 0.5; 0 for the
// degenerate models. Used as the model's characteristic length.
double los_length_scale(const LosModel& model);

// Linear power gain 10^(-k_db/10) * d^(-beta) of the selected branch.
// Throws std::domain_error for d <= 0 (singular at the origin).
double path_gain(const PathLossParams& p, double d_km, bool los);

// LOS distance delivering the same average power as an NLOS station at
// d_nlos_km: (K_L/K_NL)^(1/beta_los) * d^(beta_nlos/beta_los).
double equivalent_distance(const PathLossParams& p, double d_nlos_km);

// Exact inverse of the above: the NLOS distance whose power matches a LOS
// station at d_los_km, k_eq * d^beta_eq.
double inverse_equivalent_distance(const PathLossParams& p, double d_los_km);

}  // namespace cellgeom
