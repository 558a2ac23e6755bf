#include "cellgeom/propagation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cellgeom {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double check_distance(double d_km, const char* what) {
  if (!(d_km >= 0.0))
    throw std::domain_error(std::string(what) + ": distance must be >= 0, got " +
                            std::to_string(d_km));
  return d_km;
}

}  // namespace

double PathLossParams::k_los_linear() const { return std::pow(10.0, -k_los_db / 10.0); }
double PathLossParams::k_nlos_linear() const { return std::pow(10.0, -k_nlos_db / 10.0); }

double PathLossParams::k_eq() const {
  // (K_NL/K_L)^(1/beta_nlos) in the gain convention, i.e.
  // 10^(-(k_nlos_db - k_los_db) / (10 beta_nlos)).
  return std::pow(10.0, (k_los_db - k_nlos_db) / (10.0 * beta_nlos));
}

double PathLossParams::beta_eq() const { return beta_los / beta_nlos; }

void PathLossParams::validate() const {
  require(std::isfinite(k_los_db) && std::isfinite(k_nlos_db) &&
              std::isfinite(beta_los) && std::isfinite(beta_nlos),
          "path-loss parameters must be finite");
  require(k_los_db > 0.0, "k_los_db must be positive");
  require(beta_los > 0.0, "beta_los must be positive");
  require(beta_nlos > 0.0, "beta_nlos must be positive");
  require(beta_nlos > beta_los, "beta_nlos must exceed beta_los");
  require(k_nlos_db > k_los_db, "k_nlos_db must exceed k_los_db");
}

void validate(const LosModel& model) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, QuadExp>) {
          require(std::isfinite(m.l) && m.l > 0.0, "QuadExp: L must be positive");
        } else if constexpr (std::is_same_v<T, ThreeGpp>) {
          require(std::isfinite(m.d0) && m.d0 > 0.0, "ThreeGpp: d0 must be positive");
          require(std::isfinite(m.d1) && m.d1 > 0.0, "ThreeGpp: d1 must be positive");
        } else if constexpr (std::is_same_v<T, ExpLinear>) {
          require(std::isfinite(m.alpha) && m.alpha > 0.0,
                  "ExpLinear: alpha must be positive");
          require(std::isfinite(m.p), "ExpLinear: p must be finite");
        }
      },
      model);
}

const char* los_model_name(const LosModel& model) {
  return std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, QuadExp>) return "quadexp";
        else if constexpr (std::is_same_v<T, ThreeGpp>) return "3gpp";
        else if constexpr (std::is_same_v<T, ExpLinear>) return "explinear";
        else if constexpr (std::is_same_v<T, AlwaysLos>) return "always";
        else return "never";
      },
      model);
}

double los_probability(const LosModel& model, double d_km) {
  check_distance(d_km, "los_probability");
  return std::visit(
      [d_km](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, QuadExp>) {
          double r = d_km / m.l;
          return std::exp(-r * r);
        } else if constexpr (std::is_same_v<T, ThreeGpp>) {
          if (d_km == 0.0) return 1.0;  // continuous extension
          double a = 5.0 * std::exp(-m.d0 / d_km);
          double b = 5.0 * std::exp(-d_km / m.d1);
          return 0.5 - std::min(0.5, a) + std::min(0.5, b);
        } else if constexpr (std::is_same_v<T, ExpLinear>) {
          return std::min(1.0, std::exp(m.p - m.alpha * d_km));
        } else if constexpr (std::is_same_v<T, AlwaysLos>) {
          return 1.0;
        } else {
          return 0.0;
        }
      },
      model);
}

double los_length_scale(const LosModel& model) {
  if (std::holds_alternative<AlwaysLos>(model) ||
      std::holds_alternative<NeverLos>(model))
    return 0.0;
  if (const auto* q = std::get_if<QuadExp>(&model)) return q->l;

  // First distance where p drops to 0.5, by doubling + bisection.
  double hi = 1e-3;
  while (los_probability(model, hi) > 0.5 && hi < 1e6) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (los_probability(model, mid) > 0.5 ? lo : hi) = mid;
  }
  return hi;
}

double path_gain(const PathLossParams& p, double d_km, bool los) {
  if (!(d_km > 0.0))
    throw std::domain_error("path_gain: distance must be > 0, got " +
                            std::to_string(d_km));
  double k = los ? p.k_los_linear() : p.k_nlos_linear();
  double beta = los ? p.beta_los : p.beta_nlos;
  return k * std::pow(d_km, -beta);
}

double equivalent_distance(const PathLossParams& p, double d_nlos_km) {
  check_distance(d_nlos_km, "equivalent_distance");
  double coeff = std::pow(10.0, (p.k_nlos_db - p.k_los_db) / (10.0 * p.beta_los));
  return coeff * std::pow(d_nlos_km, p.beta_nlos / p.beta_los);
}

double inverse_equivalent_distance(const PathLossParams& p, double d_los_km) {
  check_distance(d_los_km, "inverse_equivalent_distance");
  return p.k_eq() * std::pow(d_los_km, p.beta_eq());
}

}  // namespace cellgeom
