#include "cellgeom/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cellgeom/quadrature.hpp"

namespace cellgeom::analytics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailCutoff = 1e-9;       // outer R truncation level
constexpr double kSeIntegrandCutoff = 1e-10;  // u truncation level

// Quadrature settings per integral family. The intensity integrals feed
// finite differences, so they run much tighter than the rest.
const QuadSpec kIntensitySpec{1e-12, 1e-15, 400};
const QuadSpec kBranchSpecBase{1e-9, 1e-16, 800};
const QuadSpec kOuterSpec{1e-7, 1e-10, 400};
const QuadSpec kUSpec{1e-6, 1e-9, 300};

void check_radius(double r_km, const char* what) {
  if (!(r_km >= 0.0))
    throw std::domain_error(std::string(what) + ": radius must be >= 0");
}

double los_limit_at_infinity(const LosModel& model) {
  return std::holds_alternative<AlwaysLos>(model) ? 1.0 : 0.0;
}

// log P[r > R] for the models with a closed form.
double log_tail_closed(const NetworkConfig& cfg, double r_km) {
  const PathLossParams& pl = cfg.pathloss;
  double r_eq = inverse_equivalent_distance(pl, r_km);
  if (const auto* q = std::get_if<QuadExp>(&cfg.los)) {
    double l2 = q->l * q->l;
    double e_los = std::exp(-r_km * r_km / l2);
    double e_nlos = std::exp(-r_eq * r_eq / l2);
    return kPi * cfg.lambda * (l2 * (e_los - e_nlos) - r_eq * r_eq);
  }
  if (std::holds_alternative<AlwaysLos>(cfg.los))
    return -kPi * cfg.lambda * r_km * r_km;
  if (std::holds_alternative<NeverLos>(cfg.los))
    return -kPi * cfg.lambda * r_eq * r_eq;
  throw std::logic_error("log_tail_closed: no closed form for this LOS model");
}

double log_tail_numeric(const NetworkConfig& cfg, double r_km) {
  double r_eq = inverse_equivalent_distance(cfg.pathloss, r_km);
  auto los_intensity = [&cfg](double v) {
    return los_probability(cfg.los, v) * v;
  };
  auto nlos_intensity = [&cfg](double v) {
    return (1.0 - los_probability(cfg.los, v)) * v;
  };
  double i_los = integrate_finite(los_intensity, 0.0, r_km, kIntensitySpec).value;
  double i_nlos = integrate_finite(nlos_intensity, 0.0, r_eq, kIntensitySpec).value;
  return -2.0 * kPi * cfg.lambda * (i_los + i_nlos);
}

// One branch of the interference exponent:
//   integral over [a, inf) of  p(v) * v / (1 + v^beta / c)  dv,
// with c = s*K/mu. The integrand decays only as v^(1-beta) wherever p has
// a positive limit, which for beta close to 2 leaves mass across dozens of
// decades; quadrature runs on [a, V] and the remainder is summed as a
// power series in c*V^(-beta).
template <class P>
double branch_integral(double c, double beta, double a, const P& p,
                       double p_limit, double lambda) {
  if (p_limit > 0.0 && beta <= 2.0)
    return std::numeric_limits<double>::infinity();  // divergent interference

  double v_cut = std::max(a, std::pow(c, 1.0 / beta));
  if (v_cut == 0.0) v_cut = 1.0;
  while (c * std::pow(v_cut, -beta) > 1e-6) v_cut *= 2.0;
  for (int i = 0; std::abs(p(v_cut) - p_limit) > 1e-12 && i < 200; ++i)
    v_cut *= 2.0;

  auto integrand = [c, beta, &p](double v) {
    return p(v) * v / (1.0 + std::pow(v, beta) / c);
  };
  QuadSpec spec = kBranchSpecBase;
  spec.abs_tol = 1e-10 / std::max(1.0, 2.0 * kPi * lambda);
  double head = integrate_finite(integrand, a, v_cut, spec).value;

  double tail = 0.0;
  if (p_limit > 0.0) {
    double x = c * std::pow(v_cut, -beta);  // <= 1e-6 by construction
    double v2 = v_cut * v_cut;
    tail = p_limit * v2 *
           (x / (beta - 2.0) - x * x / (2.0 * beta - 2.0) +
            x * x * x / (3.0 * beta - 2.0));
  }
  return head + tail;
}

double conditional_ccdf(const NetworkConfig& cfg, double y, double r_km) {
  double s = cfg.mu * y * std::pow(r_km, cfg.pathloss.beta_los) /
             cfg.pathloss.k_los_linear();
  double noise = cfg.sigma2 > 0.0 ? std::exp(-s * cfg.sigma2) : 1.0;
  return noise * laplace_interference(cfg, s, r_km);
}

}  // namespace

double serving_distance_tail(const NetworkConfig& cfg, double r_km) {
  cfg.validate();
  check_radius(r_km, "serving_distance_tail");
  if (has_closed_form_distance(cfg)) return std::exp(log_tail_closed(cfg, r_km));
  return std::exp(log_tail_numeric(cfg, r_km));
}

double serving_distance_tail_numeric(const NetworkConfig& cfg, double r_km) {
  cfg.validate();
  check_radius(r_km, "serving_distance_tail");
  return std::exp(log_tail_numeric(cfg, r_km));
}

bool has_closed_form_distance(const NetworkConfig& cfg) {
  return std::holds_alternative<QuadExp>(cfg.los) ||
         std::holds_alternative<AlwaysLos>(cfg.los) ||
         std::holds_alternative<NeverLos>(cfg.los);
}

double serving_distance_pdf(const NetworkConfig& cfg, double r_km) {
  cfg.validate();
  if (!(r_km > 0.0))
    throw std::domain_error("serving_distance_pdf: radius must be > 0");
  if (!has_closed_form_distance(cfg)) return serving_distance_pdf_numeric(cfg, r_km);

  const PathLossParams& pl = cfg.pathloss;
  double lam = cfg.lambda;
  double k_eq = pl.k_eq();
  double b_eq = pl.beta_eq();
  double r_eq = inverse_equivalent_distance(pl, r_km);
  double tail = std::exp(log_tail_closed(cfg, r_km));
  // d(r_eq^2)/dR = 2 b_eq k_eq^2 R^(2 b_eq - 1)
  double dreq2 = 2.0 * b_eq * k_eq * k_eq * std::pow(r_km, 2.0 * b_eq - 1.0);

  if (const auto* q = std::get_if<QuadExp>(&cfg.los)) {
    double l2 = q->l * q->l;
    double rate = 2.0 * kPi * lam * r_km * std::exp(-r_km * r_km / l2) +
                  kPi * lam * dreq2 * (1.0 - std::exp(-r_eq * r_eq / l2));
    return rate * tail;
  }
  if (std::holds_alternative<AlwaysLos>(cfg.los))
    return 2.0 * kPi * lam * r_km * tail;
  return kPi * lam * dreq2 * tail;  // NeverLos
}

double serving_distance_pdf_numeric(const NetworkConfig& cfg, double r_km) {
  cfg.validate();
  if (!(r_km > 0.0))
    throw std::domain_error("serving_distance_pdf: radius must be > 0");
  double h = std::max(1e-5, 1e-3 * r_km);
  double lo = std::max(0.0, r_km - h);
  double hi = r_km + h;
  double t_lo = std::exp(log_tail_numeric(cfg, lo));
  double t_hi = std::exp(log_tail_numeric(cfg, hi));
  return (t_lo - t_hi) / (hi - lo);
}

double serving_distance_upper_bound(const NetworkConfig& cfg) {
  cfg.validate();
  double r = std::max({1.0 / std::sqrt(cfg.lambda), los_length_scale(cfg.los),
                       1e-3});
  for (int i = 0; i < 200 && serving_distance_tail(cfg, r) >= kTailCutoff; ++i)
    r *= 2.0;
  return r;
}

double laplace_interference(const NetworkConfig& cfg, double s, double r_km) {
  cfg.validate();
  check_radius(r_km, "laplace_interference");
  if (!(s >= 0.0))
    throw std::domain_error("laplace_interference: s must be >= 0");
  if (s == 0.0) return 1.0;

  const PathLossParams& pl = cfg.pathloss;
  double p_inf = los_limit_at_infinity(cfg.los);

  double c_los = s * pl.k_los_linear() / cfg.mu;
  auto p_los = [&cfg](double v) { return los_probability(cfg.los, v); };
  double i_los = branch_integral(c_los, pl.beta_los, r_km, p_los, p_inf,
                                 cfg.lambda);

  double c_nlos = s * pl.k_nlos_linear() / cfg.mu;
  auto p_nlos = [&cfg](double v) { return 1.0 - los_probability(cfg.los, v); };
  double i_nlos = branch_integral(c_nlos, pl.beta_nlos,
                                  inverse_equivalent_distance(pl, r_km),
                                  p_nlos, 1.0 - p_inf, cfg.lambda);

  double exponent = 2.0 * kPi * cfg.lambda * (i_los + i_nlos);
  return std::isinf(exponent) ? 0.0 : std::exp(-exponent);
}

double sir_ccdf(const NetworkConfig& cfg, double y_linear) {
  cfg.validate();
  if (!(y_linear > 0.0))
    throw std::domain_error("sir_ccdf: threshold must be > 0");
  double r_max = serving_distance_upper_bound(cfg);
  auto integrand = [&cfg, y_linear](double r) {
    if (r <= 0.0) return 0.0;
    return conditional_ccdf(cfg, y_linear, r) * serving_distance_pdf(cfg, r);
  };
  double v = integrate_finite(integrand, 0.0, r_max, kOuterSpec).value;
  return std::clamp(v, 0.0, 1.0);
}

double outage_probability(const NetworkConfig& cfg, double threshold_db) {
  return 1.0 - sir_ccdf(cfg, std::pow(10.0, threshold_db / 10.0));
}

double mean_spectral_efficiency(const NetworkConfig& cfg) {
  cfg.validate();
  double r_max = serving_distance_upper_bound(cfg);
  auto inner = [&cfg, r_max](double u) {
    double y = std::exp2(u) - 1.0;
    if (y <= 0.0) return 1.0;  // u = 0: P[log2(1+g) > 0] = 1
    auto integrand = [&cfg, y](double r) {
      if (r <= 0.0) return 0.0;
      return conditional_ccdf(cfg, y, r) * serving_distance_pdf(cfg, r);
    };
    return integrate_finite(integrand, 0.0, r_max, kOuterSpec).value;
  };

  double u_max = 4.0;
  while (inner(u_max) > kSeIntegrandCutoff && u_max < 512.0) u_max *= 2.0;
  return integrate_finite(inner, 0.0, u_max, kUSpec).value;
}

double area_spectral_efficiency(const NetworkConfig& cfg) {
  return cfg.lambda * mean_spectral_efficiency(cfg);
}

std::vector<double> default_threshold_grid_db() {
  std::vector<double> grid(101);
  for (int i = 0; i < 101; ++i) grid[i] = -20.0 + 0.5 * i;
  return grid;
}

Curve sir_ccdf_curve(const NetworkConfig& cfg,
                     const std::vector<double>& thresholds_db) {
  Curve c;
  c.x_label = "threshold_db";
  c.y_label = "ccdf";
  c.points.reserve(thresholds_db.size());
  for (double t : thresholds_db) {
    double y = std::pow(10.0, t / 10.0);
    c.points.push_back({t, sir_ccdf(cfg, y), 0.0});
  }
  c.meta["engine"] = "analytic";
  c.meta["los_model"] = los_model_name(cfg.los);
  return c;
}

}  // namespace cellgeom::analytics
