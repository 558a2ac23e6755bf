#pragma once

#include <vector>

#include "cellgeom/curve.hpp"
#include "cellgeom/network.hpp"

namespace cellgeom::analytics {

// Distribution of the serving distance r, the distance of the strongest
// (fading-averaged) BS expressed in equivalent-LOS coordinates.
//
// serving_distance_tail is P[r > R]: the void probability of the LOS ball
// of radius R times that of the NLOS ball of radius d_eq^-1(R). A closed
// form exists for QuadExp and the degenerate models; the *_numeric variants
// evaluate the thinned-intensity integrals by quadrature and work for every
// model. The dispatching functions pick the closed form when available.
double serving_distance_tail(const NetworkConfig& cfg, double r_km);
double serving_distance_tail_numeric(const NetworkConfig& cfg, double r_km);

// Density f_r(R) = -d/dR P[r > R]; analytic derivative for the closed-form
// models, central finite differences of the numeric tail otherwise
// (step h = max(1e-5 km, 1e-3 R)).
double serving_distance_pdf(const NetworkConfig& cfg, double r_km);
double serving_distance_pdf_numeric(const NetworkConfig& cfg, double r_km);

bool has_closed_form_distance(const NetworkConfig& cfg);

// Smallest power-of-two-refined R with P[r > R] < 1e-9; outer integration
// bound for every metric.
double serving_distance_upper_bound(const NetworkConfig& cfg);

// Laplace functional E[exp(-s I_R)] of the interference seen from the
// exclusion region {LOS dist > R, NLOS dist > d_eq^-1(R)}; 1 at s = 0.
double laplace_interference(const NetworkConfig& cfg, double s, double r_km);

// P[SINR > y] for a linear threshold y > 0.
double sir_ccdf(const NetworkConfig& cfg, double y_linear);

// 1 - sir_ccdf at a dB threshold.
double outage_probability(const NetworkConfig& cfg, double threshold_db);

// E[log2(1 + SINR)] in bit/s/Hz and its area density lambda * SE.
double mean_spectral_efficiency(const NetworkConfig& cfg);
double area_spectral_efficiency(const NetworkConfig& cfg);

// Default SIR threshold grid: -20..+30 dB in 101 equally spaced points.
std::vector<double> default_threshold_grid_db();

Curve sir_ccdf_curve(const NetworkConfig& cfg,
                     const std::vector<double>& thresholds_db);

}  // namespace cellgeom::analytics
