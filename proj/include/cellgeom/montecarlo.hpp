#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cellgeom/curve.hpp"
#include "cellgeom/network.hpp"
#include "cellgeom/rng.hpp"

namespace cellgeom::montecarlo {

struct SimSpec {
  NetworkConfig cfg;
  std::int64_t n_trials = 10000;
  std::optional<double> window_radius;  // km; auto-sized when absent
  double min_distance_guard = 1e-6;     // km
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

// One network drop as seen by the typical user at the origin.
struct TrialOutcome {
  double sir = 0.0;              // linear; +inf when degenerate
  double serving_distance = 0.0; // physical distance of the serving BS, km
  bool serving_is_los = false;
  std::int32_t n_bs = 0;
  bool degenerate = false;       // single BS in window: no interferers
  std::int32_t redraws = 0;      // empty-window redraws before this trial
  std::int32_t guarded = 0;      // BSs relocated to the min-distance guard
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Homogeneous PPP on a disk of the given radius centred at the origin:
// Poisson(lambda*pi*r^2) points, uniform over the disk.
std::vector<Point2> sample_ppp(double lambda, double radius_km, TrialRng& rng);

// Window radius covering all interference that matters:
// max(10/sqrt(lambda), 5 * LOS length scale, 3 * d_eq^-1(r at tail 1e-3)).
double auto_window_radius(const NetworkConfig& cfg);

// One drop: sample the PPP, thin into LOS/NLOS, associate the typical user
// with the strongest fading-averaged BS, draw fading, form the SIR.
TrialOutcome run_trial(const SimSpec& spec, TrialRng& rng);

// All trials of a spec; trial i uses the (seed, i) substream, so the result
// is independent of the thread count. Order is by trial index.
std::vector<TrialOutcome> run_trials(const SimSpec& spec);

// Equivalent-LOS distance of a trial's serving BS (the quantity whose
// distribution the analytic serving-distance law describes).
double equivalent_serving_distance(const NetworkConfig& cfg,
                                   const TrialOutcome& t);

// Empirical SIR CDF on a dB threshold grid, with binomial 95% half-widths.
Curve estimate_sir_cdf(const SimSpec& spec,
                       const std::vector<double>& thresholds_db);

struct MeanSeEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n = 0;  // non-degenerate trials
};

// Sample mean of log2(1 + SIR) over non-degenerate trials.
MeanSeEstimate estimate_mean_se(const SimSpec& spec);

}  // namespace cellgeom::montecarlo
