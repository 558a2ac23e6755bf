#pragma once

#include <functional>
#include <stdexcept>

namespace cellgeom {

struct QuadSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;

  void validate() const;  // throws std::invalid_argument
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

// Thrown when the panel budget is exhausted before the tolerance is met.
// Carries the best estimate accumulated so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

// Adaptive Gauss(7)/Kronrod(15) integration of f over [a, b]. Panels are
// bisected worst-error-first; the final sum runs over panels ordered by
// position, so results are deterministic. f must be side-effect-free and
// finite on [a, b]; non-finite values raise std::domain_error.
QuadResult integrate_finite(const std::function<double(double)>& f, double a,
                            double b, const QuadSpec& spec = {});

// Integral of f over [a, +inf) via the substitution v = a + t/(1-t),
// t in [0, 1), then the finite-interval engine.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double a, const QuadSpec& spec = {});

}  // namespace cellgeom
