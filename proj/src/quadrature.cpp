#include "cellgeom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace cellgeom {

namespace {

// Nodes on [0,1] by symmetry; odd indices are the embedded G7 points.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWeights15[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWeights7[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;  // K15 estimate
  double error = 0.0;  // |K15 - G7|
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.error < y.error;
  }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k15 = 0.0;
  double g7 = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fx;
    if (i == 7) {
      fx = f(c);
    } else {
      double dx = h * kNodes[i];
      fx = f(c + dx) + f(c - dx);
    }
    if (!std::isfinite(fx))
      throw std::domain_error("integrand returned non-finite value near x = " +
                              std::to_string(c));
    k15 += kWeights15[i] * fx;
    if (i % 2 == 1) g7 += kWeights7[i / 2] * fx;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = k15 * h;
  p.error = std::abs((k15 - g7) * h);
  return p;
}

QuadResult sum_by_position(std::vector<Panel>& panels) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadResult r;
  for (const Panel& p : panels) {
    r.value += p.value;
    r.error += p.error;
  }
  return r;
}

}  // namespace

void QuadSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("QuadSpec: tolerances must be positive");
  if (max_subdivisions < 1)
    throw std::invalid_argument("QuadSpec: max_subdivisions must be >= 1");
}

QuadResult integrate_finite(const std::function<double(double)>& f, double a,
                            double b, const QuadSpec& spec) {
  spec.validate();
  if (!(a <= b))
    throw std::invalid_argument("integrate_finite: requires a <= b");
  if (a == b) return {0.0, 0.0};

  std::vector<Panel> heap;     // active panels, max-heap by error
  std::vector<Panel> settled;  // panels too narrow to split further
  heap.push_back(evaluate_panel(f, a, b));

  double total_value = heap[0].value;
  double total_error = heap[0].error;

  int subdivisions = 0;
  while (true) {
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value));
    if (total_error <= tol) break;

    if (subdivisions >= spec.max_subdivisions || heap.empty()) {
      std::vector<Panel> all(heap);
      all.insert(all.end(), settled.begin(), settled.end());
      QuadResult best = sum_by_position(all);
      if (best.error <= std::max(spec.abs_tol,
                                 spec.rel_tol * std::abs(best.value)))
        return best;  // heap bookkeeping drifted but the true sums converged
      throw ConvergenceError(
          "integrate_finite: did not converge within " +
              std::to_string(spec.max_subdivisions) + " subdivisions",
          best);
    }

    std::pop_heap(heap.begin(), heap.end(), ByError{});
    Panel worst = heap.back();
    heap.pop_back();

    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // machine-width panel, cannot be refined further
      settled.push_back(worst);
      continue;
    }

    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), ByError{});
    ++subdivisions;
  }

  heap.insert(heap.end(), settled.begin(), settled.end());
  return sum_by_position(heap);
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double a, const QuadSpec& spec) {
  auto g = [&f, a](double t) {
    double u = 1.0 - t;
    double v = a + t / u;
    return f(v) / (u * u);
  };
  return integrate_finite(g, 0.0, 1.0, spec);
}

}  // namespace cellgeom
