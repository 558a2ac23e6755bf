#pragma once

#include <map>
#include <string>
#include <vector>

namespace cellgeom {

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  double ci = 0.0;  // 95% confidence half-width where applicable, else 0
};

// Ordered samples of one scalar function, the universal result container.
struct Curve {
  std::string x_label;
  std::string y_label;
  std::vector<CurvePoint> points;
  std::map<std::string, std::string> meta;

  void validate() const;  // x strictly increasing, y finite
};

}  // namespace cellgeom
