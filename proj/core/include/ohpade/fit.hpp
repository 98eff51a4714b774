#pragma once

#include <span>
#include <vector>

namespace ohpade {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
  double rms = 0.0;  // root-mean-square residual
};

// Ordinary least squares y ≈ intercept + slope·x. Needs two distinct x.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

struct GeometricFit {
  double rate = 0.0;  // exp(slope) of log(value) against n
  LinearFit line;
  std::vector<int> used;  // indices n that entered the fit
};

// Fits value_n ≈ C·rate^n using only values in [lo, hi]. Throws
// InsufficientDataError when fewer than `min_points` values qualify.
GeometricFit geometric_fit(std::span<const int> n, std::span<const double> values,
                           double lo, double hi, int min_points);

}  // namespace ohpade
