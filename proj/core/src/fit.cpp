#include "ohpade/fit.hpp"

#include <cmath>
#include <string>

#include "ohpade/errors.hpp"

namespace ohpade {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ParameterError("linear_fit: size mismatch");
  const std::size_t m = x.size();
  if (m < 2) throw InsufficientDataError("linear_fit: need at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("linear_fit: abscissae are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = static_cast<int>(m);
  double ss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / m);
  return fit;
}

GeometricFit geometric_fit(std::span<const int> n, std::span<const double> values,
                           double lo, double hi, int min_points) {
  if (n.size() != values.size()) throw ParameterError("geometric_fit: size mismatch");
  std::vector<double> x, y;
  GeometricFit out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double v = values[i];
    if (!(v >= lo && v <= hi)) continue;
    x.push_back(n[i]);
    y.push_back(std::log(v));
    out.used.push_back(n[i]);
  }
  if (static_cast<int>(x.size()) < min_points) {
    throw InsufficientDataError("geometric_fit: " + std::to_string(x.size()) +
                                " usable points, need " + std::to_string(min_points));
  }
  out.line = linear_fit(x, y);
  out.rate = std::exp(out.line.slope);
  return out;
}

}  // namespace ohpade
