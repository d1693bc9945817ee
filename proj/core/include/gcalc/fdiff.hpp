#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace gcalc {
namespace fdiff {

/// Step size for first-derivative stencils: eps^(1/5) scaled by the magnitude
/// of the expansion point, the classical balance point for a 4th-order stencil.
inline double step(double at) {
  static const double h0 =
      std::pow(std::numeric_limits<double>::epsilon(), 0.2);
  return h0 * std::max(1.0, std::abs(at));
}

/// First-derivative weights for an arbitrary 1-D stencil (Fornberg's
/// recurrence).  nodes are absolute positions, x0 the expansion point.
std::vector<double> derivative_weights(const std::vector<double>& nodes,
                                       double x0);

/// Five-point stencil around x0 clamped to [lo, hi]: central when it fits,
/// shifted one-sided near the edges.  Returns node positions.
std::vector<double> clamped_stencil(double x0, double h, double lo, double hi);

/// d/dx at x0 of a double-valued function using the clamped 5-point stencil.
double derivative(const std::function<double(double)>& f, double x0, double lo,
                  double hi);

}  // namespace fdiff
}  // namespace gcalc
