#include "gcalc/fdiff.hpp"

#include <array>
#include <cmath>

#include "gcalc/errors.hpp"

namespace gcalc {
namespace fdiff {

std::vector<double> derivative_weights(const std::vector<double>& nodes,
                                       double x0) {
  // Fornberg, "Generation of finite difference formulas on arbitrarily
  // spaced grids", Math. Comp. 51 (1988).  Derivative order fixed at 1;
  // c[j] holds the order-0 and order-1 weights of node j.
  const int last = static_cast<int>(nodes.size()) - 1;
  if (last < 1) throw DomainError("derivative stencil needs at least two nodes");
  std::vector<std::array<double, 2>> c(nodes.size(), {0.0, 0.0});
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= last; ++i) {
    const int mn = std::min(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) w[j] = c[j][1];
  return w;
}

std::vector<double> clamped_stencil(double x0, double h, double lo,
                                    double hi) {
  if (hi - lo < 4.0 * h)
    throw DomainError("interval too small for a five-point stencil");
  double start = x0 - 2.0 * h;
  if (start < lo) start = lo;
  if (start + 4.0 * h > hi) start = hi - 4.0 * h;
  std::vector<double> nodes(5);
  for (int i = 0; i < 5; ++i) nodes[i] = start + i * h;
  return nodes;
}

double derivative(const std::function<double(double)>& f, double x0, double lo,
                  double hi) {
  const double h = step(x0);
  const auto nodes = clamped_stencil(x0, h, lo, hi);
  const auto w = derivative_weights(nodes, x0);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += w[i] * f(nodes[i]);
  return sum;
}

}  // namespace fdiff
}  // namespace gcalc
