#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gcalc/multivector.hpp"
#include "gcalc/patch.hpp"

namespace gcalc {

enum class QuadRule { gauss_legendre, midpoint };

/// Tensor-product quadrature: per axis, the interval splits into
/// `subdivisions` equal cells carrying `points` rule nodes each, so a
/// k-dimensional box is sampled at (points * subdivisions)^k nodes.
struct QuadratureSpec {
  QuadRule rule = QuadRule::gauss_legendre;
  int points = 8;        ///< q, nodes per cell per axis
  int subdivisions = 8;  ///< m, cells per axis
  int threads = 1;
  bool estimate_error = false;  ///< also run at 2m and report the difference

  void validate() const;
  QuadratureSpec refined(int factor) const {
    QuadratureSpec r = *this;
    r.subdivisions *= factor;
    return r;
  }
  long nodes_per_axis() const {
    return static_cast<long>(points) * subdivisions;
  }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre_rule(int points, std::vector<double>& nodes,
                         std::vector<double>& weights);

/// Nodes and weights covering one axis interval with the requested rule.
void axis_rule(const QuadratureSpec& spec, const Interval& iv,
               std::vector<double>& nodes, std::vector<double>& weights);

/// Integrate a multivector-valued integrand over a parameter box.  The
/// integrand must add w * f(s) into acc.  Accumulation is deterministic:
/// nodes are visited in a fixed order inside fixed-size chunks and the chunk
/// sums reduce pairwise, so results are bit-identical for any thread count.
Multivector integrate_box(const KRectangle& box, const QuadratureSpec& spec,
                          int algebra_dim,
                          const std::function<void(const Eigen::VectorXd& s,
                                                   double w, Multivector& acc)>&
                              integrand);

/// Same machinery for a list of bare intervals (boundary faces of dimension
/// k-1; an empty list integrates a single point with weight 1).
Multivector integrate_profile(const std::vector<Interval>& profile,
                              const QuadratureSpec& spec, int algebra_dim,
                              const std::function<void(const Eigen::VectorXd&,
                                                       double, Multivector&)>&
                                  integrand);

long node_count(const QuadratureSpec& spec, int dims);

}  // namespace gcalc
