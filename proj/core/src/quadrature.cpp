#include "gcalc/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace gcalc {

void QuadratureSpec::validate() const {
  if (points < 1) throw DomainError("quadrature needs at least one point per cell");
  if (subdivisions < 1) throw DomainError("quadrature needs at least one cell");
  if (threads < 1) throw DomainError("thread count must be positive");
}

void gauss_legendre_rule(int points, std::vector<double>& nodes,
                         std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(points), 0.0);
  weights.assign(static_cast<std::size_t>(points), 0.0);
  const auto legendre = [points](double x, double& pq, double& dpq) {
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= points; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    pq = p1;
    dpq = points * (x * p1 - p0) / (x * x - 1.0);
  };

  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_q from the Chebyshev initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double pq = 0.0, dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      legendre(x, pq, dp);
      const double dx = pq / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(x, pq, dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(points - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(points - 1 - i)] = w;
  }
}

void axis_rule(const QuadratureSpec& spec, const Interval& iv,
               std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.clear();
  weights.clear();
  const int m = spec.subdivisions;
  const double cell = iv.length() / m;
  if (spec.rule == QuadRule::midpoint) {
    // Composite midpoint: points * subdivisions uniform cells.
    const long total = spec.nodes_per_axis();
    const double h = iv.length() / static_cast<double>(total);
    for (long i = 0; i < total; ++i) {
      nodes.push_back(iv.lo + (i + 0.5) * h);
      weights.push_back(h);
    }
    return;
  }
  std::vector<double> ref_nodes, ref_weights;
  gauss_legendre_rule(spec.points, ref_nodes, ref_weights);
  for (int c = 0; c < m; ++c) {
    const double lo = iv.lo + c * cell;
    for (int q = 0; q < spec.points; ++q) {
      nodes.push_back(lo + 0.5 * cell * (ref_nodes[static_cast<std::size_t>(q)] + 1.0));
      weights.push_back(0.5 * cell * ref_weights[static_cast<std::size_t>(q)]);
    }
  }
}

long node_count(const QuadratureSpec& spec, int dims) {
  long total = 1;
  for (int i = 0; i < dims; ++i) total *= spec.nodes_per_axis();
  return total;
}

namespace {

constexpr long kChunk = 2048;

Multivector integrate_axes(const std::vector<std::vector<double>>& nodes,
                           const std::vector<std::vector<double>>& weights,
                           const QuadratureSpec& spec, int algebra_dim,
                           const std::function<void(const Eigen::VectorXd&,
                                                    double, Multivector&)>&
                               integrand) {
  const int dims = static_cast<int>(nodes.size());
  long total = 1;
  for (const auto& ax : nodes) total *= static_cast<long>(ax.size());

  if (dims == 0) {
    // Zero-dimensional profile: one point, unit weight.
    Multivector acc{algebra_dim};
    integrand(Eigen::VectorXd(0), 1.0, acc);
    return acc;
  }

  const long chunks = (total + kChunk - 1) / kChunk;
  std::vector<Multivector> partial(static_cast<std::size_t>(chunks),
                                   Multivector{algebra_dim});

  const auto run_chunk = [&](long ci) {
    Multivector acc{algebra_dim};
    Eigen::VectorXd s(dims);
    const long begin = ci * kChunk;
    const long end = std::min(total, begin + kChunk);
    for (long idx = begin; idx < end; ++idx) {
      long rest = idx;
      double w = 1.0;
      for (int a = 0; a < dims; ++a) {
        const auto& axn = nodes[static_cast<std::size_t>(a)];
        const auto& axw = weights[static_cast<std::size_t>(a)];
        const long d = rest % static_cast<long>(axn.size());
        rest /= static_cast<long>(axn.size());
        s[a] = axn[static_cast<std::size_t>(d)];
        w *= axw[static_cast<std::size_t>(d)];
      }
      integrand(s, w, acc);
    }
    partial[static_cast<std::size_t>(ci)] = std::move(acc);
  };

  const int workers =
      static_cast<int>(std::min<long>(spec.threads, chunks));
  if (workers <= 1) {
    for (long ci = 0; ci < chunks; ++ci) run_chunk(ci);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        for (;;) {
          const long ci = next.fetch_add(1);
          if (ci >= chunks) return;
          run_chunk(ci);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Pairwise tree reduction in chunk order.
  std::vector<Multivector> level = std::move(partial);
  while (level.size() > 1) {
    std::vector<Multivector> up;
    up.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      up.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) up.push_back(level.back());
    level = std::move(up);
  }
  return level.front();
}

}  // namespace

Multivector integrate_box(const KRectangle& box, const QuadratureSpec& spec,
                          int algebra_dim,
                          const std::function<void(const Eigen::VectorXd&,
                                                   double, Multivector&)>&
                              integrand) {
  spec.validate();
  std::vector<std::vector<double>> nodes(static_cast<std::size_t>(box.k()));
  std::vector<std::vector<double>> weights(static_cast<std::size_t>(box.k()));
  for (int a = 0; a < box.k(); ++a)
    axis_rule(spec, box.bound(a), nodes[static_cast<std::size_t>(a)],
              weights[static_cast<std::size_t>(a)]);
  return integrate_axes(nodes, weights, spec, algebra_dim, integrand);
}

Multivector integrate_profile(const std::vector<Interval>& profile,
                              const QuadratureSpec& spec, int algebra_dim,
                              const std::function<void(const Eigen::VectorXd&,
                                                       double, Multivector&)>&
                                  integrand) {
  spec.validate();
  std::vector<std::vector<double>> nodes(profile.size());
  std::vector<std::vector<double>> weights(profile.size());
  for (std::size_t a = 0; a < profile.size(); ++a)
    axis_rule(spec, profile[a], nodes[a], weights[a]);
  return integrate_axes(nodes, weights, spec, algebra_dim, integrand);
}

}  // namespace gcalc
