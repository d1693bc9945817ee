#include <random>

#include <benchmark/benchmark.h>
#include <gcalc/field.hpp>
#include <gcalc/integrator.hpp>
#include <gcalc/multivector.hpp>
#include <gcalc/patch.hpp>
#include <gcalc/patches.hpp>
#include <gcalc/poly_field.hpp>

using namespace gcalc;

namespace {

Multivector dense_random(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multivector m{dim};
  for (BladeIndex b = 0; b < m.coeff_count(); ++b) m[b] = u(rng);
  return m;
}

void bm_geometric_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Multivector a = dense_random(n, 11);
  Multivector b = dense_random(n, 22);
  for (auto _ : state) {
    Multivector c = a * b;
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_geometric_product)->DenseRange(2, 6);

void bm_tangent_frame(benchmark::State& state) {
  PatchMap p = bent_sheet_patch();
  Eigen::Vector2d s(0.37, 0.61);
  for (auto _ : state) {
    FrameData fr = tangent_frame(p, s);
    benchmark::DoNotOptimize(fr);
  }
}
BENCHMARK(bm_tangent_frame);

void bm_directed_integral(benchmark::State& state) {
  PatchMap sheet = bent_sheet_patch();
  FieldFn f = poly_field(3, "x2*x3*e1 - x1*e2 + x3^2*e3");
  QuadratureSpec spec;
  spec.points = 4;
  spec.subdivisions = static_cast<int>(state.range(0));
  for (auto _ : state) {
    IntegralResult r = directed_integral(one_field(3), sheet, f, spec);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * node_count(spec, sheet.k()));
}
BENCHMARK(bm_directed_integral)->Arg(4)->Arg(16);

void bm_boundary_integral(benchmark::State& state) {
  PatchMap cube = identity_patch(3);
  FieldFn f = poly_field(3, "x1*x2 + x3^2*e2 + x1*e123");
  QuadratureSpec spec;
  spec.points = 4;
  spec.subdivisions = 4;
  for (auto _ : state) {
    IntegralResult r = boundary_integral(one_field(3), cube, f, spec);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_boundary_integral);

}  // namespace

BENCHMARK_MAIN();
