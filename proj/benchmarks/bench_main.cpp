/**
 * @file bench_main.cpp
 * @brief Microbenchmarks for the hot paths: table contractions, the Jacobi
 *        eigensolver, covers, and the finite-difference geodesic residual.
 */
#include <benchmark/benchmark.h>

#include "cskit/groups.hpp"
#include "cskit/isomaps.hpp"
#include "cskit/lie_algebra.hpp"
#include "cskit/linalg.hpp"
#include "cskit/metrics.hpp"
#include "cskit/rng.hpp"
#include "cskit/screws.hpp"

using namespace cskit;

static void BM_KillingForm_so31(benchmark::State& state) {
  const LieAlgebra& L = builtin_algebra("so31");
  for (auto _ : state) {
    Mat k = killing_form(L);
    benchmark::DoNotOptimize(k.data());
  }
}
BENCHMARK(BM_KillingForm_so31);

static void BM_InvariantForms_so31(benchmark::State& state) {
  const LieAlgebra& L = builtin_algebra("so31");
  for (auto _ : state) {
    auto forms = ad_invariant_symmetric_forms(L);
    benchmark::DoNotOptimize(forms.data());
  }
}
BENCHMARK(BM_InvariantForms_so31);

static void BM_JacobiEigen_12x12(benchmark::State& state) {
  const Mat B = cotangent_metric_even_so31(1.0, 0.5, 1.0, 0.25);
  for (auto _ : state) {
    SymEigenResult r = jacobi_eigensymmetric(B);
    benchmark::DoNotOptimize(r.eigenvalues.data());
  }
}
BENCHMARK(BM_JacobiEigen_12x12);

static void BM_Signature_12x12(benchmark::State& state) {
  const Mat B = cotangent_metric_even_so31(1.0, 0.5, 1.0, 0.25);
  for (auto _ : state) {
    Signature s = signature_of(B);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Signature_12x12);

static void BM_Rot3(benchmark::State& state) {
  Rng rng(1);
  const Quat q = sample_unit_quat(rng);
  for (auto _ : state) {
    Mat r = rot3(q);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_Rot3);

static void BM_HomResidual_pi(benchmark::State& state) {
  const MapDescriptor& m = find_map("pi");
  for (auto _ : state) {
    double r = hom_residual(m, 10, Rng(1));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_HomResidual_pi);

static void BM_TwistExp(benchmark::State& state) {
  const Twist xi{Vec3(0.3, -0.2, 0.5), Vec3(1.0, 0.0, -0.5)};
  for (auto _ : state) {
    GroupElement g = twist_exp(MotionSpace::Euclidean, xi, 0.7);
    benchmark::DoNotOptimize(g.m.data());
  }
}
BENCHMARK(BM_TwistExp);

static void BM_ScrewDecompose(benchmark::State& state) {
  const Twist xi{Vec3(0.3, -0.2, 0.5), Vec3(1.0, 0.0, -0.5)};
  const GroupElement g = twist_exp(MotionSpace::Euclidean, xi);
  for (auto _ : state) {
    ScrewDecomposition d = screw_decompose(g);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_ScrewDecompose);

static void BM_GroupExpLog_so31(benchmark::State& state) {
  Vec x(6);
  x << 0.3, -0.2, 0.5, 0.1, -0.4, 0.2;
  for (auto _ : state) {
    Vec back = group_log(group_exp(GroupId::SO31, x));
    benchmark::DoNotOptimize(back.data());
  }
}
BENCHMARK(BM_GroupExpLog_so31);

static void BM_GeodesicResidual(benchmark::State& state) {
  const Twist xi{Vec3(0.4, 0.1, -0.3), Vec3(0.8, -0.2, 0.5)};
  const Mat B = se3_bundle_metric(0.7, 0.9);
  Rng rng(2);
  const GroupElement g0 = random_group_element(GroupId::SE3, rng, 0.2);
  for (auto _ : state) {
    double r = geodesic_residual(MotionSpace::Euclidean, B, xi, g0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GeodesicResidual);

BENCHMARK_MAIN();
