#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "bicircle/fejer_riesz.hpp"
#include "bicircle/matrix_kernel.hpp"
#include "bicircle/parameter_synthesis.hpp"

using namespace bicircle;

namespace {

MomentTable density_moments(int n, int m) {
  return moments_from_density([](double t, double p) { return 1.0 / std::norm(4.0 + std::polar(1.0, t) + std::polar(1.0, p)); },
                              n, m, 64, 64);
}

void BM_Cholesky(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix h = assemble(density_moments(n, n), n, n).data;
  for (auto _ : state) benchmark::DoNotOptimize(lower_cholesky(h));
  state.SetLabel(std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
}
BENCHMARK(BM_Cholesky)->DenseRange(1, 3);

void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ParameterGrid g = extract_parameters(density_moments(n, n), n, n);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(g));
}
BENCHMARK(BM_Synthesize)->DenseRange(1, 3);

void BM_GramSchmidt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MomentTable t = density_moments(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(gram_schmidt_levels(t, n, n));
}
BENCHMARK(BM_GramSchmidt)->DenseRange(1, 3);

void BM_FejerRiesz(benchmark::State& state) {
  BivariatePolynomial p(1, 1);
  p.set_coeff(1, 1, 4.0);
  p.set_coeff(1, 0, 1.0);
  p.set_coeff(0, 1, 1.0);
  const TrigPolynomial f = TrigPolynomial::modulus_squared(p);
  for (auto _ : state) benchmark::DoNotOptimize(fejer_riesz_factor(f));
}
BENCHMARK(BM_FejerRiesz);

}  // namespace

BENCHMARK_MAIN();
