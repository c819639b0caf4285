#include "fixtures.hpp"

#include <cmath>
#include <numbers>

namespace fixtures {

double fixture_density(double theta, double phi) {
  return 1.0 / std::norm(4.0 + std::polar(1.0, theta) + std::polar(1.0, phi));
}

bicircle::MomentTable fixture_moments(int n, int m, int grid) {
  return bicircle::moments_from_density(fixture_density, n, m, grid, grid);
}

bicircle::BivariatePolynomial fixture_factor() {
  bicircle::BivariatePolynomial p(1, 1);
  p.set_coeff(1, 1, 4.0);
  p.set_coeff(1, 0, 1.0);
  p.set_coeff(0, 1, 1.0);
  return p;
}

bicircle::MomentTable to_table(const oracle::Moments& mo, int n, int m) {
  bicircle::MomentTable t(n, m);
  for (int i = -n; i <= n; ++i)
    for (int j = 0; j <= m; ++j) t.set(i, j, mo.get(i, j));
  return t;
}

oracle::Moments to_oracle(const bicircle::MomentTable& t, int n, int m) {
  oracle::Moments mo;
  for (int i = -n; i <= n; ++i)
    for (int j = 0; j <= m; ++j) mo.set(i, j, t.at(i, j));
  return mo;
}

oracle::Params to_oracle(const bicircle::ParameterGrid& g) {
  oracle::Params u;
  for (const auto& ij : g.free_indices()) u[ij] = g.get(ij.first, ij.second);
  return u;
}

oracle::Poly to_oracle(const bicircle::BivariatePolynomial& p, int n, int m) {
  return p.padded(n, m).coefficients();
}

Complex random_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return radius * std::sqrt(u(rng)) * std::polar(1.0, 2.0 * std::numbers::pi * u(rng));
}

bicircle::ParameterGrid random_params(std::mt19937_64& rng, int n, int m, double radius) {
  bicircle::ParameterGrid g(n, m);
  std::uniform_real_distribution<double> c00(0.5, 2.0);
  for (const auto& [i, j] : g.free_indices())
    g.set(i, j, (i == 0 && j == 0) ? Complex(c00(rng)) : random_disk(rng, radius));
  return g;
}

bicircle::ParameterGrid random_admissible(std::mt19937_64& rng, int n, int m, double radius) {
  for (;;) {
    bicircle::ParameterGrid g = random_params(rng, n, m, radius);
    if (bicircle::synthesize(g).admissible()) return g;
  }
}

oracle::Moments random_atoms(std::mt19937_64& rng, int n, int m, int extra) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> wt(0.2, 1.0);
  const int k = (n + 1) * (m + 1) + extra;
  std::vector<std::pair<double, double>> a;
  std::vector<double> w;
  for (int i = 0; i < k; ++i) {
    a.emplace_back(ang(rng), ang(rng));
    w.push_back(wt(rng));
  }
  return oracle::from_atoms(a, w, n, m);
}

std::vector<std::pair<Complex, Complex>> points(std::mt19937_64& rng, int count, double rz, double rw) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::vector<std::pair<Complex, Complex>> out;
  for (int k = 0; k < count; ++k) out.emplace_back(std::polar(rz, ang(rng)), std::polar(rw, ang(rng)));
  return out;
}

double max_abs(const oracle::Mat& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace fixtures
