#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bicircle/bivariate_orthopoly.hpp"
#include "bicircle/moment_functional.hpp"
#include "bicircle/parameter_synthesis.hpp"
#include "bicircle/polynomial.hpp"

namespace bicircle {

inline constexpr double kZeroTol = 1e-8;
inline constexpr double kMatchTol = 1e-7;

// f(z,w) = sum_{|k|<=n, |l|<=m} f(k,l) z^k w^l with f(-k,-l) = conj(f(k,l)).
class TrigPolynomial {
 public:
  TrigPolynomial() : TrigPolynomial(0, 0) {}
  TrigPolynomial(int n, int m);
  // |p|^2 on the torus.
  static TrigPolynomial modulus_squared(const BivariatePolynomial& p);

  int n() const { return n_; }
  int m() const { return m_; }
  Complex coeff(int k, int l) const;
  // Also sets conj(value) at (-k,-l).
  void set(int k, int l, Complex value);
  double operator()(double theta, double phi) const;

 private:
  int n_;
  int m_;
  ComplexMatrix f_;  // f_(k + n, l + m)
};

struct StabilityCertificate {
  int radial = 0;
  int angular = 0;
  double min_modulus = 0.0;   // over the closed bidisk grid
  double torus_scale = 0.0;   // max modulus on the torus samples
  int max_winding = 0;        // largest |winding number| over the slices
  bool stable = false;
};

// Sampled check that q has no zero on |z|,|w| <= 1: min modulus on a polar
// grid (radii 0..1 inclusive) and winding numbers of q(., w0), q(z0, .) along
// the unit circle for sampled |z0|, |w0| <= 1.
StabilityCertificate certify_stable(const BivariatePolynomial& q, int radial = 16, int angular = 64);

struct StablePolynomial {
  int n = 0;
  int m = 0;
  BivariatePolynomial p;  // phi^m_{n,m}; its reverse is the stable one
  StabilityCertificate certificate;
};

struct StableOutcome {
  bool applicable = false;
  double k_norm = 0.0;
  std::optional<StablePolynomial> polynomial;
  double match_error = 0.0;  // moments of 1/|p|^2 against the input, both orderings
};

struct StableOptions {
  double zero_tol = kZeroTol;
  int grid = kDefaultDensityGrid;
  int certificate_radial = 16;
  int certificate_angular = 64;
};

// Quadrature moments of 1/|p|^2 for |k| <= n, |l| <= m.
MomentTable spectral_moments(const BivariatePolynomial& p, int n, int m, int grid = kDefaultDensityGrid);

StableOutcome stable_from_functional(const MomentTable& moments, int n, int m, const StableOptions& options = {});

enum class FactorVerdict { factored, not_factorable, not_positive };
std::string to_string(FactorVerdict v);

struct FactorizationResult {
  FactorVerdict verdict = FactorVerdict::not_positive;
  std::optional<StablePolynomial> factor;
  double k_norm = 0.0;
  double min_sample = 0.0;
  double reconstruction_error = 0.0;  // sup |f - |p|^2| on an independent grid
  int grid_z = 0;
  int grid_w = 0;
};

struct FactorOptions {
  double zero_tol = kZeroTol;
  int grid = 0;  // 0: 8x the bidegree, at least 128 per axis
};

FactorizationResult fejer_riesz_factor(const TrigPolynomial& f, const FactorOptions& options = {});

struct GeometricTest {
  bool holds = false;
  double max_inner = 0.0;  // max |<Phi_{n,m-1}, z^i w^m>|, 0 <= i < n
};

GeometricTest geometric_test(const MomentTable& moments, int n, int m, double tol = kZeroTol);

// Residual of the kernel identity that holds when K_{n,m} = 0.
double christoffel_darboux_like_residual(const PolynomialFamily& family, int n, int m, Complex z, Complex w,
                                         Complex z1, Complex w1);

struct CharacterizationResult {
  bool pass = false;
  char condition = '-';  // 'a', 'b' or 'c' when failing
  std::pair<int, int> level{0, 0};
  double value = 0.0;
  bool propagation_ok = false;
  double propagation_residual = 0.0;
};

// Conditions a-c on the window i <= n + window, j <= m + window, then the
// propagated zeros (E_{i+1,j}, E~_{n,j+1}, K_{i,j}) and the K1 column shift.
CharacterizationResult full_measure_characterization(const MomentTable& moments, int n, int m, int window,
                                                     double tol = kZeroTol);
CharacterizationResult full_measure_characterization(const ParameterGrid& params, int n, int m, int window,
                                                     double tol = kZeroTol);

}  // namespace bicircle
