#include "bicircle/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bicircle/errors.hpp"

namespace bicircle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex on_circle(double theta) { return std::polar(1.0, theta); }

int winding(const std::function<Complex(double)>& curve, int samples) {
  double total = 0.0;
  Complex prev = curve(0.0);
  for (int k = 1; k <= samples; ++k) {
    const Complex next = curve(kTwoPi * k / samples);
    total += std::arg(next / prev);
    prev = next;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double norm_or_zero(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : spectral_norm(a); }

struct Failure {
  char condition;
  int i;
  int j;
  double value;
};

// First violated condition, scanning a, b, c in that order.
std::optional<Failure> check_conditions(const ParameterGrid& u, const CoefficientTable& coeffs, int n, int m, int I,
                                        int J, double tol) {
  for (int j = m; j <= J; ++j) {
    const double k = norm_or_zero(coeffs.at(n, j).K);
    if (k > tol) return Failure{'a', n, j, k};
    if (j == J) break;
    if (n >= 1) {
      const double e = norm_or_zero(coeffs.at(n - 1, j + 1).Et);
      if (e > tol) return Failure{'a', n - 1, j + 1, e};
    }
    const double v = std::abs(u.get(n, j + 1));
    if (v > tol) return Failure{'a', n, j + 1, v};
  }
  for (int i = n + 1; i <= I; ++i) {
    const double k = norm_or_zero(coeffs.at(i, m).K);
    if (k > tol) return Failure{'b', i, m, k};
    if (m >= 1) {
      const double e = norm_or_zero(coeffs.at(i, m - 1).E);
      if (e > tol) return Failure{'b', i, m - 1, e};
    }
    const double v = std::abs(u.get(i, m));
    if (v > tol) return Failure{'b', i, m, v};
  }
  for (int i = n + 1; i <= I; ++i) {
    for (int j = m + 1; j <= J; ++j) {
      const double v = std::max(std::abs(u.get(i, j)), std::abs(u.get(-i, j)));
      if (v > tol) return Failure{'c', i, j, v};
    }
  }
  return std::nullopt;
}

double propagation_residual(const CoefficientTable& coeffs, int n, int m, int I, int J) {
  double r = 0.0;
  for (int i = n; i <= I; ++i) {
    for (int j = m; j <= J; ++j) {
      r = std::max(r, norm_or_zero(coeffs.at(i, j).K));
      if (i > n) r = std::max(r, norm_or_zero(coeffs.at(i, j).E));
      if (i == n && j > m) r = std::max(r, norm_or_zero(coeffs.at(i, j).Et));
      if (i > n && j >= 1) {
        const ComplexMatrix& k1 = coeffs.at(i, j).K1;
        const ComplexMatrix& prev = coeffs.at(i - 1, j).K1;
        r = std::max(r, max_abs(k1.col(0)));
        if (i > 1) r = std::max(r, max_abs(k1.rightCols(i - 1) - prev));
      }
    }
  }
  return r;
}

CharacterizationResult characterize(const ParameterGrid& u, const CoefficientTable& coeffs, int n, int m, int window,
                                    double tol) {
  const int I = n + window;
  const int J = m + window;
  CharacterizationResult out;
  if (const auto f = check_conditions(u, coeffs, n, m, I, J, tol)) {
    out.condition = f->condition;
    out.level = {f->i, f->j};
    out.value = f->value;
    return out;
  }
  out.pass = true;
  out.propagation_residual = propagation_residual(coeffs, n, m, I, J);
  out.propagation_ok = out.propagation_residual <= tol;
  return out;
}

void require_window(int n, int m, int window) {
  if (n < 0 || m < 0 || window < 0) throw InvalidArgument("level and window must be nonnegative");
}

}  // namespace

TrigPolynomial::TrigPolynomial(int n, int m) : n_(n), m_(m) {
  if (n < 0 || m < 0) throw InvalidArgument("trig polynomial degrees must be nonnegative");
  f_ = ComplexMatrix::Zero(2 * n + 1, 2 * m + 1);
}

TrigPolynomial TrigPolynomial::modulus_squared(const BivariatePolynomial& p) {
  const int n = p.deg_z();
  const int m = p.deg_w();
  TrigPolynomial f(n, m);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= m; ++b)
      for (int c = 0; c <= n; ++c)
        for (int d = 0; d <= m; ++d) f.f_(a - c + n, b - d + m) += p.coeff(a, b) * std::conj(p.coeff(c, d));
  return f;
}

Complex TrigPolynomial::coeff(int k, int l) const {
  if (std::abs(k) > n_ || std::abs(l) > m_) return 0.0;
  return f_(k + n_, l + m_);
}

void TrigPolynomial::set(int k, int l, Complex value) {
  if (std::abs(k) > n_ || std::abs(l) > m_) throw InvalidArgument("trig coefficient index outside the bidegree");
  if (k == 0 && l == 0) value = value.real();
  f_(k + n_, l + m_) = value;
  f_(-k + n_, -l + m_) = std::conj(value);
}

double TrigPolynomial::operator()(double theta, double phi) const {
  Complex s = 0.0;
  for (int k = -n_; k <= n_; ++k)
    for (int l = -m_; l <= m_; ++l) s += f_(k + n_, l + m_) * on_circle(k * theta + l * phi);
  return s.real();
}

StabilityCertificate certify_stable(const BivariatePolynomial& q, int radial, int angular) {
  if (radial < 2 || angular < 3) throw InvalidArgument("certificate grid too small");
  StabilityCertificate cert;
  cert.radial = radial;
  cert.angular = angular;
  std::vector<Complex> disk;
  disk.reserve(static_cast<size_t>(radial * angular));
  for (int r = 0; r < radial; ++r)
    for (int a = 0; a < angular; ++a)
      disk.push_back(static_cast<double>(r) / (radial - 1) * on_circle(kTwoPi * a / angular));

  double lo = std::numeric_limits<double>::infinity();
  for (const Complex& z : disk)
    for (const Complex& w : disk) lo = std::min(lo, std::abs(q(z, w)));
  cert.min_modulus = lo;

  double hi = 0.0;
  for (int a = 0; a < angular; ++a)
    for (int b = 0; b < angular; ++b)
      hi = std::max(hi, std::abs(q(on_circle(kTwoPi * a / angular), on_circle(kTwoPi * b / angular))));
  cert.torus_scale = hi;

  const int samples = 4 * angular;
  int wind = 0;
  for (const Complex& p0 : disk) {
    wind = std::max(wind, std::abs(winding([&](double t) { return q(on_circle(t), p0); }, samples)));
    wind = std::max(wind, std::abs(winding([&](double t) { return q(p0, on_circle(t)); }, samples)));
  }
  cert.max_winding = wind;
  cert.stable = hi > 0.0 && lo > 1e-6 * hi && wind == 0;
  return cert;
}

MomentTable spectral_moments(const BivariatePolynomial& p, int n, int m, int grid) {
  return moments_from_density(
      [&](double theta, double phi) { return 1.0 / std::norm(p(on_circle(theta), on_circle(phi))); }, n, m, grid,
      grid);
}

StableOutcome stable_from_functional(const MomentTable& moments, int n, int m, const StableOptions& options) {
  const PolynomialFamily family = gram_schmidt_levels(moments, n, m);
  const LevelCoefficients c = coefficients_by_inner_product(moments, family, n, m);
  StableOutcome out;
  out.k_norm = norm_or_zero(c.K);
  if (out.k_norm > options.zero_tol) return out;
  out.applicable = true;

  StablePolynomial sp;
  sp.n = n;
  sp.m = m;
  sp.p = family.phi(n, m).row(0).padded(n, m);
  sp.certificate = certify_stable(reverse(sp.p, n, m), options.certificate_radial, options.certificate_angular);

  const MomentTable back = spectral_moments(sp.p, n, m, options.grid);
  double err = 0.0;
  for (Ordering o : {Ordering::lex, Ordering::revlex})
    err = std::max(err, max_abs(assemble(back, n, m, o).data - assemble(moments, n, m, o).data));
  out.match_error = err;
  out.polynomial = std::move(sp);
  return out;
}

std::string to_string(FactorVerdict v) {
  switch (v) {
    case FactorVerdict::factored:
      return "Factored";
    case FactorVerdict::not_factorable:
      return "NotFactorable";
    case FactorVerdict::not_positive:
      return "NotPositive";
  }
  return "?";
}

FactorizationResult fejer_riesz_factor(const TrigPolynomial& f, const FactorOptions& options) {
  const int n = f.n();
  const int m = f.m();
  FactorizationResult out;
  out.grid_z = options.grid > 0 ? options.grid : std::max(128, 8 * n);
  out.grid_w = options.grid > 0 ? options.grid : std::max(128, 8 * m);

  Eigen::MatrixXd samples(out.grid_z, out.grid_w);
  double lo = std::numeric_limits<double>::infinity();
  for (int a = 0; a < out.grid_z; ++a) {
    for (int b = 0; b < out.grid_w; ++b) {
      samples(a, b) = f(kTwoPi * a / out.grid_z, kTwoPi * b / out.grid_w);
      lo = std::min(lo, samples(a, b));
    }
  }
  out.min_sample = lo;
  if (!(lo > 0.0)) return out;

  const MomentTable moments = moments_from_samples(samples.cwiseInverse(), n, m);
  StableOptions so;
  so.zero_tol = options.zero_tol;
  const PolynomialFamily family = gram_schmidt_levels(moments, n, m);
  out.k_norm = norm_or_zero(coefficients_by_inner_product(moments, family, n, m).K);
  if (out.k_norm > options.zero_tol) {
    out.verdict = FactorVerdict::not_factorable;
    return out;
  }
  StablePolynomial sp;
  sp.n = n;
  sp.m = m;
  sp.p = family.phi(n, m).row(0).padded(n, m);
  sp.certificate = certify_stable(reverse(sp.p, n, m), so.certificate_radial, so.certificate_angular);

  // Offset grid of a different size from the quadrature grid.
  const int vz = out.grid_z + 7;
  const int vw = out.grid_w + 5;
  double err = 0.0;
  for (int a = 0; a < vz; ++a) {
    for (int b = 0; b < vw; ++b) {
      const double t = kTwoPi * (a + 0.5) / vz;
      const double s = kTwoPi * (b + 0.5) / vw;
      err = std::max(err, std::abs(f(t, s) - std::norm(sp.p(on_circle(t), on_circle(s)))));
    }
  }
  out.reconstruction_error = err;
  out.verdict = FactorVerdict::factored;
  out.factor = std::move(sp);
  return out;
}

GeometricTest geometric_test(const MomentTable& moments, int n, int m, double tol) {
  GeometricTest out;
  if (m == 0 || n == 0) {
    out.holds = true;
    return out;
  }
  const LevelPolynomials level = gram_schmidt_level(moments, n, m - 1);
  const VectorPolynomial phi = level.phi.padded(n, m);
  const double scale = std::sqrt(moments.at(0, 0).real());
  for (int i = 0; i < n; ++i) {
    const VectorPolynomial mono = VectorPolynomial::from_rows(n, m, {BivariatePolynomial::monomial(i, m)});
    out.max_inner = std::max(out.max_inner, max_abs(inner_product(moments, phi, mono)));
  }
  out.holds = out.max_inner <= tol * scale;
  return out;
}

double christoffel_darboux_like_residual(const PolynomialFamily& family, int n, int m, Complex z, Complex w,
                                         Complex z1, Complex w1) {
  const BivariatePolynomial phi = family.phi(n, m).row(0).padded(n, m);
  const BivariatePolynomial rphi = reverse(phi, n, m);
  const Complex lhs = rphi(z, w) * std::conj(rphi(z1, w1)) - phi(z, w) * std::conj(phi(z1, w1));
  Complex rk = 0.0;
  Complex kt = 0.0;
  if (m >= 1) {
    const VectorPolynomial r = reverse(family.phi(n, m - 1));
    rk = r(z1, w1).dot(r(z, w));
  }
  if (n >= 1) {
    const VectorPolynomial& t = family.phi_tilde(n - 1, m);
    kt = t(z1, w1).dot(t(z, w));
  }
  const Complex rhs = (1.0 - w * std::conj(w1)) * rk + (1.0 - z * std::conj(z1)) * kt;
  return std::abs(lhs - rhs);
}

CharacterizationResult full_measure_characterization(const MomentTable& moments, int n, int m, int window,
                                                     double tol) {
  require_window(n, m, window);
  const int I = n + window;
  const int J = m + window;
  const ParameterGrid u = extract_parameters(moments, I, J);
  const PolynomialFamily family = gram_schmidt_levels(moments, I, J);
  return characterize(u, coefficients_by_inner_product(moments, family), n, m, window, tol);
}

CharacterizationResult full_measure_characterization(const ParameterGrid& params, int n, int m, int window,
                                                     double tol) {
  require_window(n, m, window);
  const int I = n + window;
  const int J = m + window;
  if (params.n_max() < I || params.m_max() < J) throw InvalidArgument("parameter grid smaller than the window");
  ParameterGrid u(I, J);
  for (int i = -I; i <= I; ++i)
    for (int j = 0; j <= J; ++j)
      if (i >= 0 || j > 0) u.set(i, j, params.get(i, j));
  const SynthesisState state = synthesize_or_throw(u);
  return characterize(u, state.coefficients, n, m, window, tol);
}

}  // namespace bicircle
