#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bicircle/matrix_kernel.hpp"
#include "bicircle/matrix_opuc.hpp"
#include "bicircle/moment_functional.hpp"
#include "bicircle/polynomial.hpp"

namespace bicircle {

// Phi_{n,m} (height m+1, row l leads with z^n w^{m-l}) and Phi~_{n,m}
// (height n+1, row l leads with w^m z^{n-l}) for every level up to (N,M).
class PolynomialFamily {
 public:
  PolynomialFamily() = default;
  PolynomialFamily(int n_max, int m_max);

  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }
  bool has(int n, int m) const;

  const VectorPolynomial& phi(int n, int m) const;
  const VectorPolynomial& phi_tilde(int n, int m) const;
  // As above, but an empty family for a negative index.
  VectorPolynomial phi_or_empty(int n, int m) const;
  VectorPolynomial phi_tilde_or_empty(int n, int m) const;

  void set(int n, int m, VectorPolynomial phi, VectorPolynomial phi_tilde);

 private:
  size_t index(int n, int m) const;
  int n_max_ = -1;
  int m_max_ = -1;
  std::vector<VectorPolynomial> phi_;
  std::vector<VectorPolynomial> tilde_;
  std::vector<bool> set_;
};

struct LevelPolynomials {
  VectorPolynomial phi;
  VectorPolynomial phi_tilde;
};

// Orthonormalization of the monomials in lex and revlex order via Cholesky of C and C~.
LevelPolynomials gram_schmidt_level(const MomentTable& moments, int n, int m);
PolynomialFamily gram_schmidt_levels(const MomentTable& moments, int n_max, int m_max);

// Recurrence coefficients at one level. Families that do not exist on an axis
// give matrices with a zero dimension.
struct LevelCoefficients {
  int n = 0;
  int m = 0;
  ComplexMatrix E, A, K, G, K1, G1, I, I1;
  ComplexMatrix Et, At, Kt, Gt, K1t, G1t, It, I1t;

  std::vector<std::pair<std::string, const ComplexMatrix*>> entries() const;
};

class CoefficientTable {
 public:
  CoefficientTable() = default;
  CoefficientTable(int n_max, int m_max);
  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }
  bool has(int n, int m) const;
  const LevelCoefficients& at(int n, int m) const;
  void set(LevelCoefficients c);

 private:
  size_t index(int n, int m) const;
  int n_max_ = -1;
  int m_max_ = -1;
  std::vector<LevelCoefficients> levels_;
  std::vector<bool> set_;
};

// Each coefficient as the bracket of its defining pair of families.
LevelCoefficients coefficients_by_inner_product(const MomentTable& moments, const PolynomialFamily& family, int n,
                                                int m);
CoefficientTable coefficients_by_inner_product(const MomentTable& moments, const PolynomialFamily& family);

// Coefficient block of z^n in Phi_{n,m}, columns w^m..1.
ComplexMatrix leading_z_block(const VectorPolynomial& phi);
// Coefficient block of w^m in Phi~_{n,m}, columns z^n..1.
ComplexMatrix leading_w_block(const VectorPolynomial& phi_tilde);

BivariatePolynomial reverse(const BivariatePolynomial& p, int n, int m);
VectorPolynomial reverse(const VectorPolynomial& p);

struct ResidualReport {
  std::vector<std::pair<std::string, double>> items;
  double max_residual() const;
  void add(const std::string& name, double value);
  void merge(const ResidualReport& other, const std::string& prefix = "");
};

inline constexpr std::uint64_t kSampleSeed = 0x5EED;

// Reproducible sample points with |z| = radius_z, |w| = radius_w.
std::vector<std::pair<Complex, Complex>> sample_points(int count, std::uint64_t seed = kSampleSeed,
                                                       double radius_z = 1.0, double radius_w = 1.0);

// The six recurrences and their tilde versions, evaluated at the points.
ResidualReport verify_recurrences(const PolynomialFamily& family, const CoefficientTable& coeffs, int n, int m,
                                  const std::vector<std::pair<Complex, Complex>>& points);

// Norm identities, duality, symmetry of E and structural zero patterns at one level.
ResidualReport verify_structure(const LevelCoefficients& c);

// Leading-coefficient and inverse-moment-matrix expressions for G, G1, K, K1, I, I1.
ResidualReport verify_pointwise_formulas(const PolynomialFamily& family, const CoefficientTable& coeffs,
                                         const MomentTable& moments, int n, int m);

// Relations tying level (n,m) to (n-1,m) and (n,m-1).
ResidualReport verify_cross_level_relations(const CoefficientTable& coeffs, int n, int m);

// Max residual of the kernel identities at (n,m) for the point pair.
double christoffel_darboux_residual(const PolynomialFamily& family, int n, int m, Complex z, Complex w, Complex z1,
                                    Complex w1);

// Phi_{n,m}(z,w) against L_n(z)(w^m..1)^T and the reversed family against R_n.
double matrix_bridge_residual(const VectorPolynomial& phi, const OpucSequence& seq, Complex z, Complex w);

// [L(conj(psi_a) psi_b)] - (X0 + X0^dagger), X0 the z^0 part of psi written as [1,w,..,w^m] X(z).
ComplexMatrix minimizer_objective(const MomentTable& moments, const VectorPolynomial& psi);
// Smallest eigenvalue of objective(rev Phi + delta) - objective(rev Phi). delta must have no z^0 part.
double minimizer_gap(const MomentTable& moments, const VectorPolynomial& phi, const VectorPolynomial& delta);

}  // namespace bicircle
