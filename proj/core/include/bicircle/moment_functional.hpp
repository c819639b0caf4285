#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bicircle/matrix_kernel.hpp"
#include "bicircle/polynomial.hpp"

namespace bicircle {

// Moments c(i,j) = L(z^-i w^-j) for |i| <= n_max, |j| <= m_max.
// Storing c(i,j) also stores c(-i,-j) = conj(c(i,j)).
class MomentTable {
 public:
  MomentTable() : MomentTable(0, 0) {}
  MomentTable(int n_max, int m_max);
  static MomentTable delta(int n_max, int m_max, double c00 = 1.0);

  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }

  bool in_window(int i, int j) const { return std::abs(i) <= n_max_ && std::abs(j) <= m_max_; }
  bool has(int i, int j) const;
  // Throws MissingMoment if absent.
  Complex at(int i, int j) const;
  // c(0,0) must be real; its imaginary part is dropped if below 1e-12 relative.
  void set(int i, int j, Complex value);

  // Copy into a table with a different window; entries outside are dropped.
  MomentTable resized(int n_max, int m_max) const;
  // True when every moment with |i| <= n, |j| <= m is present.
  bool complete(int n, int m) const;
  // max |c(i,j) - o(i,j)| over |i|<=n, |j|<=m (both must be complete there).
  double max_difference(const MomentTable& o, int n, int m) const;

 private:
  size_t index(int i, int j) const;
  int n_max_;
  int m_max_;
  std::vector<std::optional<Complex>> values_;
};

struct DoublyToeplitzMatrix {
  int n = 0;
  int m = 0;
  Ordering ordering = Ordering::lex;
  ComplexMatrix data;
};

// C_{n,m} (lex) or C~_{n,m} (revlex): entry for monomials z^a1 w^b1 (row), z^a2 w^b2 (col)
// is <z^a1 w^b1, z^a2 w^b2> = c(a2-a1, b2-b1).
DoublyToeplitzMatrix assemble(const MomentTable& moments, int n, int m, Ordering ordering = Ordering::lex);

// Gram matrix between the lex monomial vectors of windows (n1,m1) and (n2,m2).
ComplexMatrix cross_gram(const MomentTable& moments, int n1, int m1, int n2, int m2);

// Finite Laurent polynomial sum p(i,j) z^i w^j.
class BivariateLaurentPolynomial {
 public:
  BivariateLaurentPolynomial() = default;
  static BivariateLaurentPolynomial from_polynomial(const BivariatePolynomial& p);

  void add(int i, int j, Complex value);
  Complex coeff(int i, int j) const;
  const std::map<std::pair<int, int>, Complex>& terms() const { return terms_; }

  // p†(z,w) = conj(p)(1/z, 1/w) on the torus.
  BivariateLaurentPolynomial adjoint() const;
  BivariateLaurentPolynomial operator*(const BivariateLaurentPolynomial& o) const;
  BivariateLaurentPolynomial operator+(const BivariateLaurentPolynomial& o) const;

 private:
  std::map<std::pair<int, int>, Complex> terms_;
};

// L(p) = sum p(a,b) c(-a,-b).
Complex evaluate(const MomentTable& moments, const BivariateLaurentPolynomial& p);
// <p,q> = L(p q†).
Complex inner_product(const MomentTable& moments, const BivariateLaurentPolynomial& p,
                      const BivariateLaurentPolynomial& q);
Complex inner_product(const MomentTable& moments, const BivariatePolynomial& p, const BivariatePolynomial& q);
// [<P_r, Q_s>]_{r,s}.
ComplexMatrix inner_product(const MomentTable& moments, const VectorPolynomial& p, const VectorPolynomial& q);

struct PositivityReport {
  bool positive_definite = false;
  double min_pivot = 0.0;
};

PositivityReport is_positive_definite(const MomentTable& moments, int n, int m, double pivot_tol = kPivotTol);

inline constexpr int kDefaultDensityGrid = 256;

// Tensor trapezoid moments c(i,j) = mean f(theta,phi) e^{-i i theta} e^{-i j phi}.
// Throws NonPositiveDensitySample if a sample is not strictly positive (or not finite).
MomentTable moments_from_density(const std::function<double(double, double)>& density, int n, int m,
                                 int grid_z = kDefaultDensityGrid, int grid_w = kDefaultDensityGrid);

// Same, from samples f(theta_k, phi_l) on the uniform grid (rows: theta).
MomentTable moments_from_samples(const Eigen::MatrixXd& samples, int n, int m);

}  // namespace bicircle
