#pragma once

#include <vector>

#include "bicircle/matrix_kernel.hpp"

namespace bicircle {

enum class Ordering { lex, revlex };

// Dense polynomial sum_{a<=deg_z, b<=deg_w} c(a,b) z^a w^b.
class BivariatePolynomial {
 public:
  BivariatePolynomial() : c_(ComplexMatrix::Zero(1, 1)) {}
  BivariatePolynomial(int deg_z, int deg_w) : c_(ComplexMatrix::Zero(deg_z + 1, deg_w + 1)) {}
  explicit BivariatePolynomial(ComplexMatrix coeffs);

  static BivariatePolynomial monomial(int a, int b, Complex value = 1.0);

  int deg_z() const { return static_cast<int>(c_.rows()) - 1; }
  int deg_w() const { return static_cast<int>(c_.cols()) - 1; }

  Complex coeff(int a, int b) const;
  void set_coeff(int a, int b, Complex value);
  const ComplexMatrix& coefficients() const { return c_; }

  // Horner in w inside Horner in z.
  Complex operator()(Complex z, Complex w) const;

  BivariatePolynomial padded(int deg_z, int deg_w) const;
  // z^n w^m conj(p(1/conj z, 1/conj w)); requires n >= deg_z, m >= deg_w.
  BivariatePolynomial reversed(int n, int m) const;
  BivariatePolynomial times_z() const;
  BivariatePolynomial times_w() const;

  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(Complex s) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;

 private:
  ComplexMatrix c_;
};

// A stack of polynomials over the window [0..n]x[0..m], stored as a coefficient
// matrix against the descending lex monomial vector (z^n w^m, ..., 1).
class VectorPolynomial {
 public:
  VectorPolynomial() = default;
  VectorPolynomial(int n, int m, ComplexMatrix coeffs, Ordering ordering = Ordering::lex);
  static VectorPolynomial from_rows(int n, int m, const std::vector<BivariatePolynomial>& rows,
                                    Ordering ordering = Ordering::lex);
  static VectorPolynomial empty(int n, int m, Ordering ordering = Ordering::lex);

  int n() const { return n_; }
  int m() const { return m_; }
  int height() const { return static_cast<int>(c_.rows()); }
  Ordering ordering() const { return ordering_; }
  const ComplexMatrix& coefficients() const { return c_; }

  BivariatePolynomial row(int i) const;
  ComplexVector operator()(Complex z, Complex w) const;

  VectorPolynomial padded(int n, int m) const;
  // Rowwise reverse at the window bidegree (n,m).
  VectorPolynomial reversed() const;
  VectorPolynomial times_z() const;
  VectorPolynomial times_w() const;
  VectorPolynomial rows_range(int first, int count) const;
  VectorPolynomial with_ordering(Ordering o) const;

  VectorPolynomial operator+(const VectorPolynomial& o) const;
  VectorPolynomial operator-(const VectorPolynomial& o) const;
  friend VectorPolynomial operator*(const ComplexMatrix& a, const VectorPolynomial& p);

 private:
  int n_ = 0;
  int m_ = 0;
  ComplexMatrix c_;
  Ordering ordering_ = Ordering::lex;
};

VectorPolynomial stack(const VectorPolynomial& top, const VectorPolynomial& bottom);

// Monomial values (z^n w^m, ..., 1) in lex or revlex order.
ComplexVector monomial_vector(int n, int m, Complex z, Complex w, Ordering ordering = Ordering::lex);

// One-variable matrix polynomial sum_k B_k z^k.
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  explicit MatrixPolynomial(std::vector<ComplexMatrix> coeffs);
  static MatrixPolynomial constant(const ComplexMatrix& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int size() const { return c_.empty() ? 0 : static_cast<int>(c_.front().rows()); }
  const std::vector<ComplexMatrix>& coefficients() const { return c_; }
  const ComplexMatrix& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
  const ComplexMatrix& leading() const { return c_.back(); }

  ComplexMatrix operator()(Complex z) const;
  // z^degree B(1/conj z)^dagger.
  MatrixPolynomial reversed() const;
  MatrixPolynomial times_z() const;

  MatrixPolynomial operator+(const MatrixPolynomial& o) const;
  MatrixPolynomial operator-(const MatrixPolynomial& o) const;
  MatrixPolynomial operator*(const ComplexMatrix& right) const;
  friend MatrixPolynomial operator*(const ComplexMatrix& left, const MatrixPolynomial& p);

 private:
  std::vector<ComplexMatrix> c_;
};

}  // namespace bicircle
