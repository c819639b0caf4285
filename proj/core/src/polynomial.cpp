#include "bicircle/polynomial.hpp"

#include <algorithm>

#include "bicircle/errors.hpp"

namespace bicircle {

BivariatePolynomial::BivariatePolynomial(ComplexMatrix coeffs) : c_(std::move(coeffs)) {
  if (c_.rows() == 0 || c_.cols() == 0) c_ = ComplexMatrix::Zero(1, 1);
}

BivariatePolynomial BivariatePolynomial::monomial(int a, int b, Complex value) {
  BivariatePolynomial p(a, b);
  p.c_(a, b) = value;
  return p;
}

Complex BivariatePolynomial::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a > deg_z() || b > deg_w()) return 0.0;
  return c_(a, b);
}

void BivariatePolynomial::set_coeff(int a, int b, Complex value) {
  if (a < 0 || b < 0) throw InvalidArgument("negative exponent in polynomial coefficient");
  if (a > deg_z() || b > deg_w()) *this = padded(std::max(a, deg_z()), std::max(b, deg_w()));
  c_(a, b) = value;
}

Complex BivariatePolynomial::operator()(Complex z, Complex w) const {
  Complex acc = 0.0;
  for (int a = deg_z(); a >= 0; --a) {
    Complex inner = 0.0;
    for (int b = deg_w(); b >= 0; --b) inner = inner * w + c_(a, b);
    acc = acc * z + inner;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::padded(int deg_z_new, int deg_w_new) const {
  if (deg_z_new < deg_z() || deg_w_new < deg_w()) {
    // Allowed only when the dropped coefficients vanish.
    for (int a = 0; a <= deg_z(); ++a)
      for (int b = 0; b <= deg_w(); ++b)
        if ((a > deg_z_new || b > deg_w_new) && c_(a, b) != Complex(0.0)) {
          throw DimensionMismatch("padding would truncate nonzero coefficients");
        }
  }
  ComplexMatrix out = ComplexMatrix::Zero(deg_z_new + 1, deg_w_new + 1);
  const int rz = std::min(deg_z(), deg_z_new) + 1;
  const int rw = std::min(deg_w(), deg_w_new) + 1;
  out.topLeftCorner(rz, rw) = c_.topLeftCorner(rz, rw);
  return BivariatePolynomial(out);
}

BivariatePolynomial BivariatePolynomial::reversed(int n, int m) const {
  const BivariatePolynomial p = padded(n, m);
  ComplexMatrix out(n + 1, m + 1);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= m; ++b) out(n - a, m - b) = std::conj(p.c_(a, b));
  return BivariatePolynomial(out);
}

BivariatePolynomial BivariatePolynomial::times_z() const {
  ComplexMatrix out = ComplexMatrix::Zero(c_.rows() + 1, c_.cols());
  out.bottomRows(c_.rows()) = c_;
  return BivariatePolynomial(out);
}

BivariatePolynomial BivariatePolynomial::times_w() const {
  ComplexMatrix out = ComplexMatrix::Zero(c_.rows(), c_.cols() + 1);
  out.rightCols(c_.cols()) = c_;
  return BivariatePolynomial(out);
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  const int n = std::max(deg_z(), o.deg_z());
  const int m = std::max(deg_w(), o.deg_w());
  return BivariatePolynomial(padded(n, m).c_ + o.padded(n, m).c_);
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
  return *this + o * Complex(-1.0);
}

BivariatePolynomial BivariatePolynomial::operator*(Complex s) const { return BivariatePolynomial(c_ * s); }

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  BivariatePolynomial out(deg_z() + o.deg_z(), deg_w() + o.deg_w());
  for (int a = 0; a <= deg_z(); ++a)
    for (int b = 0; b <= deg_w(); ++b)
      for (int c = 0; c <= o.deg_z(); ++c)
        for (int d = 0; d <= o.deg_w(); ++d) out.c_(a + c, b + d) += c_(a, b) * o.c_(c, d);
  return out;
}

// ---------------------------------------------------------------------------

VectorPolynomial::VectorPolynomial(int n, int m, ComplexMatrix coeffs, Ordering ordering)
    : n_(n), m_(m), c_(std::move(coeffs)), ordering_(ordering) {
  if (n < 0 || m < 0) throw InvalidArgument("negative window bidegree");
  if (c_.cols() != (n + 1) * (m + 1)) {
    throw DimensionMismatch("coefficient matrix width does not match the window");
  }
}

VectorPolynomial VectorPolynomial::from_rows(int n, int m, const std::vector<BivariatePolynomial>& rows,
                                             Ordering ordering) {
  ComplexMatrix c(static_cast<Eigen::Index>(rows.size()), (n + 1) * (m + 1));
  for (size_t r = 0; r < rows.size(); ++r) {
    const BivariatePolynomial p = rows[r].padded(n, m);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= m; ++b) c(static_cast<Eigen::Index>(r), lex_index(n, m, a, b)) = p.coeff(a, b);
  }
  return VectorPolynomial(n, m, c, ordering);
}

VectorPolynomial VectorPolynomial::empty(int n, int m, Ordering ordering) {
  return VectorPolynomial(n, m, ComplexMatrix(0, (n + 1) * (m + 1)), ordering);
}

BivariatePolynomial VectorPolynomial::row(int i) const {
  BivariatePolynomial p(n_, m_);
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= m_; ++b) p.set_coeff(a, b, c_(i, lex_index(n_, m_, a, b)));
  return p;
}

ComplexVector VectorPolynomial::operator()(Complex z, Complex w) const {
  return c_ * monomial_vector(n_, m_, z, w);
}

VectorPolynomial VectorPolynomial::padded(int n, int m) const {
  if (n < n_ || m < m_) throw DimensionMismatch("cannot pad to a smaller window");
  ComplexMatrix out = ComplexMatrix::Zero(c_.rows(), (n + 1) * (m + 1));
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= m_; ++b) out.col(lex_index(n, m, a, b)) = c_.col(lex_index(n_, m_, a, b));
  return VectorPolynomial(n, m, out, ordering_);
}

VectorPolynomial VectorPolynomial::reversed() const {
  return VectorPolynomial(n_, m_, c_.conjugate().rowwise().reverse(), ordering_);
}

VectorPolynomial VectorPolynomial::times_z() const {
  ComplexMatrix out = ComplexMatrix::Zero(c_.rows(), (n_ + 2) * (m_ + 1));
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= m_; ++b) out.col(lex_index(n_ + 1, m_, a + 1, b)) = c_.col(lex_index(n_, m_, a, b));
  return VectorPolynomial(n_ + 1, m_, out, ordering_);
}

VectorPolynomial VectorPolynomial::times_w() const {
  ComplexMatrix out = ComplexMatrix::Zero(c_.rows(), (n_ + 1) * (m_ + 2));
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= m_; ++b) out.col(lex_index(n_, m_ + 1, a, b + 1)) = c_.col(lex_index(n_, m_, a, b));
  return VectorPolynomial(n_, m_ + 1, out, ordering_);
}

VectorPolynomial VectorPolynomial::rows_range(int first, int count) const {
  return VectorPolynomial(n_, m_, c_.middleRows(first, count), ordering_);
}

VectorPolynomial VectorPolynomial::with_ordering(Ordering o) const { return VectorPolynomial(n_, m_, c_, o); }

VectorPolynomial VectorPolynomial::operator+(const VectorPolynomial& o) const {
  const int n = std::max(n_, o.n_);
  const int m = std::max(m_, o.m_);
  const VectorPolynomial a = padded(n, m);
  const VectorPolynomial b = o.padded(n, m);
  if (a.c_.rows() != b.c_.rows()) throw DimensionMismatch("vector polynomial heights differ");
  return VectorPolynomial(n, m, a.c_ + b.c_, ordering_);
}

VectorPolynomial VectorPolynomial::operator-(const VectorPolynomial& o) const {
  return *this + ComplexMatrix(-ComplexMatrix::Identity(o.height(), o.height())) * o;
}

VectorPolynomial operator*(const ComplexMatrix& a, const VectorPolynomial& p) {
  if (a.cols() != p.c_.rows()) throw DimensionMismatch("matrix times vector polynomial: size mismatch");
  return VectorPolynomial(p.n_, p.m_, a * p.c_, p.ordering_);
}

VectorPolynomial stack(const VectorPolynomial& top, const VectorPolynomial& bottom) {
  const int n = std::max(top.n(), bottom.n());
  const int m = std::max(top.m(), bottom.m());
  const VectorPolynomial a = top.padded(n, m);
  const VectorPolynomial b = bottom.padded(n, m);
  ComplexMatrix c(a.height() + b.height(), (n + 1) * (m + 1));
  c << a.coefficients(), b.coefficients();
  return VectorPolynomial(n, m, c, top.ordering());
}

ComplexVector monomial_vector(int n, int m, Complex z, Complex w, Ordering ordering) {
  ComplexVector v((n + 1) * (m + 1));
  Complex za = 1.0;
  for (int a = 0; a <= n; ++a) {
    Complex wb = 1.0;
    for (int b = 0; b <= m; ++b) {
      const int idx = ordering == Ordering::lex ? lex_index(n, m, a, b) : revlex_index(n, m, a, b);
      v(idx) = za * wb;
      wb *= w;
    }
    za *= z;
  }
  return v;
}

// ---------------------------------------------------------------------------

MatrixPolynomial::MatrixPolynomial(std::vector<ComplexMatrix> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw InvalidArgument("matrix polynomial needs at least one coefficient");
  for (const auto& b : c_) {
    if (b.rows() != c_.front().rows() || b.cols() != c_.front().cols()) {
      throw DimensionMismatch("matrix polynomial coefficients differ in size");
    }
  }
}

MatrixPolynomial MatrixPolynomial::constant(const ComplexMatrix& b) { return MatrixPolynomial({b}); }

ComplexMatrix MatrixPolynomial::operator()(Complex z) const {
  ComplexMatrix acc = ComplexMatrix::Zero(c_.front().rows(), c_.front().cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

MatrixPolynomial MatrixPolynomial::reversed() const {
  std::vector<ComplexMatrix> out;
  out.reserve(c_.size());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out.push_back(it->adjoint());
  return MatrixPolynomial(out);
}

MatrixPolynomial MatrixPolynomial::times_z() const {
  std::vector<ComplexMatrix> out;
  out.reserve(c_.size() + 1);
  out.push_back(ComplexMatrix::Zero(c_.front().rows(), c_.front().cols()));
  out.insert(out.end(), c_.begin(), c_.end());
  return MatrixPolynomial(out);
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& o) const {
  const size_t k = std::max(c_.size(), o.c_.size());
  std::vector<ComplexMatrix> out(k, ComplexMatrix::Zero(c_.front().rows(), c_.front().cols()));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return MatrixPolynomial(out);
}

MatrixPolynomial MatrixPolynomial::operator-(const MatrixPolynomial& o) const {
  return *this + o * ComplexMatrix(-ComplexMatrix::Identity(o.c_.front().cols(), o.c_.front().cols()));
}

MatrixPolynomial MatrixPolynomial::operator*(const ComplexMatrix& right) const {
  std::vector<ComplexMatrix> out;
  out.reserve(c_.size());
  for (const auto& b : c_) out.push_back(b * right);
  return MatrixPolynomial(out);
}

MatrixPolynomial operator*(const ComplexMatrix& left, const MatrixPolynomial& p) {
  std::vector<ComplexMatrix> out;
  out.reserve(p.c_.size());
  for (const auto& b : p.c_) out.push_back(left * b);
  return MatrixPolynomial(out);
}

}  // namespace bicircle
