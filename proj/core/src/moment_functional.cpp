#include "bicircle/moment_functional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bicircle/errors.hpp"

namespace bicircle {

MomentTable::MomentTable(int n_max, int m_max) : n_max_(n_max), m_max_(m_max) {
  if (n_max < 0 || m_max < 0) throw InvalidArgument("moment window must be nonnegative");
  values_.resize(static_cast<size_t>((2 * n_max + 1) * (2 * m_max + 1)));
}

MomentTable MomentTable::delta(int n_max, int m_max, double c00) {
  MomentTable t(n_max, m_max);
  for (int i = -n_max; i <= n_max; ++i)
    for (int j = -m_max; j <= m_max; ++j) t.values_[t.index(i, j)] = Complex(0.0);
  t.values_[t.index(0, 0)] = Complex(c00);
  return t;
}

size_t MomentTable::index(int i, int j) const {
  return static_cast<size_t>((i + n_max_) * (2 * m_max_ + 1) + (j + m_max_));
}

bool MomentTable::has(int i, int j) const { return in_window(i, j) && values_[index(i, j)].has_value(); }

Complex MomentTable::at(int i, int j) const {
  if (!has(i, j)) throw MissingMoment(i, j);
  return *values_[index(i, j)];
}

void MomentTable::set(int i, int j, Complex value) {
  if (!in_window(i, j)) {
    throw InvalidArgument("moment (" + std::to_string(i) + "," + std::to_string(j) + ") outside the table window");
  }
  if (i == 0 && j == 0) {
    if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value))) {
      throw InvalidArgument("c(0,0) must be real");
    }
    value = Complex(value.real(), 0.0);
  }
  values_[index(i, j)] = value;
  values_[index(-i, -j)] = std::conj(value);
  if (i == 0 && j == 0) values_[index(0, 0)] = value;
}

MomentTable MomentTable::resized(int n_max, int m_max) const {
  MomentTable t(n_max, m_max);
  for (int i = -std::min(n_max, n_max_); i <= std::min(n_max, n_max_); ++i)
    for (int j = -std::min(m_max, m_max_); j <= std::min(m_max, m_max_); ++j)
      t.values_[t.index(i, j)] = values_[index(i, j)];
  return t;
}

bool MomentTable::complete(int n, int m) const {
  for (int i = -n; i <= n; ++i)
    for (int j = -m; j <= m; ++j)
      if (!has(i, j)) return false;
  return true;
}

double MomentTable::max_difference(const MomentTable& o, int n, int m) const {
  double d = 0.0;
  for (int i = -n; i <= n; ++i)
    for (int j = -m; j <= m; ++j) d = std::max(d, std::abs(at(i, j) - o.at(i, j)));
  return d;
}

DoublyToeplitzMatrix assemble(const MomentTable& moments, int n, int m, Ordering ordering) {
  const int dim = (n + 1) * (m + 1);
  DoublyToeplitzMatrix out{n, m, ordering, ComplexMatrix(dim, dim)};
  for (int a1 = 0; a1 <= n; ++a1)
    for (int b1 = 0; b1 <= m; ++b1)
      for (int a2 = 0; a2 <= n; ++a2)
        for (int b2 = 0; b2 <= m; ++b2) {
          const Complex v = moments.at(a2 - a1, b2 - b1);
          if (ordering == Ordering::lex) {
            out.data(lex_index(n, m, a1, b1), lex_index(n, m, a2, b2)) = v;
          } else {
            out.data(revlex_index(n, m, a1, b1), revlex_index(n, m, a2, b2)) = v;
          }
        }
  return out;
}

ComplexMatrix cross_gram(const MomentTable& moments, int n1, int m1, int n2, int m2) {
  ComplexMatrix g((n1 + 1) * (m1 + 1), (n2 + 1) * (m2 + 1));
  for (int a1 = 0; a1 <= n1; ++a1)
    for (int b1 = 0; b1 <= m1; ++b1)
      for (int a2 = 0; a2 <= n2; ++a2)
        for (int b2 = 0; b2 <= m2; ++b2)
          g(lex_index(n1, m1, a1, b1), lex_index(n2, m2, a2, b2)) = moments.at(a2 - a1, b2 - b1);
  return g;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::from_polynomial(const BivariatePolynomial& p) {
  BivariateLaurentPolynomial out;
  for (int a = 0; a <= p.deg_z(); ++a)
    for (int b = 0; b <= p.deg_w(); ++b)
      if (p.coeff(a, b) != Complex(0.0)) out.add(a, b, p.coeff(a, b));
  return out;
}

void BivariateLaurentPolynomial::add(int i, int j, Complex value) { terms_[{i, j}] += value; }

Complex BivariateLaurentPolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Complex(0.0) : it->second;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::adjoint() const {
  BivariateLaurentPolynomial out;
  for (const auto& [ij, v] : terms_) out.add(-ij.first, -ij.second, std::conj(v));
  return out;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::operator*(const BivariateLaurentPolynomial& o) const {
  BivariateLaurentPolynomial out;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) out.add(a.first + b.first, a.second + b.second, x * y);
  return out;
}

BivariateLaurentPolynomial BivariateLaurentPolynomial::operator+(const BivariateLaurentPolynomial& o) const {
  BivariateLaurentPolynomial out = *this;
  for (const auto& [ij, v] : o.terms_) out.add(ij.first, ij.second, v);
  return out;
}

Complex evaluate(const MomentTable& moments, const BivariateLaurentPolynomial& p) {
  Complex s = 0.0;
  for (const auto& [ij, v] : p.terms()) {
    if (v == Complex(0.0)) continue;
    s += v * moments.at(-ij.first, -ij.second);
  }
  return s;
}

Complex inner_product(const MomentTable& moments, const BivariateLaurentPolynomial& p,
                      const BivariateLaurentPolynomial& q) {
  return evaluate(moments, p * q.adjoint());
}

Complex inner_product(const MomentTable& moments, const BivariatePolynomial& p, const BivariatePolynomial& q) {
  return inner_product(moments, BivariateLaurentPolynomial::from_polynomial(p),
                       BivariateLaurentPolynomial::from_polynomial(q));
}

ComplexMatrix inner_product(const MomentTable& moments, const VectorPolynomial& p, const VectorPolynomial& q) {
  if (p.height() == 0 || q.height() == 0) return ComplexMatrix(p.height(), q.height());
  return p.coefficients() * cross_gram(moments, p.n(), p.m(), q.n(), q.m()) * q.coefficients().adjoint();
}

PositivityReport is_positive_definite(const MomentTable& moments, int n, int m, double pivot_tol) {
  const PivotScan scan = cholesky_pivot_scan(assemble(moments, n, m).data, pivot_tol);
  return {scan.positive_definite, scan.min_pivot};
}

MomentTable moments_from_samples(const Eigen::MatrixXd& samples, int n, int m) {
  const Eigen::Index gz = samples.rows();
  const Eigen::Index gw = samples.cols();
  if (gz < 2 * n + 2 || gw < 2 * m + 2) throw InvalidArgument("quadrature grid too small for the moment window");
  for (Eigen::Index k = 0; k < gz; ++k)
    for (Eigen::Index l = 0; l < gw; ++l)
      if (!(samples(k, l) > 0.0) || !std::isfinite(samples(k, l))) {
        throw NonPositiveDensitySample("density sample " + std::to_string(samples(k, l)) + " at grid point (" +
                                       std::to_string(k) + "," + std::to_string(l) + ")");
      }
  const double two_pi = 2.0 * std::numbers::pi;
  // First transform along w for each theta row, then along z.
  ComplexMatrix row_tf(gz, 2 * m + 1);
  for (int j = -m; j <= m; ++j) {
    ComplexVector phase(gw);
    for (Eigen::Index l = 0; l < gw; ++l) phase(l) = std::polar(1.0, -two_pi * double(j) * double(l) / double(gw));
    row_tf.col(j + m) = samples.cast<Complex>() * phase;
  }
  MomentTable t(n, m);
  for (int i = 0; i <= n; ++i) {
    ComplexVector phase(gz);
    for (Eigen::Index k = 0; k < gz; ++k) phase(k) = std::polar(1.0, -two_pi * double(i) * double(k) / double(gz));
    const Eigen::RowVectorXcd c = phase.transpose() * row_tf / double(gz * gw);
    for (int j = -m; j <= m; ++j) {
      if (i == 0 && j < 0) continue;
      Complex v = c(j + m);
      if (i == 0 && j == 0) v = Complex(v.real(), 0.0);
      t.set(i, j, v);
    }
  }
  return t;
}

MomentTable moments_from_density(const std::function<double(double, double)>& density, int n, int m, int grid_z,
                                 int grid_w) {
  const double two_pi = 2.0 * std::numbers::pi;
  Eigen::MatrixXd samples(grid_z, grid_w);
  for (int k = 0; k < grid_z; ++k)
    for (int l = 0; l < grid_w; ++l) samples(k, l) = density(two_pi * k / grid_z, two_pi * l / grid_w);
  return moments_from_samples(samples, n, m);
}

}  // namespace bicircle
