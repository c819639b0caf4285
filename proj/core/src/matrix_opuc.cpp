#include "bicircle/matrix_opuc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bicircle/errors.hpp"

namespace bicircle {

namespace {

ComplexMatrix identity(Eigen::Index k) { return ComplexMatrix::Identity(k, k); }

// Exact division by z of a polynomial whose constant term is (numerically) zero.
MatrixPolynomial divide_by_z(const MatrixPolynomial& p) {
  std::vector<ComplexMatrix> c(p.coefficients().begin() + 1, p.coefficients().end());
  return MatrixPolynomial(c);
}

double two_pi() { return 2.0 * std::numbers::pi; }

}  // namespace

BlockMoments opuc_blocks(const MomentTable& moments, int n, int m) {
  BlockMoments c;
  c.n = n;
  for (int j = -n; j <= n; ++j) {
    ComplexMatrix b(m + 1, m + 1);
    for (int r = 0; r <= m; ++r)
      for (int s = 0; s <= m; ++s) b(r, s) = moments.at(j, r - s);
    c.blocks.push_back(b);
  }
  return c;
}

ComplexMatrix block_toeplitz(const BlockMoments& c) {
  const int k = c.block_size();
  ComplexMatrix t((c.n + 1) * k, (c.n + 1) * k);
  for (int r = 0; r <= c.n; ++r)
    for (int s = 0; s <= c.n; ++s) t.block(r * k, s * k, k, k) = c.at(r - s);
  return t;
}

ComplexMatrix matrix_functional(const BlockMoments& c, const MatrixPolynomial& p, const MatrixPolynomial& q) {
  ComplexMatrix s = ComplexMatrix::Zero(p.coeff(0).rows(), q.coeff(0).rows());
  for (int a = 0; a <= p.degree(); ++a)
    for (int b = 0; b <= q.degree(); ++b) s += p.coeff(a) * c.at(b - a) * q.coeff(b).adjoint();
  return s;
}

ComplexMatrix matrix_functional_adjoint(const BlockMoments& c, const MatrixPolynomial& p,
                                        const MatrixPolynomial& q) {
  ComplexMatrix s = ComplexMatrix::Zero(p.coeff(0).cols(), q.coeff(0).cols());
  for (int a = 0; a <= p.degree(); ++a)
    for (int b = 0; b <= q.degree(); ++b) s += p.coeff(a).adjoint() * c.at(a - b) * q.coeff(b);
  return s;
}

OpucSequence levinson(const BlockMoments& c, int n) {
  if (n > c.n) throw InvalidArgument("levinson: not enough block moments for the requested degree");
  const int k = c.block_size();
  const ComplexMatrix eye = identity(k);
  lower_cholesky(c.at(0));  // positivity of C_0
  const ComplexMatrix c0_inv = checked_inverse(c.at(0));
  OpucSequence seq;
  seq.left.push_back(MatrixPolynomial::constant(lower_cholesky(c0_inv).adjoint()));
  seq.right.push_back(MatrixPolynomial::constant(upper_cholesky(c0_inv)));
  seq.reflection.emplace_back();
  seq.a.emplace_back();
  seq.a_hat.emplace_back();
  for (int i = 0; i < n; ++i) {
    const MatrixPolynomial& li = seq.left.back();
    const MatrixPolynomial& ri = seq.right.back();
    const MatrixPolynomial rev_r = ri.reversed();
    const MatrixPolynomial rev_l = li.reversed();
    const ComplexMatrix e = matrix_functional(c, li.times_z(), rev_r);
    const ComplexMatrix a = upper_cholesky(eye - e * e.adjoint());
    const ComplexMatrix a_hat = lower_cholesky(eye - e.adjoint() * e).adjoint();
    const MatrixPolynomial l_next = checked_inverse(a) * (li.times_z() - e * rev_r);
    const MatrixPolynomial r_next = (ri.times_z() - rev_l * e) * checked_inverse(a_hat);
    seq.left.push_back(l_next);
    seq.right.push_back(r_next);
    seq.reflection.push_back(e);
    seq.a.push_back(a);
    seq.a_hat.push_back(a_hat);
  }
  return seq;
}

std::pair<MatrixPolynomial, MatrixPolynomial> inverse_step(const MatrixPolynomial& left_next,
                                                           const MatrixPolynomial& right_next,
                                                           const ComplexMatrix& e, const ComplexMatrix& a,
                                                           const ComplexMatrix& a_hat) {
  const ComplexMatrix a_inv = checked_inverse(a);
  const ComplexMatrix a_hat_inv = checked_inverse(a_hat);
  const MatrixPolynomial zl = a_inv.adjoint() * left_next + (e * a_hat_inv) * right_next.reversed();
  const MatrixPolynomial zr = right_next * a_hat_inv.adjoint() + left_next.reversed() * (a_inv * e);
  return {divide_by_z(zl), divide_by_z(zr)};
}

BoundaryReflection reflection_from_boundary(const MatrixPolynomial& left_next, const MatrixPolynomial& right_next,
                                            const ComplexMatrix& a, const ComplexMatrix& a_hat) {
  const ComplexMatrix rev_r0 = right_next.reversed()(0.0);
  const ComplexMatrix rev_l0 = left_next.reversed()(0.0);
  BoundaryReflection out;
  out.from_left = -checked_inverse(a).adjoint() * left_next(0.0) * checked_inverse(rev_r0) * a_hat;
  out.from_right = -a * checked_inverse(rev_l0) * right_next(0.0) * checked_inverse(a_hat).adjoint();
  return out;
}

double cd_residual(const OpucSequence& seq, Complex z, Complex z1) {
  const Complex f = std::conj(z) * z1;
  const int k = seq.levels();
  const int size = seq.left.front().size();
  ComplexMatrix sum_l = ComplexMatrix::Zero(size, size);
  ComplexMatrix sum_r = ComplexMatrix::Zero(size, size);
  double worst = 0.0;
  for (int i = 0; i <= k; ++i) {
    const ComplexMatrix lz = seq.left[i](z), lz1 = seq.left[i](z1);
    const ComplexMatrix rz = seq.right[i](z), rz1 = seq.right[i](z1);
    sum_l += lz.adjoint() * lz1;
    sum_r += rz1 * rz.adjoint();
    const MatrixPolynomial rev_r = seq.right[i].reversed();
    const MatrixPolynomial rev_l = seq.left[i].reversed();
    const ComplexMatrix first = rev_r(z).adjoint() * rev_r(z1) - f * lz.adjoint() * lz1 - (1.0 - f) * sum_l;
    const ComplexMatrix second = rev_l(z1) * rev_l(z).adjoint() - f * rz1 * rz.adjoint() - (1.0 - f) * sum_r;
    worst = std::max({worst, max_abs(first), max_abs(second)});
  }
  return worst;
}

SpectralMatchReport spectral_matching_check(const OpucSequence& seq, int k, const BlockMoments& c, int grid) {
  const MatrixPolynomial rev_l = seq.left.at(k).reversed();
  const MatrixPolynomial rev_r = seq.right.at(k).reversed();
  const int size = rev_l.size();
  std::vector<ComplexMatrix> coeffs(static_cast<size_t>(2 * k + 1), ComplexMatrix::Zero(size, size));
  SpectralMatchReport rep;
  for (int g = 0; g < grid; ++g) {
    const double theta = two_pi() * g / grid;
    const Complex z = std::polar(1.0, theta);
    const ComplexMatrix fl = rev_l(z);
    const ComplexMatrix fr = rev_r(z);
    const ComplexMatrix w = checked_inverse(fl * fl.adjoint());
    const ComplexMatrix w_right = checked_inverse(fr.adjoint() * fr);
    rep.left_right_discrepancy = std::max(rep.left_right_discrepancy, max_abs(w - w_right));
    for (int j = -k; j <= k; ++j) coeffs[static_cast<size_t>(j + k)] += std::polar(1.0, -j * theta) * w;
  }
  for (int j = -k; j <= k; ++j) {
    const ComplexMatrix cj = coeffs[static_cast<size_t>(j + k)] / double(grid);
    rep.max_moment_error = std::max(rep.max_moment_error, max_abs(cj - c.at(j)));
  }
  return rep;
}

double determinant_identity_error(const OpucSequence& seq, const BlockMoments& c, int k) {
  const ComplexMatrix lead = seq.left.at(k).leading();
  const int size = static_cast<int>(lead.rows());
  const Complex lhs = 1.0 / (lead.adjoint() * lead).determinant();
  Complex rhs = c.at(0).determinant();
  for (int j = 1; j <= k; ++j) {
    rhs *= (identity(size) - seq.reflection[j] * seq.reflection[j].adjoint()).determinant();
  }
  return std::abs(lhs - rhs) / std::abs(rhs);
}

double entropy_identity_error(const OpucSequence& seq, int k, int grid) {
  const ComplexMatrix lead = seq.left.at(k).leading();
  const double lhs = -std::log((lead.adjoint() * lead).determinant().real());
  const MatrixPolynomial rev_l = seq.left.at(k).reversed();
  double acc = 0.0;
  for (int g = 0; g < grid; ++g) {
    const ComplexMatrix f = rev_l(std::polar(1.0, two_pi() * g / grid));
    acc -= std::log((f * f.adjoint()).determinant().real());
  }
  const double rhs = acc / grid;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

MatrixStabilityCheck check_disk_stability(const MatrixPolynomial& p, int radial, int angular) {
  MatrixStabilityCheck out;
  out.min_abs_det = std::abs(p(0.0).determinant());
  for (int r = 1; r <= radial; ++r) {
    const double rho = double(r) / radial;
    for (int t = 0; t < angular; ++t) {
      out.min_abs_det = std::min(out.min_abs_det, std::abs(p(std::polar(rho, two_pi() * t / angular)).determinant()));
    }
  }
  // Winding of det on the unit circle from accumulated argument increments.
  const int fine = std::max(8 * angular, 256);
  double total = 0.0;
  Complex prev = p(1.0).determinant();
  for (int t = 1; t <= fine; ++t) {
    const Complex cur = p(std::polar(1.0, two_pi() * t / fine)).determinant();
    total += std::arg(cur / prev);
    prev = cur;
  }
  out.winding_number = static_cast<int>(std::lround(total / two_pi()));
  return out;
}

ComplexMatrix MatrixTrigPolynomial::operator()(double theta) const {
  ComplexMatrix s = ComplexMatrix::Zero(coeffs.front().rows(), coeffs.front().cols());
  for (int k = -degree; k <= degree; ++k) s += std::polar(1.0, k * theta) * at(k);
  return s;
}

MatrixTrigPolynomial MatrixTrigPolynomial::from_product(const MatrixPolynomial& g) {
  const int n = g.degree();
  const int size = g.size();
  MatrixTrigPolynomial q;
  q.degree = n;
  q.coeffs.assign(static_cast<size_t>(2 * n + 1), ComplexMatrix::Zero(size, size));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) q.coeffs[static_cast<size_t>(a - b + n)] += g.coeff(a) * g.coeff(b).adjoint();
  return q;
}

MatrixPolynomial matrix_fejer_riesz(const MatrixTrigPolynomial& q, int n, int grid) {
  if (grid <= 0) grid = std::max(1024, 32 * std::max(n, q.degree));
  const int size = static_cast<int>(q.coeffs.front().rows());
  BlockMoments c;
  c.n = n;
  c.blocks.assign(static_cast<size_t>(2 * n + 1), ComplexMatrix::Zero(size, size));
  for (int g = 0; g < grid; ++g) {
    const double theta = two_pi() * g / grid;
    const ComplexMatrix qt = q(theta);
    const ComplexMatrix herm = 0.5 * (qt + qt.adjoint());
    const double lo = min_hermitian_eigenvalue(herm);
    if (!(lo > 1e-14 * std::max(1.0, max_abs(herm)))) {
      throw NotStrictlyPositive("matrix trigonometric polynomial is not positive definite at theta = " +
                                std::to_string(theta));
    }
    const ComplexMatrix w = checked_inverse(herm);
    for (int j = -n; j <= n; ++j) c.blocks[static_cast<size_t>(j + n)] += std::polar(1.0, -j * theta) * w / double(grid);
  }
  // Restore exact Hermitian symmetry of the block sequence.
  for (int j = 0; j <= n; ++j) {
    const ComplexMatrix sym = 0.5 * (c.at(j) + c.at(-j).adjoint());
    c.blocks[static_cast<size_t>(j + n)] = sym;
    c.blocks[static_cast<size_t>(n - j)] = sym.adjoint();
  }
  return levinson(c, n).left.at(n).reversed();
}

RegularizedFactor matrix_fejer_riesz_semidefinite(const MatrixTrigPolynomial& q, int n, int grid) {
  double norm = 0.0;
  const int samples = std::max(256, 16 * q.degree);
  for (int g = 0; g < samples; ++g) norm = std::max(norm, spectral_norm(q(two_pi() * g / samples)));
  const double eps = 1e-8 * std::max(norm, 1e-300);
  MatrixTrigPolynomial shifted = q;
  shifted.coeffs[static_cast<size_t>(q.degree)] += eps * identity(q.coeffs.front().rows());
  return {matrix_fejer_riesz(shifted, n, grid), eps};
}

}  // namespace bicircle
