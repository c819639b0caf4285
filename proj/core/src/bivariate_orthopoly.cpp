#include "bicircle/bivariate_orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "bicircle/errors.hpp"

namespace bicircle {

namespace {

double residual(const ComplexMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double residual(const ComplexVector& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

ComplexMatrix inv(const ComplexMatrix& a) { return checked_inverse(a); }

ComplexMatrix upper_inverse(const ComplexMatrix& u) {
  return u.triangularView<Eigen::Upper>().solve(ComplexMatrix::Identity(u.rows(), u.cols()));
}

ComplexMatrix first_rows_selector(int rows, int dim) {
  ComplexMatrix s = ComplexMatrix::Zero(rows, dim);
  for (int i = 0; i < rows; ++i) s(i, i) = 1.0;
  return s;
}

// Kernel sum_r p_r(z,w) conj(p_r(z1,w1)).
Complex kernel(const VectorPolynomial& p, Complex z, Complex w, Complex z1, Complex w1) {
  if (p.height() == 0) return 0.0;
  return p(z1, w1).dot(p(z, w));
}

}  // namespace

// ---------------------------------------------------------------------------

PolynomialFamily::PolynomialFamily(int n_max, int m_max) : n_max_(n_max), m_max_(m_max) {
  if (n_max < 0 || m_max < 0) throw InvalidArgument("negative family bidegree");
  const size_t count = static_cast<size_t>((n_max + 1) * (m_max + 1));
  phi_.resize(count);
  tilde_.resize(count);
  set_.assign(count, false);
}

size_t PolynomialFamily::index(int n, int m) const {
  if (n < 0 || m < 0 || n > n_max_ || m > m_max_) throw InvalidArgument("level outside the family window");
  return static_cast<size_t>(n * (m_max_ + 1) + m);
}

bool PolynomialFamily::has(int n, int m) const {
  if (n < 0 || m < 0 || n > n_max_ || m > m_max_) return false;
  return set_[index(n, m)];
}

const VectorPolynomial& PolynomialFamily::phi(int n, int m) const {
  if (!has(n, m)) throw InvalidArgument("family level not available");
  return phi_[index(n, m)];
}

const VectorPolynomial& PolynomialFamily::phi_tilde(int n, int m) const {
  if (!has(n, m)) throw InvalidArgument("family level not available");
  return tilde_[index(n, m)];
}

VectorPolynomial PolynomialFamily::phi_or_empty(int n, int m) const {
  if (n < 0 || m < 0) return VectorPolynomial::empty(std::max(n, 0), std::max(m, 0), Ordering::lex);
  return phi(n, m);
}

VectorPolynomial PolynomialFamily::phi_tilde_or_empty(int n, int m) const {
  if (n < 0 || m < 0) return VectorPolynomial::empty(std::max(n, 0), std::max(m, 0), Ordering::revlex);
  return phi_tilde(n, m);
}

void PolynomialFamily::set(int n, int m, VectorPolynomial phi, VectorPolynomial phi_tilde) {
  if (phi.n() != n || phi.m() != m || phi.height() != m + 1) throw DimensionMismatch("Phi has the wrong shape");
  if (phi_tilde.n() != n || phi_tilde.m() != m || phi_tilde.height() != n + 1) {
    throw DimensionMismatch("Phi~ has the wrong shape");
  }
  const size_t i = index(n, m);
  phi_[i] = std::move(phi);
  tilde_[i] = std::move(phi_tilde);
  set_[i] = true;
}

LevelPolynomials gram_schmidt_level(const MomentTable& moments, int n, int m) {
  const ComplexMatrix c = assemble(moments, n, m, Ordering::lex).data;
  const ComplexMatrix phi = upper_inverse(upper_cholesky(c)).topRows(m + 1);
  const ComplexMatrix ct = assemble(moments, n, m, Ordering::revlex).data;
  const ComplexMatrix tilde = upper_inverse(upper_cholesky(ct)).topRows(n + 1) * lex_to_revlex(n, m);
  return {VectorPolynomial(n, m, phi, Ordering::lex), VectorPolynomial(n, m, tilde, Ordering::revlex)};
}

PolynomialFamily gram_schmidt_levels(const MomentTable& moments, int n_max, int m_max) {
  if (!is_positive_definite(moments, n_max, m_max).positive_definite) {
    throw NotPositiveDefinite("moment matrix is not positive definite");
  }
  PolynomialFamily family(n_max, m_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      LevelPolynomials level = gram_schmidt_level(moments, n, m);
      family.set(n, m, std::move(level.phi), std::move(level.phi_tilde));
    }
  }
  return family;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, const ComplexMatrix*>> LevelCoefficients::entries() const {
  return {{"E", &E},   {"A", &A},   {"K", &K},     {"G", &G},     {"K1", &K1}, {"G1", &G1},
          {"I", &I},   {"I1", &I1}, {"Et", &Et},   {"At", &At},   {"Kt", &Kt}, {"Gt", &Gt},
          {"K1t", &K1t}, {"G1t", &G1t}, {"It", &It}, {"I1t", &I1t}};
}

CoefficientTable::CoefficientTable(int n_max, int m_max) : n_max_(n_max), m_max_(m_max) {
  if (n_max < 0 || m_max < 0) throw InvalidArgument("negative table bidegree");
  const size_t count = static_cast<size_t>((n_max + 1) * (m_max + 1));
  levels_.resize(count);
  set_.assign(count, false);
}

size_t CoefficientTable::index(int n, int m) const {
  if (n < 0 || m < 0 || n > n_max_ || m > m_max_) throw InvalidArgument("level outside the coefficient table");
  return static_cast<size_t>(n * (m_max_ + 1) + m);
}

bool CoefficientTable::has(int n, int m) const {
  if (n < 0 || m < 0 || n > n_max_ || m > m_max_) return false;
  return set_[index(n, m)];
}

const LevelCoefficients& CoefficientTable::at(int n, int m) const {
  if (!has(n, m)) throw InvalidArgument("coefficient level not available");
  return levels_[index(n, m)];
}

void CoefficientTable::set(LevelCoefficients c) {
  const size_t i = index(c.n, c.m);
  levels_[i] = std::move(c);
  set_[i] = true;
}

LevelCoefficients coefficients_by_inner_product(const MomentTable& moments, const PolynomialFamily& family, int n,
                                                int m) {
  auto ip = [&](const VectorPolynomial& p, const VectorPolynomial& q) { return inner_product(moments, p, q); };
  LevelCoefficients c;
  c.n = n;
  c.m = m;
  const VectorPolynomial& phi = family.phi(n, m);
  const VectorPolynomial& tilde = family.phi_tilde(n, m);
  if (n > 0) {
    const VectorPolynomial& p1 = family.phi(n - 1, m);
    c.E = ip(p1.times_z(), p1.reversed());
    c.A = ip(p1.times_z(), phi);
  }
  if (m > 0) {
    const VectorPolynomial& t1 = family.phi_tilde(n, m - 1);
    c.Et = ip(t1.times_w(), t1.reversed());
    c.At = ip(t1.times_w(), tilde);
  }
  const VectorPolynomial pm = family.phi_or_empty(n, m - 1);
  const VectorPolynomial tn = family.phi_tilde_or_empty(n - 1, m);
  c.K = ip(pm, tn);
  c.G = ip(pm, phi);
  c.K1 = ip(pm.times_w(), tn.reversed());
  c.G1 = ip(pm.times_w(), phi);
  c.Kt = ip(tn, pm);
  c.Gt = ip(tn, tilde);
  c.K1t = ip(tn.times_z(), pm.reversed());
  c.G1t = ip(tn.times_z(), tilde);
  c.I = ip(phi, tilde);
  c.I1 = ip(phi.reversed(), tilde);
  c.It = ip(tilde, phi);
  c.I1t = ip(tilde.reversed(), phi);
  return c;
}

CoefficientTable coefficients_by_inner_product(const MomentTable& moments, const PolynomialFamily& family) {
  CoefficientTable table(family.n_max(), family.m_max());
  for (int n = 0; n <= family.n_max(); ++n)
    for (int m = 0; m <= family.m_max(); ++m) table.set(coefficients_by_inner_product(moments, family, n, m));
  return table;
}

ComplexMatrix leading_z_block(const VectorPolynomial& phi) { return phi.coefficients().leftCols(phi.m() + 1); }

ComplexMatrix leading_w_block(const VectorPolynomial& phi_tilde) {
  const int n = phi_tilde.n();
  const int m = phi_tilde.m();
  ComplexMatrix out(phi_tilde.height(), n + 1);
  for (int a = n; a >= 0; --a) out.col(n - a) = phi_tilde.coefficients().col(lex_index(n, m, a, m));
  return out;
}

BivariatePolynomial reverse(const BivariatePolynomial& p, int n, int m) { return p.reversed(n, m); }
VectorPolynomial reverse(const VectorPolynomial& p) { return p.reversed(); }

// ---------------------------------------------------------------------------

double ResidualReport::max_residual() const {
  double r = 0.0;
  for (const auto& item : items) r = std::max(r, item.second);
  return r;
}

void ResidualReport::add(const std::string& name, double value) {
  for (auto& item : items) {
    if (item.first == name) {
      item.second = std::max(item.second, value);
      return;
    }
  }
  items.emplace_back(name, value);
}

void ResidualReport::merge(const ResidualReport& other, const std::string& prefix) {
  for (const auto& item : other.items) add(prefix + item.first, item.second);
}

std::vector<std::pair<Complex, Complex>> sample_points(int count, std::uint64_t seed, double radius_z,
                                                       double radius_w) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<std::pair<Complex, Complex>> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double a = angle(rng);
    const double b = angle(rng);
    out.emplace_back(std::polar(radius_z, a), std::polar(radius_w, b));
  }
  return out;
}

ResidualReport verify_recurrences(const PolynomialFamily& family, const CoefficientTable& coeffs, int n, int m,
                                  const std::vector<std::pair<Complex, Complex>>& points) {
  ResidualReport report;
  const LevelCoefficients& c = coeffs.at(n, m);
  const VectorPolynomial& phi = family.phi(n, m);
  const VectorPolynomial& tilde = family.phi_tilde(n, m);
  const VectorPolynomial pm = family.phi_or_empty(n, m - 1);
  const VectorPolynomial tn = family.phi_tilde_or_empty(n - 1, m);
  for (const auto& [z, w] : points) {
    const ComplexVector f = phi(z, w);
    const ComplexVector rf = phi.reversed()(z, w);
    const ComplexVector t = tilde(z, w);
    const ComplexVector rt = tilde.reversed()(z, w);
    const ComplexVector fm = pm(z, w);
    const ComplexVector rfm = pm.reversed()(z, w);
    const ComplexVector tnv = tn(z, w);
    const ComplexVector rtn = tn.reversed()(z, w);
    if (n > 0) {
      const VectorPolynomial& p1 = family.phi(n - 1, m);
      const ComplexVector f1 = p1(z, w);
      const ComplexVector rf1 = p1.reversed()(z, w);
      report.add("forward", residual(ComplexVector(c.A * f - (z * f1 - c.E * rf1))));
      report.add("forward-reverse",
                 residual(ComplexVector(f + c.A.adjoint() * c.E * inv(c.A.transpose()) * rf -
                                        c.A.adjoint() * (z * f1))));
    }
    if (m > 0) {
      const VectorPolynomial& t1 = family.phi_tilde(n, m - 1);
      const ComplexVector tv1 = t1(z, w);
      const ComplexVector rt1 = t1.reversed()(z, w);
      report.add("forward~", residual(ComplexVector(c.At * t - (w * tv1 - c.Et * rt1))));
      report.add("forward-reverse~",
                 residual(ComplexVector(t + c.At.adjoint() * c.Et * inv(c.At.transpose()) * rt -
                                        c.At.adjoint() * (w * tv1))));
    }
    report.add("gamma", residual(ComplexVector(c.G * f - (fm - c.K * tnv))));
    report.add("gamma1", residual(ComplexVector(c.G1 * f - (w * fm - c.K1 * rtn))));
    report.add("split", residual(ComplexVector(f - (c.I * t + c.G.adjoint() * fm))));
    report.add("split-reverse", residual(ComplexVector(rf - (c.I1 * t + c.G1.transpose() * rfm))));
    report.add("gamma~", residual(ComplexVector(c.Gt * t - (tnv - c.Kt * fm))));
    report.add("gamma1~", residual(ComplexVector(c.G1t * t - (z * tnv - c.K1t * rfm))));
    report.add("split~", residual(ComplexVector(t - (c.It * f + c.Gt.adjoint() * tnv))));
    report.add("split-reverse~", residual(ComplexVector(rt - (c.I1t * f + c.G1t.transpose() * rtn))));
  }
  return report;
}

ResidualReport verify_structure(const LevelCoefficients& c) {
  ResidualReport report;
  const int n = c.n;
  const int m = c.m;
  auto id = [](int k) { return ComplexMatrix(ComplexMatrix::Identity(k, k)); };
  if (n > 0) {
    report.add("E symmetric", residual(ComplexMatrix(c.E - c.E.transpose())));
    report.add("AA+EE=I", residual(ComplexMatrix(c.A * c.A.adjoint() + c.E * c.E.adjoint() - id(m + 1))));
    double below = 0.0;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j < i; ++j) below = std::max(below, std::abs(c.A(i, j)));
      if (c.A(i, i).real() <= 0.0) below = std::max(below, 1.0);
      below = std::max(below, std::abs(c.A(i, i).imag()));
    }
    report.add("A upper positive", below);
  }
  if (m > 0) {
    report.add("E~ symmetric", residual(ComplexMatrix(c.Et - c.Et.transpose())));
    report.add("AA+EE=I~", residual(ComplexMatrix(c.At * c.At.adjoint() + c.Et * c.Et.adjoint() - id(n + 1))));
  }
  report.add("GG+KK=I", residual(ComplexMatrix(c.G * c.G.adjoint() + c.K * c.K.adjoint() - id(m))));
  report.add("G1G1+K1K1=I", residual(ComplexMatrix(c.G1 * c.G1.adjoint() + c.K1 * c.K1.adjoint() - id(m))));
  report.add("II+GG=I", residual(ComplexMatrix(c.I * c.I.adjoint() + c.G.adjoint() * c.G - id(m + 1))));
  report.add("I1I1+G1G1=I",
             residual(ComplexMatrix(c.I1 * c.I1.adjoint() + c.G1.transpose() * c.G1.conjugate() - id(m + 1))));
  report.add("GG+KK=I~", residual(ComplexMatrix(c.Gt * c.Gt.adjoint() + c.Kt * c.Kt.adjoint() - id(n))));
  report.add("II+GG=I~", residual(ComplexMatrix(c.It * c.It.adjoint() + c.Gt.adjoint() * c.Gt - id(n + 1))));
  report.add("Kt=K*", residual(ComplexMatrix(c.Kt - c.K.adjoint())));
  report.add("It=I*", residual(ComplexMatrix(c.It - c.I.adjoint())));
  report.add("I1t=I1^T", residual(ComplexMatrix(c.I1t - c.I1.transpose())));
  report.add("K1t=K1^T", residual(ComplexMatrix(c.K1t - c.K1.transpose())));

  // Zero patterns: G staircase with positive superdiagonal, G1 upper with positive
  // diagonal, I with first row and column equal to e1.
  double pattern = 0.0;
  auto staircase = [&](const ComplexMatrix& g, int shift) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < i + shift && j < g.cols(); ++j) pattern = std::max(pattern, std::abs(g(i, j)));
      if (i + shift < g.cols()) {
        const Complex d = g(i, i + shift);
        if (d.real() <= 0.0) pattern = std::max(pattern, 1.0);
        pattern = std::max(pattern, std::abs(d.imag()));
      }
    }
  };
  staircase(c.G, 1);
  staircase(c.G1, 0);
  staircase(c.Gt, 1);
  staircase(c.G1t, 0);
  report.add("G staircase", pattern);
  ComplexMatrix edge = ComplexMatrix::Zero(m + 1, n + 1);
  edge(0, 0) = 1.0;
  double ipattern = std::max(residual(ComplexMatrix(c.I.row(0) - edge.row(0))),
                             residual(ComplexMatrix(c.I.col(0) - edge.col(0))));
  report.add("I first row/column", ipattern);
  return report;
}

ResidualReport verify_pointwise_formulas(const PolynomialFamily& family, const CoefficientTable& coeffs,
                                         const MomentTable& moments, int n, int m) {
  ResidualReport report;
  const LevelCoefficients& c = coeffs.at(n, m);
  const ComplexMatrix lead = leading_z_block(family.phi(n, m));
  const ComplexMatrix lead_t = leading_w_block(family.phi_tilde(n, m));
  if (n > 0 && m > 0) {
    const ComplexMatrix lead_m = leading_z_block(family.phi(n, m - 1));
    const ComplexMatrix lead_tn = leading_w_block(family.phi_tilde(n - 1, m));
    report.add("G from leading blocks", residual(ComplexMatrix(c.G - lead_m * shift_selector(m) * inv(lead))));
    report.add("G1 from leading blocks", residual(ComplexMatrix(c.G1 - lead_m * lead_selector(m) * inv(lead))));
    const ComplexMatrix f = lead_t * shift_selector(n).transpose() * inv(lead_tn);
    const ComplexMatrix f1 = lead_t * lead_selector(n).transpose() * inv(lead_tn);
    report.add("K from G I F", residual(ComplexMatrix(c.K + c.G * c.I * f)));
    report.add("K1 from G1 I1 F1", residual(ComplexMatrix(c.K1 + c.G1 * c.I1.conjugate() * f1.conjugate())));
  }
  const int dim = (n + 1) * (m + 1);
  const ComplexMatrix ci = inv(assemble(moments, n, m, Ordering::lex).data);
  const ComplexMatrix p = lex_to_revlex(n, m);
  const ComplexMatrix top = first_rows_selector(m + 1, dim);
  const ComplexMatrix topn = first_rows_selector(n + 1, dim);
  ComplexMatrix bottom = ComplexMatrix::Zero(m + 1, dim);
  bottom.rightCols(m + 1) = exchange(m + 1);
  const ComplexMatrix tail = ci * p.transpose() * topn.transpose() * inv(lead_t);
  report.add("I from C^-1", residual(ComplexMatrix(c.I - inv(lead.adjoint()) * top * tail)));
  report.add("I1 from C^-1", residual(ComplexMatrix(c.I1 - inv(lead.transpose()) * bottom * tail)));
  return report;
}

ResidualReport verify_cross_level_relations(const CoefficientTable& coeffs, int n, int m) {
  ResidualReport report;
  if (n < 1 || m < 1) return report;
  const LevelCoefficients& c = coeffs.at(n, m);
  const LevelCoefficients& cm = coeffs.at(n, m - 1);
  const LevelCoefficients& cn = coeffs.at(n - 1, m);
  const ComplexMatrix at_inv = inv(cn.At);
  const ComplexMatrix am_inv = inv(cm.A);
  if (m > 1) {
    report.add("K via G1", residual(ComplexMatrix(cm.G1 * c.K - cm.K * at_inv.adjoint() +
                                                  cm.K1 * cn.Et.adjoint() * at_inv.adjoint())));
    report.add("K1 via G", residual(ComplexMatrix(cm.G * c.K1 - cm.K1 * at_inv.transpose() +
                                                  cm.K * cn.Et * at_inv.transpose())));
  }
  if (n > 1) {
    report.add("K via G1~", residual(ComplexMatrix(c.K * cn.G1t.adjoint() - am_inv * cn.K +
                                                   am_inv * cm.E * cn.K1.conjugate())));
    report.add("K1 via G~", residual(ComplexMatrix(c.K1 * cn.Gt.transpose() - am_inv * cn.K1 +
                                                   am_inv * cm.E * cn.K.conjugate())));
  }
  report.add("E via G", residual(ComplexMatrix(cn.G * c.E - cm.A * c.K * cn.I1.adjoint() - cm.E * cn.G1.conjugate())));
  report.add("E via G1", residual(ComplexMatrix(c.E * cn.G1.transpose() - cn.I * c.K1.transpose() * cm.A.transpose() -
                                                cn.G.adjoint() * cm.E)));
  report.add("E~ via G", residual(ComplexMatrix(cm.Gt * c.Et - cn.At * c.K.adjoint() * cm.I1t.adjoint() -
                                                cn.Et * cm.G1t.conjugate())));
  report.add("E~ via G1", residual(ComplexMatrix(c.Et * cm.G1t.transpose() - cm.It * c.K1 * cn.At.transpose() -
                                                 cm.Gt.adjoint() * cn.Et)));
  report.add("G1 G", residual(ComplexMatrix(c.G1 * c.G.adjoint() - cm.I * c.Et * cm.I1.transpose() -
                                            cm.G.adjoint() * cm.G1 -
                                            c.K1 * at_inv.conjugate() * cn.Et.adjoint() * cn.At * c.K.adjoint())));
  report.add("G1 G~", residual(ComplexMatrix(c.G1t * c.Gt.adjoint() - cn.It * c.E * cn.I1t.transpose() -
                                             cn.Gt.adjoint() * cn.G1t -
                                             c.K1.transpose() * am_inv.conjugate() * cm.E.adjoint() * cm.A * c.K)));
  report.add("I G", residual(ComplexMatrix(c.I * c.Gt.adjoint() + c.G.adjoint() * c.K)));
  report.add("I1 step", residual(ComplexMatrix(c.I1 + inv(c.A).conjugate() * c.E.adjoint() * c.A * c.I -
                                               c.A.transpose() * cn.I1 * c.Gt)));
  return report;
}

double christoffel_darboux_residual(const PolynomialFamily& family, int n, int m, Complex z, Complex w, Complex z1,
                                    Complex w1) {
  auto ker = [&](const VectorPolynomial& p) { return kernel(p, z, w, z1, w1); };
  auto rker = [&](const VectorPolynomial& p) { return kernel(p.reversed(), z, w, z1, w1); };
  const Complex zz = std::conj(z1) * z;
  const Complex ww = std::conj(w1) * w;
  const VectorPolynomial& phi = family.phi(n, m);
  const VectorPolynomial& tilde = family.phi_tilde(n, m);
  const VectorPolynomial pn = family.phi_or_empty(n - 1, m);
  const VectorPolynomial pm = family.phi_or_empty(n, m - 1);
  const VectorPolynomial tn = family.phi_tilde_or_empty(n - 1, m);

  const Complex a = rker(phi) - zz * ker(phi);
  const Complex b = (1.0 - zz) * ker(phi) + (n > 0 ? rker(pn) - zz * ker(pn) : Complex(0.0));
  const Complex c = (1.0 - zz) * ker(tilde) + (m > 0 ? rker(pm) - zz * ker(pm) : Complex(0.0));
  Complex s1 = 0.0;
  for (int k = 0; k <= n; ++k) s1 += ker(family.phi(k, m));
  Complex s2 = 0.0;
  for (int j = 0; j <= m; ++j) s2 += ker(family.phi_tilde(n, j));
  const Complex aw = rker(tilde) - ww * ker(tilde);
  const Complex split = ker(phi) - ker(pm) - ker(tilde) + ker(tn);

  double r = std::abs(a - b);
  r = std::max(r, std::abs(a - c));
  r = std::max(r, std::abs(a - (1.0 - zz) * s1));
  r = std::max(r, std::abs(s1 - s2));
  r = std::max(r, std::abs(aw - (1.0 - ww) * s1));
  r = std::max(r, std::abs(split));
  return r;
}

double matrix_bridge_residual(const VectorPolynomial& phi, const OpucSequence& seq, Complex z, Complex w) {
  const int n = phi.n();
  const int m = phi.m();
  if (seq.levels() < n) throw InvalidArgument("matrix sequence is shorter than the polynomial degree");
  ComplexVector wdesc(m + 1);
  ComplexVector wasc(m + 1);
  for (int k = 0; k <= m; ++k) {
    wdesc(k) = std::pow(w, m - k);
    wasc(k) = std::pow(w, k);
  }
  const ComplexMatrix j = exchange(m + 1);
  const ComplexVector direct = seq.left[static_cast<size_t>(n)](z) * wdesc;
  const ComplexVector rev = (wasc.transpose() * j * seq.right[static_cast<size_t>(n)].reversed()(z).transpose() * j)
                                .transpose();
  double r = residual(ComplexVector(phi(z, w) - direct));
  r = std::max(r, residual(ComplexVector(phi.reversed()(z, w) - rev)));
  return r;
}

ComplexMatrix minimizer_objective(const MomentTable& moments, const VectorPolynomial& psi) {
  const int n = psi.n();
  const int m = psi.m();
  if (psi.height() != m + 1) throw DimensionMismatch("minimizer candidate must have m+1 entries");
  const ComplexMatrix gram = inner_product(moments, psi, psi).transpose();
  ComplexMatrix x0(m + 1, m + 1);
  for (int r = 0; r <= m; ++r)
    for (int b = 0; b <= m; ++b) x0(r, b) = psi.coefficients()(b, lex_index(n, m, 0, r));
  return gram - (x0 + x0.adjoint());
}

double minimizer_gap(const MomentTable& moments, const VectorPolynomial& phi, const VectorPolynomial& delta) {
  const int n = phi.n();
  const int m = phi.m();
  if (delta.n() != n || delta.m() != m || delta.height() != m + 1) {
    throw DimensionMismatch("perturbation must match the family window");
  }
  for (int b = 0; b <= m; ++b) {
    for (int r = 0; r < delta.height(); ++r) {
      if (std::abs(delta.coefficients()(r, lex_index(n, m, 0, b))) != 0.0) {
        throw InvalidArgument("perturbation must not change the z^0 part");
      }
    }
  }
  const VectorPolynomial base = phi.reversed();
  const ComplexMatrix diff = minimizer_objective(moments, base + delta) - minimizer_objective(moments, base);
  return min_hermitian_eigenvalue(ComplexMatrix(0.5 * (diff + diff.adjoint())));
}

}  // namespace bicircle
