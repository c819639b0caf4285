#include "bicircle/parameter_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bicircle {

namespace {

ComplexMatrix inv(const ComplexMatrix& a) { return checked_inverse(a); }
ComplexMatrix identity(int k) { return ComplexMatrix::Identity(k, k); }
ComplexMatrix scalar(Complex v) { return ComplexMatrix::Constant(1, 1, v); }

// e1 (size rows) times the first row of x.
ComplexMatrix first_row_only(const ComplexMatrix& x, int rows) {
  ComplexMatrix out = ComplexMatrix::Zero(rows, x.cols());
  if (x.rows() > 0) out.row(0) = x.row(0);
  return out;
}

ComplexMatrix stack_rows(const ComplexMatrix& top_row, const ComplexMatrix& rest) {
  ComplexMatrix out(1 + rest.rows(), rest.cols());
  out << top_row, rest;
  return out;
}

ComplexMatrix prepend_zero_column(const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols() + 1);
  out.rightCols(x.cols()) = x;
  return out;
}

double max_abs_or_zero(const ComplexMatrix& x) { return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff(); }

}  // namespace

// ---------------------------------------------------------------------------

ParameterGrid::ParameterGrid(int n_max, int m_max)
    : n_max_(n_max), m_max_(m_max), u_(ComplexMatrix::Zero(2 * n_max + 1, 2 * m_max + 1)) {
  if (n_max < 0 || m_max < 0) throw InvalidArgument("negative parameter window");
}

Complex ParameterGrid::get(int i, int j) const {
  if (std::abs(i) > n_max_ || std::abs(j) > m_max_) throw InvalidArgument("parameter index outside the window");
  return u_(i + n_max_, j + m_max_);
}

void ParameterGrid::set(int i, int j, Complex value) {
  if (std::abs(i) > n_max_ || std::abs(j) > m_max_) throw InvalidArgument("parameter index outside the window");
  if (i == 0 && j == 0) {
    if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value.real()))) {
      throw InvalidArgument("u(0,0) must be real");
    }
    value = value.real();
  }
  u_(i + n_max_, j + m_max_) = value;
  u_(-i + n_max_, -j + m_max_) = std::conj(value);
}

double ParameterGrid::max_difference(const ParameterGrid& o) const {
  if (o.n_max_ != n_max_ || o.m_max_ != m_max_) throw DimensionMismatch("parameter windows differ");
  return (u_ - o.u_).cwiseAbs().maxCoeff();
}

std::vector<std::pair<int, int>> ParameterGrid::free_indices() const {
  std::vector<std::pair<int, int>> out{{0, 0}};
  for (int i = 1; i <= n_max_; ++i) out.emplace_back(i, 0);
  for (int j = 1; j <= m_max_; ++j) out.emplace_back(0, j);
  for (int n = 1; n <= n_max_; ++n) {
    for (int m = 1; m <= m_max_; ++m) {
      out.emplace_back(n, m);
      out.emplace_back(-n, m);
    }
  }
  return out;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::u00_positive: return "u(0,0) > 0";
    case Condition::axis_z_contraction: return "|E(i,0)| < 1";
    case Condition::axis_w_contraction: return "|E~(0,j)| < 1";
    case Condition::k_contraction: return "||K|| < 1";
    case Condition::k1_contraction: return "||K1|| < 1";
    case Condition::h3_bound: return "e1^T H3 e1 < 1";
    case Condition::numerical_breakdown: return "numerical breakdown";
  }
  return "unknown";
}

const LevelRecord* AdmissibilityReport::find(int n, int m) const {
  for (const LevelRecord& r : levels)
    if (r.n == n && r.m == m) return &r;
  return nullptr;
}

std::string AdmissibilityReport::describe() const {
  std::ostringstream os;
  if (admissible) {
    os << "admissible";
  } else if (first_failure) {
    os << "inadmissible at level (" << first_failure->first << "," << first_failure->second
       << "): " << to_string(failed) << " violated (value " << failed_value << ", margin " << margin << ")";
  } else {
    os << "not evaluated";
  }
  return os.str();
}

Inadmissible::Inadmissible(AdmissibilityReport report) : Error(report.describe()), report_(std::move(report)) {}

// ---------------------------------------------------------------------------

Synthesizer::Synthesizer(ParameterGrid params, SynthesisOptions options) : options_(options) {
  const int n = params.n_max();
  const int m = params.m_max();
  state_.params = std::move(params);
  state_.family = PolynomialFamily(n, m);
  state_.coefficients = CoefficientTable(n, m);
  state_.moments = MomentTable(n, m);
  state_.report.margin = options.margin;
}

Synthesizer::Synthesizer(SynthesisState state, int n_max, int m_max, SynthesisOptions options) : options_(options) {
  const ParameterGrid& old = state.params;
  n_max = std::max(n_max, old.n_max());
  m_max = std::max(m_max, old.m_max());
  state_.params = ParameterGrid(n_max, m_max);
  for (int i = 0; i <= old.n_max(); ++i)
    for (int j = -old.m_max(); j <= old.m_max(); ++j) state_.params.set(i, j, old.get(i, j));
  state_.family = PolynomialFamily(n_max, m_max);
  state_.coefficients = CoefficientTable(n_max, m_max);
  for (int n = 0; n <= state.family.n_max(); ++n) {
    for (int m = 0; m <= state.family.m_max(); ++m) {
      if (!state.family.has(n, m)) continue;
      state_.family.set(n, m, state.family.phi(n, m), state.family.phi_tilde(n, m));
      state_.coefficients.set(state.coefficients.at(n, m));
    }
  }
  state_.moments = state.moments.resized(n_max, m_max);
  state_.report = state.report;
  state_.report.margin = options.margin;
}

void Synthesizer::set_parameter(int i, int j, Complex value) { state_.params.set(i, j, value); }

bool Synthesizer::fail(LevelRecord record, Condition c, double value) {
  record.computed = false;
  state_.report.levels.push_back(record);
  state_.report.admissible = false;
  state_.report.first_failure = std::make_pair(record.n, record.m);
  state_.report.failed = c;
  state_.report.failed_value = value;
  return false;
}

void Synthesizer::solve_moment(int i, int j, Complex target, const std::function<Complex()>& bracket) {
  MomentTable& mt = state_.moments;
  mt.set(i, j, 0.0);
  const Complex f0 = bracket();
  mt.set(i, j, 1.0);
  const Complex f1 = bracket();
  const Complex slope = f1 - f0;
  if (std::abs(slope) < options_.divide_guard) throw SingularMatrix("new moment has a vanishing coefficient");
  mt.set(i, j, (target - f0) / slope);
}

bool Synthesizer::step(int n, int m) {
  if (n < 0 || m < 0 || n > state_.params.n_max() || m > state_.params.m_max()) {
    throw InvalidArgument("level outside the parameter window");
  }
  if (done(n, m)) return true;
  if (n == 0 && m == 0) return origin();
  if ((n > 0 && !done(n - 1, m)) || (m > 0 && !done(n, m - 1))) {
    throw InvalidArgument("level (" + std::to_string(n) + "," + std::to_string(m) +
                          ") needs both predecessor levels");
  }
  if (m == 0) return axis_z(n);
  if (n == 0) return axis_w(m);
  return interior(n, m);
}

bool Synthesizer::run() {
  const int n_max = state_.params.n_max();
  const int m_max = state_.params.m_max();
  if (!step(0, 0)) return false;
  for (int i = 1; i <= n_max; ++i)
    if (!step(i, 0)) return false;
  for (int j = 1; j <= m_max; ++j)
    if (!step(0, j)) return false;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m)
      if (!step(n, m)) return false;
  state_.report.admissible = true;
  return true;
}

bool Synthesizer::origin() {
  LevelRecord rec;
  const double u00 = state_.params.get(0, 0).real();
  rec.e_norm = u00;
  if (!(u00 > options_.margin)) return fail(rec, Condition::u00_positive, u00);
  state_.moments.set(0, 0, u00);
  const ComplexMatrix v = scalar(1.0 / std::sqrt(u00));
  state_.family.set(0, 0, VectorPolynomial(0, 0, v, Ordering::lex), VectorPolynomial(0, 0, v, Ordering::revlex));
  LevelCoefficients c;
  c.E = c.A = c.Et = c.At = ComplexMatrix(0, 0);
  c.K = c.K1 = c.Kt = c.K1t = ComplexMatrix(0, 0);
  c.G = c.G1 = c.Gt = c.G1t = ComplexMatrix(0, 1);
  c.I = c.I1 = c.It = c.I1t = identity(1);
  state_.coefficients.set(c);
  rec.computed = true;
  state_.report.levels.push_back(rec);
  return true;
}

bool Synthesizer::axis_z(int i) {
  LevelRecord rec;
  rec.n = i;
  const Complex u = state_.params.get(i, 0);
  rec.e_norm = std::abs(u);
  if (!(rec.e_norm < 1.0 - options_.margin)) return fail(rec, Condition::axis_z_contraction, rec.e_norm);
  const VectorPolynomial& p1 = state_.family.phi(i - 1, 0);
  const LevelCoefficients& prev = state_.coefficients.at(i - 1, 0);
  solve_moment(-i, 0, u, [&] { return inner_product(state_.moments, p1.times_z(), p1.reversed())(0, 0); });
  const double a = std::sqrt(1.0 - std::norm(u));
  const VectorPolynomial phi = scalar(1.0 / a) * (p1.times_z() - scalar(u) * p1.reversed());
  const VectorPolynomial tilde = stack(phi.with_ordering(Ordering::revlex), state_.family.phi_tilde(i - 1, 0));

  LevelCoefficients c;
  c.n = i;
  c.m = 0;
  c.E = scalar(u);
  c.A = scalar(a);
  c.Et = c.At = ComplexMatrix(0, 0);
  c.K = c.K1 = ComplexMatrix(0, i);
  c.G = c.G1 = ComplexMatrix(0, 1);
  c.I = unit_vector(i + 1).transpose();
  c.I1 = ComplexMatrix(1, i + 1);
  c.I1(0, 0) = -std::conj(u);
  c.I1.rightCols(i) = a * prev.I1;
  c.Kt = c.K.adjoint();
  c.K1t = c.K1.transpose();
  c.Gt = shift_selector(i);
  c.G1t = leading_w_block(state_.family.phi_tilde(i - 1, 0)) * lead_selector(i) * inv(leading_w_block(tilde));
  c.It = c.I.adjoint();
  c.I1t = c.I1.transpose();
  state_.family.set(i, 0, phi, tilde);
  state_.coefficients.set(c);
  rec.computed = true;
  state_.report.levels.push_back(rec);
  return true;
}

bool Synthesizer::axis_w(int j) {
  LevelRecord rec;
  rec.m = j;
  const Complex u = state_.params.get(0, j);
  rec.e_norm = std::abs(u);
  if (!(rec.e_norm < 1.0 - options_.margin)) return fail(rec, Condition::axis_w_contraction, rec.e_norm);
  const VectorPolynomial& t1 = state_.family.phi_tilde(0, j - 1);
  const LevelCoefficients& prev = state_.coefficients.at(0, j - 1);
  solve_moment(0, -j, u, [&] { return inner_product(state_.moments, t1.times_w(), t1.reversed())(0, 0); });
  const double a = std::sqrt(1.0 - std::norm(u));
  const VectorPolynomial tilde = scalar(1.0 / a) * (t1.times_w() - scalar(u) * t1.reversed());
  const VectorPolynomial phi = stack(tilde.with_ordering(Ordering::lex), state_.family.phi(0, j - 1));

  LevelCoefficients c;
  c.n = 0;
  c.m = j;
  c.E = c.A = ComplexMatrix(0, 0);
  c.Et = scalar(u);
  c.At = scalar(a);
  c.K = c.K1 = ComplexMatrix(j, 0);
  c.G = shift_selector(j);
  c.G1 = leading_z_block(state_.family.phi(0, j - 1)) * lead_selector(j) * inv(leading_z_block(phi));
  c.I = unit_vector(j + 1);
  c.I1 = ComplexMatrix(j + 1, 1);
  c.I1(0, 0) = -std::conj(u);
  c.I1.bottomRows(j) = a * prev.I1;
  c.Kt = c.K.adjoint();
  c.K1t = c.K1.transpose();
  c.Gt = c.G1t = ComplexMatrix(0, 1);
  c.It = c.I.adjoint();
  c.I1t = c.I1.transpose();
  state_.family.set(0, j, phi, tilde);
  state_.coefficients.set(c);
  rec.computed = true;
  state_.report.levels.push_back(rec);
  return true;
}

bool Synthesizer::interior(int n, int m) {
  const PolynomialFamily& fam = state_.family;
  const LevelCoefficients& cm = state_.coefficients.at(n, m - 1);
  const LevelCoefficients& cn = state_.coefficients.at(n - 1, m);
  const VectorPolynomial& pm = fam.phi(n, m - 1);
  const VectorPolynomial& tn = fam.phi_tilde(n - 1, m);
  const ParameterGrid& u = state_.params;
  const double margin = options_.margin;
  LevelRecord rec;
  rec.n = n;
  rec.m = m;

  // K: all but one entry of lead^{-1} K lead~^{-dagger} is fixed by the previous levels.
  ComplexMatrix k;
  if (n == 1 && m == 1) {
    k = scalar(u.get(-1, 1));
  } else {
    ComplexMatrix x = ComplexMatrix::Zero(m, n);
    if (m > 1) {
      x.topRows(m - 1) = inv(leading_z_block(fam.phi(n, m - 2))) * (cm.K - cm.K1 * cn.Et.adjoint()) *
                         inv(leading_w_block(fam.phi_tilde(n - 1, m - 1)).adjoint());
    }
    if (n > 1) {
      const ComplexMatrix ht = inv(leading_z_block(fam.phi(n - 1, m - 1))) *
                               (cn.K - cm.E * cn.K1.conjugate()) *
                               inv(leading_w_block(fam.phi_tilde(n - 2, m)).adjoint());
      x.block(m - 1, 0, 1, n - 1) = ht.row(m - 1);
    }
    x(m - 1, n - 1) = u.get(-n, m);
    k = leading_z_block(pm) * x * leading_w_block(tn).adjoint();
  }
  rec.k_norm = spectral_norm(k);
  if (!(rec.k_norm < 1.0 - margin)) return fail(rec, Condition::k_contraction, rec.k_norm);
  const VectorPolynomial pm_last = pm.rows_range(m - 1, 1);
  const VectorPolynomial tn_last = tn.rows_range(n - 1, 1);
  solve_moment(-n, m, k(m - 1, n - 1), [&] { return inner_product(state_.moments, pm_last, tn_last)(0, 0); });

  ComplexMatrix gu;
  ComplexMatrix gtu;
  try {
    gu = upper_cholesky(identity(m) - k * k.adjoint());
    gtu = upper_cholesky(identity(n) - k.adjoint() * k);
  } catch (const NotPositiveDefinite&) {
    return fail(rec, Condition::numerical_breakdown, rec.k_norm);
  }
  const ComplexMatrix g = prepend_zero_column(gu);
  const ComplexMatrix gt = prepend_zero_column(gtu);

  // K1: rows below the first and columns after the first from the previous levels.
  ComplexMatrix k1 = ComplexMatrix::Zero(m, n);
  const ComplexMatrix at_inv = inv(cn.At);
  const ComplexMatrix am_inv = inv(cm.A);
  if (m > 1) {
    k1.bottomRows(m - 1) = inv(cm.G * shift_selector(m - 1).transpose()) *
                           (cm.K1 * at_inv.transpose() - cm.K * cn.Et.transpose() * at_inv.transpose());
  }
  if (n > 1) {
    k1.rightCols(n - 1) = (am_inv * cn.K1 - am_inv * cm.E * cn.K.conjugate()) *
                          inv(shift_selector(n - 1) * cn.Gt.transpose());
  }
  k1(0, 0) = std::conj(u.get(n, m));
  rec.k1_norm = spectral_norm(k1);
  if (!(rec.k1_norm < 1.0 - margin)) return fail(rec, Condition::k1_contraction, rec.k1_norm);
  const VectorPolynomial wpm_first = pm.rows_range(0, 1).times_w();
  const VectorPolynomial rtn_first = tn.rows_range(0, 1).reversed();
  solve_moment(-n, -m, k1(0, 0), [&] { return inner_product(state_.moments, wpm_first, rtn_first)(0, 0); });

  // E and E~ from the stacked triangular systems.
  const ComplexMatrix gh = stack_rows(cn.G1.row(0), cn.G);
  const ComplexMatrix e1_rows = cm.A * k * cn.I1.adjoint() + cm.E * cn.G1.conjugate();
  const ComplexMatrix e2_rows = cm.A * k1 * cn.I.transpose() + cm.E * cn.G.conjugate();
  const ComplexMatrix e = inv(gh) * (shift_selector(m).transpose() * e1_rows + first_row_only(e2_rows, m + 1));
  const ComplexMatrix ght = stack_rows(cm.G1t.row(0), cm.Gt);
  const ComplexMatrix e1t_rows = cn.At * k.adjoint() * cm.I1.conjugate() + cn.Et * cm.G1t.conjugate();
  const ComplexMatrix e2t_rows = cn.At * k1.transpose() * cm.I.conjugate() + cn.Et * cm.Gt.conjugate();
  const ComplexMatrix et =
      inv(ght) * (shift_selector(n).transpose() * e1t_rows + first_row_only(e2t_rows, n + 1));
  rec.e_norm = spectral_norm(e);
  rec.e_redundancy = std::max({max_abs_or_zero(cn.G * e - e1_rows),
                               max_abs_or_zero(e * cn.G1.transpose() - e2_rows.transpose()),
                               max_abs_or_zero(e - e.transpose()), max_abs_or_zero(et - et.transpose())});

  // G1: everything but the corner from the product relation; the corner from H3.
  const ComplexMatrix ug_inv = inv(shift_selector(m) * g.adjoint());
  const ComplexMatrix g1u = (cm.I * et * cm.I1.transpose() + cm.G.adjoint() * cm.G1 +
                             k1 * at_inv.conjugate() * cn.Et.adjoint() * cn.At * k.adjoint()) *
                            ug_inv;
  const ComplexMatrix ght_t_inv = inv(ght.transpose());
  const ComplexMatrix h2 = cm.I * (cm.I1.adjoint() * k.conjugate() * cn.At.transpose() + cm.G1t.adjoint() * cn.Et) *
                           shift_selector(n) * ght_t_inv * cm.I1.transpose() * ug_inv;
  const ComplexMatrix h1 = cn.At.transpose() * unit_vector(n) * unit_vector(n + 1).transpose() * ght_t_inv *
                               cm.I1.transpose() * ug_inv +
                           at_inv.conjugate() * cn.Et.adjoint() * cn.At * k.adjoint() * ug_inv;
  const ComplexMatrix h21 = h2 + k1 * h1;
  const ComplexMatrix h3 = h21 * h21.adjoint() + k1 * k1.adjoint();
  rec.h3 = h3(0, 0).real();
  rec.g1_first_row = max_abs_or_zero(h21.row(0) - g1u.row(0));
  if (!(rec.h3 < 1.0 - margin)) return fail(rec, Condition::h3_bound, rec.h3);
  ComplexMatrix g1 = prepend_zero_column(g1u);
  g1(0, 0) = std::sqrt(1.0 - rec.h3);

  const ComplexMatrix ugt_inv = inv(shift_selector(n) * gt.adjoint());
  const ComplexMatrix g1tu = (cn.It * e * cn.I1t.transpose() + cn.Gt.adjoint() * cn.G1t +
                              k1.transpose() * am_inv.conjugate() * cm.E.adjoint() * cm.A * k) *
                             ugt_inv;
  const double corner_t = 1.0 - g1tu.row(0).squaredNorm() - k1.col(0).squaredNorm();
  if (!(corner_t > 0.0)) return fail(rec, Condition::numerical_breakdown, corner_t);
  ComplexMatrix g1t = prepend_zero_column(g1tu);
  g1t(0, 0) = std::sqrt(corner_t);

  ComplexMatrix a;
  ComplexMatrix at;
  try {
    a = upper_cholesky(identity(m + 1) - e * e.adjoint());
    at = upper_cholesky(identity(n + 1) - et * et.adjoint());
  } catch (const NotPositiveDefinite&) {
    return fail(rec, Condition::numerical_breakdown, rec.e_norm);
  }

  ComplexMatrix iv(m + 1, n + 1);
  iv.col(0) = unit_vector(m + 1);
  iv.rightCols(n) = -g.adjoint() * k * inv(gtu.adjoint());
  const ComplexMatrix i1 = -inv(a).conjugate() * e.adjoint() * a * iv + a.transpose() * cn.I1 * gt;

  // Polynomials: all rows but the first from G, the first row from G1.
  const VectorPolynomial low = inv(gu) * (pm - k * tn);
  const VectorPolynomial rhs1 = pm.times_w() - k1 * tn.reversed();
  const VectorPolynomial top =
      scalar(1.0 / g1(0, 0)) * (rhs1.rows_range(0, 1) - ComplexMatrix(g1.block(0, 1, 1, m)) * low);
  const VectorPolynomial phi = stack(top, low);
  const VectorPolynomial low_t = inv(gtu) * (tn - ComplexMatrix(k.adjoint()) * pm);
  const VectorPolynomial rhs1_t = tn.times_z() - ComplexMatrix(k1.transpose()) * pm.reversed();
  const VectorPolynomial top_t =
      scalar(1.0 / g1t(0, 0)) * (rhs1_t.rows_range(0, 1) - ComplexMatrix(g1t.block(0, 1, 1, n)) * low_t);
  const VectorPolynomial tilde = stack(top_t, low_t);

  LevelCoefficients c;
  c.n = n;
  c.m = m;
  c.E = e;
  c.A = a;
  c.K = k;
  c.G = g;
  c.K1 = k1;
  c.G1 = g1;
  c.I = iv;
  c.I1 = i1;
  c.Et = et;
  c.At = at;
  c.Kt = k.adjoint();
  c.Gt = gt;
  c.K1t = k1.transpose();
  c.G1t = g1t;
  c.It = iv.adjoint();
  c.I1t = i1.transpose();
  state_.family.set(n, m, phi, tilde);
  state_.coefficients.set(c);
  rec.computed = true;
  state_.report.levels.push_back(rec);
  return true;
}

// ---------------------------------------------------------------------------

SynthesisOutcome synthesize(const ParameterGrid& params, const SynthesisOptions& options) {
  Synthesizer s(params, options);
  const bool ok = s.run();
  SynthesisOutcome out;
  out.report = s.state().report;
  out.attempted_moments = s.state().moments;
  if (ok) out.state = s.take();
  return out;
}

SynthesisState synthesize_or_throw(const ParameterGrid& params, const SynthesisOptions& options) {
  SynthesisOutcome out = synthesize(params, options);
  if (!out.admissible()) throw Inadmissible(out.report);
  return std::move(*out.state);
}

ParameterGrid extract_parameters(const MomentTable& moments, int n_max, int m_max) {
  const PolynomialFamily family = gram_schmidt_levels(moments, n_max, m_max);
  ParameterGrid u(n_max, m_max);
  u.set(0, 0, moments.at(0, 0).real());
  for (int i = 1; i <= n_max; ++i) {
    const VectorPolynomial& p = family.phi(i - 1, 0);
    u.set(i, 0, inner_product(moments, p.times_z(), p.reversed())(0, 0));
  }
  for (int j = 1; j <= m_max; ++j) {
    const VectorPolynomial& t = family.phi_tilde(0, j - 1);
    u.set(0, j, inner_product(moments, t.times_w(), t.reversed())(0, 0));
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= m_max; ++m) {
      const VectorPolynomial& pm = family.phi(n, m - 1);
      const VectorPolynomial& tn = family.phi_tilde(n - 1, m);
      const ComplexMatrix k = inner_product(moments, pm, tn);
      if (n == 1 && m == 1) {
        u.set(-1, 1, k(0, 0));
      } else {
        const ComplexMatrix x = inv(leading_z_block(pm)) * k * inv(leading_w_block(tn).adjoint());
        u.set(-n, m, x(m - 1, n - 1));
      }
      const Complex k1 =
          inner_product(moments, pm.rows_range(0, 1).times_w(), tn.rows_range(0, 1).reversed())(0, 0);
      u.set(n, m, std::conj(k1));
    }
  }
  return u;
}

SynthesisState synthesize_prior(const ParameterGrid& params, int n, int m, const SynthesisOptions& options) {
  if (n > params.n_max() || m > params.m_max()) throw InvalidArgument("target level outside the parameter window");
  Synthesizer s(params, options);
  bool ok = s.step(0, 0);
  for (int i = 1; ok && i <= n; ++i) ok = s.step(i, 0);
  for (int j = 1; ok && j <= m; ++j) ok = s.step(0, j);
  for (int a = 1; ok && a <= n; ++a)
    for (int b = 1; ok && b <= m; ++b)
      if (a != n || b != m) ok = s.step(a, b);
  if (!ok) throw Inadmissible(s.state().report);
  return s.take();
}

ExtensionOutcome one_step_extension(const SynthesisState& prior, int n, int m, Complex u_nm, Complex u_minus_nm,
                                    const SynthesisOptions& options) {
  if (n < 1 || m < 1) throw InvalidArgument("one-step extension needs an interior level");
  if (!prior.family.has(n - 1, m) || !prior.family.has(n, m - 1)) {
    throw InvalidArgument("prior state lacks a predecessor level");
  }
  Synthesizer s(prior, n, m, options);
  s.set_parameter(n, m, u_nm);
  s.set_parameter(-n, m, u_minus_nm);
  ExtensionOutcome out;
  out.admissible = s.step(n, m);
  const SynthesisState& st = s.state();
  if (!st.report.levels.empty()) out.record = st.report.levels.back();
  out.failed = out.admissible ? Condition::none : st.report.failed;
  if (out.admissible) out.state = s.take();
  return out;
}

}  // namespace bicircle
