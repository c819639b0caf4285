// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bicircle/fejer_riesz.hpp"
#include "bicircle/matrix_opuc.hpp"
#include "bicircle/worked_examples.hpp"
#include "fixtures.hpp"

using namespace bicircle;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Block (a,b) = C_{b-a}, ascending powers of z.
ComplexMatrix ascending_toeplitz(const BlockMoments& c, int n, bool swap) {
  const int k = c.block_size();
  ComplexMatrix t((n + 1) * k, (n + 1) * k);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) t.block(a * k, b * k, k, k) = c.at(swap ? a - b : b - a);
  return t;
}

std::pair<double, double> cholesky_identification(const MomentTable& t, int n, int m) {
  const BlockMoments c = opuc_blocks(t, n, m);
  const OpucSequence s = levinson(c, n);
  const int k = m + 1;
  ComplexMatrix l = ComplexMatrix::Zero((n + 1) * k, (n + 1) * k);
  ComplexMatrix r = l;
  for (int i = 0; i <= n; ++i)
    for (int a = 0; a <= i; ++a) {
      l.block(i * k, a * k, k, k) = s.left[i].coeff(a);
      r.block(a * k, i * k, k, k) = s.right[i].coeff(a);
    }
  const ComplexMatrix eye = ComplexMatrix::Identity(l.rows(), l.cols());
  return {max_abs(l * ascending_toeplitz(c, n, false) * l.adjoint() - eye),
          max_abs(r.adjoint() * ascending_toeplitz(c, n, true) * r - eye)};
}

// Recurrence route against brute-force Gram-Schmidt on the same moments.
double dual_path(const SynthesisState& s) {
  const int n_max = s.params.n_max();
  const int m_max = s.params.m_max();
  const PolynomialFamily gs = gram_schmidt_levels(s.moments, n_max, m_max);
  const CoefficientTable gc = coefficients_by_inner_product(s.moments, gs);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= m_max; ++m) {
      const auto a = s.coefficients.at(n, m).entries();
      const auto b = gc.at(n, m).entries();
      for (size_t k = 0; k < a.size(); ++k) {
        if (a[k].second->rows() != b[k].second->rows() || a[k].second->cols() != b[k].second->cols()) return INFINITY;
        worst = std::max(worst, max_abs(*a[k].second - *b[k].second));
      }
      worst = std::max(worst, max_abs(s.family.phi(n, m).coefficients() - gs.phi(n, m).coefficients()));
      worst = std::max(worst, max_abs(s.family.phi_tilde(n, m).coefficients() - gs.phi_tilde(n, m).coefficients()));
    }
  return worst;
}

double orthonormality(const SynthesisState& s) {
  double worst = 0.0;
  for (int n = 0; n <= s.params.n_max(); ++n)
    for (int m = 0; m <= s.params.m_max(); ++m) {
      const VectorPolynomial& p = s.family.phi(n, m);
      const VectorPolynomial& q = s.family.phi_tilde(n, m);
      worst = std::max(worst, max_abs(inner_product(s.moments, p, p) - ComplexMatrix::Identity(m + 1, m + 1)));
      worst = std::max(worst, max_abs(inner_product(s.moments, q, q) - ComplexMatrix::Identity(n + 1, n + 1)));
    }
  return worst;
}

ParameterGrid unit_grid(int n, int m) {
  ParameterGrid g(n, m);
  g.set(0, 0, 1.0);
  return g;
}

BivariatePolynomial random_stable(std::mt19937_64& rng, int n, int m) {
  for (;;) {
    BivariatePolynomial q(n, m);
    q.set_coeff(0, 0, 3.0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= m; ++b)
        if (a + b > 0) q.set_coeff(a, b, fixtures::random_disk(rng, 0.8));
    if (certify_stable(q).stable) return q;
  }
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(fixtures::kSeed + 101);
  double worst_l = 0.0;
  double worst_r = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 3;
    const int m = (k / 3) % 3;
    const auto [l, r] = cholesky_identification(fixtures::to_table(fixtures::random_atoms(rng, n, m), n, m), n, m);
    worst_l = std::max(worst_l, l);
    worst_r = std::max(worst_r, r);
  }
  const double sec = seconds_since(t0);
  return {worst_l < 1e-9 && worst_r < 1e-9 && sec < 5.0,
          fmt("L %.2e", worst_l) + fmt(", R %.2e", worst_r) + fmt(", %.2f s", sec)};
}

Outcome criterion2() {
  std::mt19937_64 rng(fixtures::kSeed + 102);
  std::vector<MomentTable> tables{MomentTable::delta(2, 2), fixtures::fixture_moments(2, 2),
                                  fixtures::to_table(fixtures::random_atoms(rng, 2, 2), 2, 2)};
  double matrix_cd = 0.0;
  double bivariate_cd = 0.0;
  for (const MomentTable& t : tables) {
    const PolynomialFamily f = gram_schmidt_levels(t, 2, 2);
    for (double radius : {1.0, 0.7}) {
      const auto a = fixtures::points(rng, 20, radius, 2.0 - radius);
      const auto b = fixtures::points(rng, 20, 2.0 - radius, radius);
      for (int m = 0; m <= 2; ++m) {
        const OpucSequence s = levinson(opuc_blocks(t, 2, m), 2);
        for (int k = 0; k < 20; ++k) matrix_cd = std::max(matrix_cd, cd_residual(s, a[k].first, b[k].first));
      }
      for (int k = 0; k < 20; ++k)
        for (int n = 1; n <= 2; ++n)
          for (int m = 1; m <= 2; ++m)
            bivariate_cd = std::max(bivariate_cd, christoffel_darboux_residual(f, n, m, a[k].first, a[k].second,
                                                                               b[k].first, b[k].second));
    }
  }
  return {matrix_cd < 1e-9 && bivariate_cd < 1e-9, fmt("matrix %.2e", matrix_cd) + fmt(", bivariate %.2e", bivariate_cd)};
}

Outcome criterion3() {
  double delta = 0.0;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) delta = std::max(delta, dual_path(synthesize_or_throw(unit_grid(n, m))));
  const double fixture = dual_path(synthesize_or_throw(extract_parameters(fixtures::fixture_moments(3, 3), 3, 3)));
  std::mt19937_64 rng(fixtures::kSeed + 103);
  double random = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = k % 4;
    const int m = (k / 4) % 4;
    random = std::max(random, dual_path(synthesize_or_throw(fixtures::random_admissible(rng, n, m, 0.3))));
  }
  return {delta < 1e-9 && fixture < 1e-9 && random < 1e-9,
          fmt("delta %.2e", delta) + fmt(", fixture %.2e", fixture) + fmt(", random %.2e", random)};
}

Outcome criterion4() {
  std::mt19937_64 rng(fixtures::kSeed + 104);
  int disagreements = 0;
  int successes = 0;
  double ortho = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + k % 3;
    const int m = 1 + (k / 3) % 3;
    const double radius = 0.2 + 0.1 * (k % 5);
    const ParameterGrid g = fixtures::random_params(rng, n, m, radius);
    const SynthesisOutcome out = synthesize(g);
    bool pd = false;
    try {
      pd = oracle::is_pd(oracle::synth_moments(fixtures::to_oracle(g), n, m), n, m);
    } catch (const std::exception&) {
      pd = false;
    }
    if (pd != out.admissible()) ++disagreements;
    if (out.admissible()) {
      ++successes;
      ortho = std::max(ortho, orthonormality(*out.state));
    }
  }
  return {disagreements == 0 && ortho < 1e-9,
          std::to_string(disagreements) + " disagreements, " + std::to_string(successes) + "/200 admissible" +
              fmt(", orthonormality %.2e", ortho)};
}

Outcome criterion5() {
  std::mt19937_64 rng(fixtures::kSeed + 105);
  double params = 0.0;
  double moments = 0.0;
  for (int k = 0; k < 32; ++k) {
    const int n = k % 4;
    const int m = (k / 4) % 4;
    const ParameterGrid g = fixtures::random_admissible(rng, n, m, 0.3);
    params = std::max(params, extract_parameters(synthesize_or_throw(g).moments, n, m).max_difference(g));
    const MomentTable c = fixtures::to_table(fixtures::random_atoms(rng, n, m), n, m);
    moments = std::max(moments, synthesize_or_throw(extract_parameters(c, n, m)).moments.max_difference(c, n, m));
  }
  return {params < 1e-8 && moments < 1e-8, fmt("params %.2e", params) + fmt(", moments %.2e", moments)};
}

Outcome criterion6() {
  Outcome o;
  for (ExampleName e : {ExampleName::deg11, ExampleName::contractive_toeplitz, ExampleName::blocked_extension}) {
    const SweepResult r = run_sweep(e, 1000);
    const int bad = r.disagreements();
    if (bad != 0 || r.points.size() != 1000) o.pass = false;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += to_string(e) + " " + std::to_string(bad) + "/" + std::to_string(r.points.size());
  }
  return o;
}

Outcome criterion7() {
  TrigPolynomial fixture = TrigPolynomial::modulus_squared(fixtures::fixture_factor());
  TrigPolynomial witness(1, 1);
  witness.set(0, 0, 5.0);
  witness.set(1, 0, 1.0);
  witness.set(0, 1, 1.0);
  const FactorizationResult a = fejer_riesz_factor(fixture);
  const FactorizationResult b = fejer_riesz_factor(witness);
  bool ok = a.verdict == FactorVerdict::factored && a.reconstruction_error < 1e-8 && a.k_norm < 1e-9;
  ok = ok && b.verdict == FactorVerdict::not_factorable && b.k_norm > 1e-3;

  std::vector<TrigPolynomial> inputs{fixture, witness};
  std::mt19937_64 rng(fixtures::kSeed + 107);
  for (int k = 0; k < 10; ++k) inputs.push_back(TrigPolynomial::modulus_squared(random_stable(rng, 1 + k % 2, 1)));
  TrigPolynomial one(2, 0);
  one.set(0, 0, 3.0);
  one.set(1, 0, Complex(0.4, 0.2));
  one.set(2, 0, 0.5);
  inputs.push_back(one);
  int dichotomy = 0;
  int factored = 0;
  for (const TrigPolynomial& f : inputs) {
    const FactorizationResult r = fejer_riesz_factor(f);
    if (r.verdict == FactorVerdict::not_positive) {
      ++dichotomy;
      continue;
    }
    if ((r.k_norm <= kZeroTol) != (r.verdict == FactorVerdict::factored)) ++dichotomy;
    if (r.verdict == FactorVerdict::factored) {
      ++factored;
      if (!(r.reconstruction_error < 1e-8)) ++dichotomy;
    }
  }
  ok = ok && dichotomy == 0;
  return {ok, fmt("fixture rec %.2e", a.reconstruction_error) + fmt(" K %.2e", a.k_norm) +
                  fmt(", witness K %.2e", b.k_norm) + ", dichotomy violations " + std::to_string(dichotomy) + " of " +
                  std::to_string(inputs.size()) + " (" + std::to_string(factored) + " factored)"};
}

Outcome criterion8() {
  std::vector<std::tuple<MomentTable, int, int>> cases;
  cases.emplace_back(fixtures::fixture_moments(1, 1), 1, 1);
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) cases.emplace_back(MomentTable::delta(n, m), n, m);
  std::mt19937_64 rng(fixtures::kSeed + 108);
  for (int k = 0; k < 6; ++k) {
    const int n = 1 + k % 2;
    const int m = 1 + (k / 2) % 2;
    cases.emplace_back(spectral_moments(random_stable(rng, n, m).reversed(n, m), n, m), n, m);
  }
  for (int n = 1; n <= 3; ++n) cases.emplace_back(synthesize_or_throw(fixtures::random_admissible(rng, n, 0)).moments, n, 0);
  double worst = 0.0;
  int not_applicable = 0;
  for (const auto& [t, n, m] : cases) {
    const StableOutcome out = stable_from_functional(t, n, m);
    if (!out.applicable || !out.polynomial) {
      ++not_applicable;
      continue;
    }
    worst = std::max(worst, out.match_error);
  }
  return {not_applicable == 0 && worst < 1e-7, std::to_string(cases.size()) + " fixtures" + fmt(", max %.2e", worst) +
                                                   ", not applicable " + std::to_string(not_applicable)};
}

Outcome criterion9() {
  std::mt19937_64 rng(fixtures::kSeed + 109);
  double det = 0.0;
  double ent = 0.0;
  for (int m = 0; m <= 2; ++m) {
    for (const MomentTable& t : {fixtures::fixture_moments(4, m), MomentTable::delta(4, m),
                                 fixtures::to_table(fixtures::random_atoms(rng, 4, m, 40), 4, m)}) {
      const BlockMoments c = opuc_blocks(t, 4, m);
      const OpucSequence s = levinson(c, 4);
      for (int k = 1; k <= 4; ++k) {
        det = std::max(det, determinant_identity_error(s, c, k));
        ent = std::max(ent, entropy_identity_error(s, k));
      }
    }
  }
  return {det < 1e-8 && ent < 1e-6, fmt("determinant %.2e", det) + fmt(", entropy %.2e", ent)};
}

Outcome criterion10() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(fixtures::kSeed + 110);
  std::vector<std::pair<std::string, MomentTable>> tables{
      {"delta", MomentTable::delta(3, 3)},
      {"fixture", fixtures::fixture_moments(3, 3)},
      {"atoms", fixtures::to_table(fixtures::random_atoms(rng, 3, 3), 3, 3)},
      {"synth", synthesize_or_throw(fixtures::random_admissible(rng, 3, 3, 0.3)).moments}};
  const auto pts = sample_points(8);
  double worst = 0.0;
  std::string where;
  int centro_failures = 0;
  const auto note = [&](double v, const std::string& w) {
    if (v > worst) {
      worst = v;
      where = w;
    }
  };
  for (const auto& [name, t] : tables) {
    const PolynomialFamily f = gram_schmidt_levels(t, 3, 3);
    const CoefficientTable c = coefficients_by_inner_product(t, f);
    const SynthesisState s = synthesize_or_throw(extract_parameters(t, 3, 3));
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        const std::string at = name + " (" + std::to_string(n) + "," + std::to_string(m) + ")";
        note(verify_structure(c.at(n, m)).max_residual(), at + " structure");
        note(verify_structure(s.coefficients.at(n, m)).max_residual(), at + " structure/recurrence");
        if (n + m > 0) {
          note(verify_recurrences(f, c, n, m, pts).max_residual(), at + " recurrences");
          note(verify_pointwise_formulas(f, c, t, n, m).max_residual(), at + " pointwise");
          note(verify_cross_level_relations(c, n, m).max_residual(), at + " cross-level");
        }
        const ComplexMatrix h = assemble(t, n, m).data;
        const ComplexMatrix ht = assemble(t, n, m, Ordering::revlex).data;
        if (!centro_transpose_symmetric(h) || !centro_transpose_symmetric(ht) ||
            !centro_transpose_symmetric(checked_inverse(h), 1e-8) ||
            !centro_transpose_symmetric(checked_inverse(ht), 1e-8))
          ++centro_failures;
      }
  }
  const double sec = seconds_since(t0);
  return {worst < 1e-9 && centro_failures == 0 && sec < 30.0,
          fmt("max residual %.2e", worst) + (where.empty() ? "" : " at " + where) + ", centro-transpose failures " +
              std::to_string(centro_failures) + fmt(", %.2f s", sec)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cholesky-identification", criterion1},
      {"christoffel-darboux", criterion2},
      {"dual-path-coefficients", criterion3},
      {"admissible-iff-positive-definite", criterion4},
      {"round-trip", criterion5},
      {"closed-form-sweeps", criterion6},
      {"fejer-riesz", criterion7},
      {"spectral-matching", criterion8},
      {"determinant-entropy", criterion9},
      {"structural-invariants", criterion10},
  };
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
