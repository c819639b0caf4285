#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bicircle/errors.hpp"
#include "bicircle/moment_functional.hpp"
#include "fixtures.hpp"

using namespace bicircle;

TEST(Assemble, DeltaMomentsGiveIdentity) {
  const DoublyToeplitzMatrix c = assemble(MomentTable::delta(1, 1), 1, 1);
  EXPECT_EQ(c.data, ComplexMatrix::Identity(4, 4));
  EXPECT_TRUE(is_doubly_toeplitz(c.data, 2));
}

TEST(Assemble, OneVariableToeplitz) {
  MomentTable t(1, 0);
  t.set(0, 0, 1.0);
  const Complex a(0.3, 0.4);
  t.set(1, 0, a);
  const ComplexMatrix c = assemble(t, 1, 0).data;
  ComplexMatrix expect(2, 2);
  expect << 1.0, std::conj(a), a, 1.0;
  EXPECT_LT(max_abs(c - expect), 1e-15);
}

TEST(Assemble, MatchesOracleGramInBothOrderings) {
  std::mt19937_64 rng(fixtures::kSeed);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m) {
      const oracle::Moments mo = fixtures::random_atoms(rng, n, m);
      const MomentTable t = fixtures::to_table(mo, n, m);
      EXPECT_LT(fixtures::max_abs(assemble(t, n, m, Ordering::lex).data - oracle::gram(mo, oracle::lex_monomials(n, m))),
                1e-14);
      EXPECT_LT(fixtures::max_abs(assemble(t, n, m, Ordering::revlex).data -
                                  oracle::gram(mo, oracle::revlex_monomials(n, m))),
                1e-14);
      // Orderings are related by the lex-to-revlex permutation.
      const ComplexMatrix p = lex_to_revlex(n, m);
      EXPECT_LT(max_abs(assemble(t, n, m, Ordering::revlex).data - p * assemble(t, n, m).data * p.transpose()), 1e-15);
      EXPECT_TRUE(centro_transpose_symmetric(assemble(t, n, m).data));
      EXPECT_TRUE(is_doubly_toeplitz(assemble(t, n, m).data, m + 1));
    }
}

TEST(InnerProduct, DeltaMoments) {
  const MomentTable d = MomentTable::delta(2, 2);
  EXPECT_EQ(inner_product(d, BivariatePolynomial::monomial(0, 0), BivariatePolynomial::monomial(0, 0)), Complex(1.0));
  EXPECT_EQ(inner_product(d, BivariatePolynomial::monomial(1, 1), BivariatePolynomial::monomial(1, 1)), Complex(1.0));
  EXPECT_EQ(inner_product(d, BivariatePolynomial::monomial(1, 0), BivariatePolynomial::monomial(0, 1)), Complex(0.0));
}

TEST(InnerProduct, ZAgainstWIsAFixtureMoment) {
  const MomentTable t = fixtures::fixture_moments(1, 1);
  const Complex v = inner_product(t, BivariatePolynomial::monomial(1, 0), BivariatePolynomial::monomial(0, 1));
  EXPECT_LT(std::abs(v - t.at(-1, 1)), 1e-15);
}

TEST(InnerProduct, MatchesOracleOnRandomPolynomials) {
  std::mt19937_64 rng(fixtures::kSeed + 3);
  const oracle::Moments mo = fixtures::random_atoms(rng, 3, 3);
  const MomentTable t = fixtures::to_table(mo, 3, 3);
  for (int k = 0; k < 20; ++k) {
    BivariatePolynomial p(2, 1), q(1, 3);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 1; ++b) p.set_coeff(a, b, fixtures::random_disk(rng, 1.0));
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 3; ++b) q.set_coeff(a, b, fixtures::random_disk(rng, 1.0));
    const Complex ref = oracle::ip(mo, p.coefficients(), q.coefficients());
    EXPECT_LT(std::abs(inner_product(t, p, q) - ref), 1e-13);
    EXPECT_LT(std::abs(inner_product(t, q, p) - std::conj(ref)), 1e-13);
  }
}

TEST(Positivity, Cases) {
  EXPECT_TRUE(is_positive_definite(MomentTable::delta(3, 3), 3, 3).positive_definite);
  MomentTable t(1, 0);
  t.set(0, 0, 1.0);
  t.set(1, 0, 1.0);
  EXPECT_FALSE(is_positive_definite(t, 1, 0).positive_definite);
  const MomentTable f = fixtures::fixture_moments(2, 2);
  EXPECT_TRUE(is_positive_definite(f, 2, 2).positive_definite);
  EXPECT_GT(oracle::min_eigenvalue(oracle::gram(fixtures::to_oracle(f, 2, 2), oracle::lex_monomials(2, 2))), 0.0);
}

TEST(MomentTable, SymmetryAndMissing) {
  MomentTable t(2, 2);
  t.set(1, -2, Complex(0.5, 0.25));
  EXPECT_EQ(t.at(-1, 2), Complex(0.5, -0.25));
  EXPECT_THROW(t.at(2, 2), MissingMoment);
  EXPECT_FALSE(t.complete(1, 1));
}

TEST(Density, ConstantGivesDelta) {
  const MomentTable t = moments_from_density([](double, double) { return 1.0; }, 2, 2, 16, 16);
  EXPECT_LT(t.max_difference(MomentTable::delta(2, 2), 2, 2), 1e-15);
}

TEST(Density, ExpandedSquare) {
  // |1 + 0.5 e^{i theta}|^2 = 1.25 + cos theta
  const MomentTable t = moments_from_density([](double th, double) { return 1.25 + std::cos(th); }, 1, 1, 16, 16);
  EXPECT_NEAR(std::abs(t.at(1, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.at(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(t.at(0, 0).real(), 1.25, 1e-15);
}

TEST(Density, FixtureConvergesAndMatchesOracleQuadrature) {
  const MomentTable a = fixtures::fixture_moments(2, 2, 128);
  const MomentTable b = fixtures::fixture_moments(2, 2, 256);
  EXPECT_LT(a.max_difference(b, 2, 2), 1e-12);
  const oracle::Moments ref = oracle::from_density(fixtures::fixture_density, 2, 2, 64);
  EXPECT_LT(b.max_difference(fixtures::to_table(ref, 2, 2), 2, 2), 1e-12);
}

TEST(Density, NonPositiveSampleRejected) {
  EXPECT_THROW(moments_from_density([](double th, double) { return std::cos(th); }, 1, 1, 8, 8),
               NonPositiveDensitySample);
}
