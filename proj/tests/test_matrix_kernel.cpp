#include <gtest/gtest.h>

#include <random>

#include "bicircle/errors.hpp"
#include "bicircle/matrix_kernel.hpp"
#include "fixtures.hpp"

using namespace bicircle;

namespace {

ComplexMatrix random_pd(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> g;
  ComplexMatrix a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a * a.adjoint() + 0.1 * ComplexMatrix::Identity(k, k);
}

bool lower_triangular(const ComplexMatrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != Complex(0.0)) return false;
  return true;
}

}  // namespace

TEST(LowerCholesky, IdentityIsFixed) {
  EXPECT_LT(max_abs(lower_cholesky(ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(3, 3)), 1e-15);
}

TEST(LowerCholesky, RemultipliesToInput) {
  ComplexMatrix h(2, 2);
  h << 2.0, 1.0, 1.0, 2.0;
  const ComplexMatrix a = lower_cholesky(h);
  EXPECT_TRUE(lower_triangular(a));
  EXPECT_LT(max_abs(a * a.adjoint() - h), 1e-14);
  EXPECT_GT(a(0, 0).real(), 0.0);
  EXPECT_GT(a(1, 1).real(), 0.0);
}

TEST(LowerCholesky, ZeroPivotRejected) {
  ComplexMatrix h(2, 2);
  h << 0.0, 1.0, 1.0, 0.0;
  EXPECT_THROW(lower_cholesky(h), NotPositiveDefinite);
}

TEST(LowerCholesky, NonHermitianRejected) {
  ComplexMatrix h(2, 2);
  h << 2.0, 1.0, 0.0, 2.0;
  EXPECT_THROW(lower_cholesky(h), InvalidArgument);
}

TEST(LowerCholesky, AgreesWithEigenOnRandomInput) {
  std::mt19937_64 rng(fixtures::kSeed);
  for (int k = 1; k <= 8; ++k) {
    const ComplexMatrix h = random_pd(rng, k);
    const ComplexMatrix ref = Eigen::LLT<ComplexMatrix>(h).matrixL();
    EXPECT_LT(max_abs(lower_cholesky(h) - ref), 1e-10 * max_abs(h));
  }
}

TEST(UpperCholesky, DiagonalForced) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 4.0;
  h(1, 1) = 9.0;
  const ComplexMatrix b = upper_cholesky(h);
  EXPECT_NEAR(b(0, 0).real(), 2.0, 1e-15);
  EXPECT_NEAR(b(1, 1).real(), 3.0, 1e-15);
  EXPECT_EQ(b(0, 1), Complex(0.0));
}

TEST(UpperCholesky, RemultipliesAndIsUpper) {
  std::mt19937_64 rng(fixtures::kSeed + 1);
  for (int k = 1; k <= 8; ++k) {
    const ComplexMatrix h = random_pd(rng, k);
    const ComplexMatrix b = upper_cholesky(h);
    EXPECT_TRUE(lower_triangular(b.transpose()));
    EXPECT_LT(max_abs(b * b.adjoint() - h), 1e-12 * max_abs(h));
    for (int i = 0; i < k; ++i) EXPECT_GT(b(i, i).real(), 0.0);
  }
}

TEST(PivotScan, ReportsSemidefinite) {
  ComplexMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, 1.0;
  const PivotScan s = cholesky_pivot_scan(h);
  EXPECT_FALSE(s.positive_definite);
  EXPECT_LT(s.min_pivot, 1e-12);
}

TEST(SpectralNorm, KnownValues) {
  EXPECT_EQ(spectral_norm(ComplexMatrix::Zero(2, 3)), 0.0);
  EXPECT_TRUE(is_strict_contraction(ComplexMatrix::Zero(2, 3)));
  EXPECT_NEAR(spectral_norm(0.5 * ComplexMatrix::Identity(2, 2)), 0.5, 1e-15);
  EXPECT_FALSE(is_strict_contraction(ComplexMatrix::Identity(2, 2), 1e-9));
  EXPECT_EQ(spectral_norm(ComplexMatrix(0, 3)), 0.0);
}

TEST(SpectralNorm, MatchesPowerIteration) {
  std::mt19937_64 rng(fixtures::kSeed + 2);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10; ++t) {
    ComplexMatrix a(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
    ComplexVector v = ComplexVector::Ones(4).normalized();
    double lambda = 0.0;
    for (int it = 0; it < 2000; ++it) {
      v = (a.adjoint() * a * v).normalized();
      lambda = (a * v).norm();
    }
    EXPECT_NEAR(spectral_norm(a), lambda, 1e-10 * lambda);
  }
}

TEST(Structure, ToeplitzChecks) {
  ComplexMatrix t(2, 2);
  t << Complex(1.0, 0.5), Complex(2.0, -1.0), Complex(3.0, 0.25), Complex(1.0, 0.5);
  EXPECT_TRUE(centro_transpose_symmetric(t));
  EXPECT_TRUE(is_toeplitz(t));
  ComplexMatrix nt(2, 2);
  nt << 1.0, 2.0, 3.0, 4.0;
  EXPECT_FALSE(is_toeplitz(nt));
  EXPECT_TRUE(is_doubly_toeplitz(ComplexMatrix::Identity(4, 4), 2));
}

TEST(Selectors, ShapesAndEntries) {
  ComplexMatrix u1(1, 2);
  u1 << 0.0, 1.0;
  EXPECT_EQ(shift_selector(1), u1);
  ComplexMatrix l1(1, 2);
  l1 << 1.0, 0.0;
  EXPECT_EQ(lead_selector(1), l1);
  const ComplexVector e = unit_vector(3);
  EXPECT_EQ(e(0), Complex(1.0));
  EXPECT_EQ(e(1), Complex(0.0));
  EXPECT_EQ(e(2), Complex(0.0));
  EXPECT_EQ(shift_selector(0).rows(), 0);
  EXPECT_EQ(shift_selector(0).cols(), 1);
}

TEST(Selectors, LexToRevlexSwapsMixedMonomials) {
  // lex (zw, z, w, 1) -> revlex (wz, w, z, 1)
  const ComplexMatrix p = lex_to_revlex(1, 1);
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(0, 0) = 1.0;
  expect(1, 2) = 1.0;
  expect(2, 1) = 1.0;
  expect(3, 3) = 1.0;
  EXPECT_EQ(p, expect);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= m; ++b)
          EXPECT_EQ(lex_to_revlex(n, m)(revlex_index(n, m, a, b), lex_index(n, m, a, b)), Complex(1.0));
}

TEST(CheckedInverse, SingularRejected) {
  ComplexMatrix s(2, 2);
  s << 1.0, 2.0, 2.0, 4.0;
  EXPECT_THROW(checked_inverse(s), SingularMatrix);
  ComplexMatrix a(2, 2);
  a << 2.0, 1.0, 0.0, 3.0;
  EXPECT_LT(max_abs(checked_inverse(a) * a - ComplexMatrix::Identity(2, 2)), 1e-15);
}
