#pragma once

#include <utility>
#include <vector>

#include "bicircle/matrix_kernel.hpp"
#include "bicircle/moment_functional.hpp"
#include "bicircle/polynomial.hpp"

namespace bicircle {

// Block moments C_{-n}, ..., C_n of a block Toeplitz functional.
struct BlockMoments {
  int n = 0;
  std::vector<ComplexMatrix> blocks;  // blocks[j + n] = C_j

  const ComplexMatrix& at(int j) const { return blocks.at(static_cast<size_t>(j + n)); }
  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().rows()); }
};

// (C_j)[a][b] = c(j, a - b), blocks of size m+1.
BlockMoments opuc_blocks(const MomentTable& moments, int n, int m);
// Block Toeplitz matrix with block (r,s) = C_{r-s}.
ComplexMatrix block_toeplitz(const BlockMoments& c);

// L_m(P, Q) = sum_{a,b} P_a C_{b-a} Q_b^dagger.
ComplexMatrix matrix_functional(const BlockMoments& c, const MatrixPolynomial& p, const MatrixPolynomial& q);
// L_m(P^dagger, Q^dagger) = sum_{a,b} P_a^dagger C_{a-b} Q_b.
ComplexMatrix matrix_functional_adjoint(const BlockMoments& c, const MatrixPolynomial& p, const MatrixPolynomial& q);

struct OpucSequence {
  std::vector<MatrixPolynomial> left;   // L_0..L_n
  std::vector<MatrixPolynomial> right;  // R_0..R_n
  // Index i holds the coefficient produced at level i; index 0 is an empty matrix.
  std::vector<ComplexMatrix> reflection;
  std::vector<ComplexMatrix> a;
  std::vector<ComplexMatrix> a_hat;

  int levels() const { return static_cast<int>(left.size()) - 1; }
};

// Throws NotPositiveDefinite when C_0 or some I - E E^dagger fails Cholesky.
OpucSequence levinson(const BlockMoments& c, int n);

// Level-i polynomials from level i+1 data.
std::pair<MatrixPolynomial, MatrixPolynomial> inverse_step(const MatrixPolynomial& left_next,
                                                           const MatrixPolynomial& right_next,
                                                           const ComplexMatrix& e, const ComplexMatrix& a,
                                                           const ComplexMatrix& a_hat);

struct BoundaryReflection {
  ComplexMatrix from_left;   // -A^{-dagger} L(0) (←R(0))^{-1} Â
  ComplexMatrix from_right;  // -A (←L(0))^{-1} R(0) Â^{-dagger}
};
BoundaryReflection reflection_from_boundary(const MatrixPolynomial& left_next, const MatrixPolynomial& right_next,
                                            const ComplexMatrix& a, const ComplexMatrix& a_hat);

// Max residual of both Christoffel-Darboux identities over all levels.
double cd_residual(const OpucSequence& seq, Complex z, Complex z1);

struct SpectralMatchReport {
  double max_moment_error = 0.0;     // max_{|j|<=k} |C^k_j - C_j|
  double left_right_discrepancy = 0.0;  // max over grid of |W via L - W via R|
};
SpectralMatchReport spectral_matching_check(const OpucSequence& seq, int k, const BlockMoments& c, int grid = 512);

// Relative errors of the determinant and entropy identities at level k.
double determinant_identity_error(const OpucSequence& seq, const BlockMoments& c, int k);
double entropy_identity_error(const OpucSequence& seq, int k, int grid = 512);

struct MatrixStabilityCheck {
  double min_abs_det = 0.0;  // over the closed-disk polar grid
  int winding_number = 0;    // of det on |z| = 1
  bool stable() const { return min_abs_det > 0.0 && winding_number == 0; }
};
MatrixStabilityCheck check_disk_stability(const MatrixPolynomial& p, int radial = 64, int angular = 64);

// Q(theta) = sum_{k=-n}^{n} Q_k e^{ik theta}, Q_{-k} = Q_k^dagger.
struct MatrixTrigPolynomial {
  int degree = 0;
  std::vector<ComplexMatrix> coeffs;  // coeffs[k + degree] = Q_k

  const ComplexMatrix& at(int k) const { return coeffs.at(static_cast<size_t>(k + degree)); }
  ComplexMatrix operator()(double theta) const;
  static MatrixTrigPolynomial from_product(const MatrixPolynomial& g);  // G G^dagger on the circle
};

// Stable F of degree n with F F^dagger = Q on the circle; F = ←L_n for the functional with density Q^{-1}.
// Throws NotStrictlyPositive when Q(theta) is not positive definite on the check grid.
MatrixPolynomial matrix_fejer_riesz(const MatrixTrigPolynomial& q, int n, int grid = 0);

struct RegularizedFactor {
  MatrixPolynomial factor;
  double epsilon = 0.0;
};
// Factors Q + eps I with eps = 1e-8 * max_theta ||Q(theta)||.
RegularizedFactor matrix_fejer_riesz_semidefinite(const MatrixTrigPolynomial& q, int n, int grid = 0);

}  // namespace bicircle
