#pragma once

#include <complex>

#include <Eigen/Dense>

namespace bicircle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kTolHermitian = 1e-10;
inline constexpr double kTolFactor = 1e-10;
inline constexpr double kPivotTol = 1e-12;
inline constexpr double kContractionMargin = 1e-10;

// Largest entry modulus; 0 for an empty matrix.
double max_abs(const ComplexMatrix& a);

// max|A - A†| <= tol * max(1, max|A|).
bool is_hermitian(const ComplexMatrix& h, double tol = kTolHermitian);

struct CholeskyFactors {
  ComplexMatrix lower;
  ComplexMatrix upper;
};

struct PivotScan {
  bool positive_definite = false;
  // Smallest pivot divided by max|H| (the relative scale the threshold uses).
  double min_pivot = 0.0;
};

// A with A A† = H, lower triangular, positive diagonal.
// Throws NotPositiveDefinite when a pivot falls to pivot_tol * max|H| or below,
// and DimensionMismatch for non-square or non-Hermitian input.
ComplexMatrix lower_cholesky(const ComplexMatrix& h, double pivot_tol = kPivotTol);

// B with B B† = H, upper triangular, positive diagonal (J·lower(JHJ)·J).
ComplexMatrix upper_cholesky(const ComplexMatrix& h, double pivot_tol = kPivotTol);

CholeskyFactors cholesky_factors(const ComplexMatrix& h, double pivot_tol = kPivotTol);

// Runs the elimination without throwing; reports the smallest relative pivot.
PivotScan cholesky_pivot_scan(const ComplexMatrix& h, double pivot_tol = kPivotTol);

double spectral_norm(const ComplexMatrix& m);
bool is_strict_contraction(const ComplexMatrix& m, double margin = kContractionMargin);

// max|J M J - M^T| <= tol * max(1, max|M|).
bool centro_transpose_symmetric(const ComplexMatrix& m, double tol = kTolHermitian);
// Toeplitz test through centro-transpose symmetry of M and its leading truncation.
bool is_toeplitz(const ComplexMatrix& m, double tol = kTolHermitian);
// Doubly Toeplitz test for a matrix of block_size x block_size blocks.
bool is_doubly_toeplitz(const ComplexMatrix& m, int block_size, double tol = kTolHermitian);

// U_m = [0, I_m], m x (m+1).
ComplexMatrix shift_selector(int m);
// U1_m = [I_m, 0], m x (m+1).
ComplexMatrix lead_selector(int m);
// e_1 of length size (or e_{index+1}).
ComplexVector unit_vector(int size, int index = 0);
// Antidiagonal reversal J.
ComplexMatrix exchange(int size);
// Permutation taking the lex monomial vector to the revlex one:
// (P)[revlex index][lex index] = 1.
ComplexMatrix lex_to_revlex(int n, int m);

// Positions in the descending lex / revlex monomial vectors of z^a w^b.
inline int lex_index(int n, int m, int a, int b) { return (n - a) * (m + 1) + (m - b); }
inline int revlex_index(int n, int m, int a, int b) { return (m - b) * (n + 1) + (n - a); }

// Inverse through partial-pivot LU; throws SingularMatrix when the pivot ratio collapses.
ComplexMatrix checked_inverse(const ComplexMatrix& a);

// Smallest eigenvalue of the Hermitian part of a square matrix.
double min_hermitian_eigenvalue(const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);

}  // namespace bicircle
