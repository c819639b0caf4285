#include "bicircle/matrix_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bicircle/errors.hpp"

namespace bicircle {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
}

struct Elimination {
  ComplexMatrix lower;
  bool ok = true;
  double min_pivot = std::numeric_limits<double>::infinity();
};

// Outer-product elimination on the lower triangle. Stops at the first bad pivot.
Elimination eliminate(const ComplexMatrix& h, double pivot_tol) {
  const Eigen::Index n = h.rows();
  Elimination out;
  out.lower = ComplexMatrix::Zero(n, n);
  const double scale = std::max(max_abs(h), std::numeric_limits<double>::min());
  ComplexMatrix work = h;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double pivot = work(k, k).real();
    out.min_pivot = std::min(out.min_pivot, pivot / scale);
    if (!(pivot > pivot_tol * scale)) {
      out.ok = false;
      return out;
    }
    const double d = std::sqrt(pivot);
    out.lower(k, k) = d;
    for (Eigen::Index i = k + 1; i < n; ++i) out.lower(i, k) = work(i, k) / d;
    for (Eigen::Index j = k + 1; j < n; ++j) {
      const Complex ljk = std::conj(out.lower(j, k));
      for (Eigen::Index i = j; i < n; ++i) work(i, j) -= out.lower(i, k) * ljk;
    }
  }
  return out;
}

}  // namespace

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  if (h.size() == 0) return true;
  return max_abs(h - h.adjoint()) <= tol * std::max(1.0, max_abs(h));
}

ComplexMatrix lower_cholesky(const ComplexMatrix& h, double pivot_tol) {
  require_square(h, "lower_cholesky");
  if (!is_hermitian(h)) throw InvalidArgument("lower_cholesky: input is not Hermitian");
  Elimination e = eliminate(h, pivot_tol);
  if (!e.ok) {
    throw NotPositiveDefinite("Cholesky pivot " + std::to_string(e.min_pivot) +
                              " (relative) is not above the pivot tolerance");
  }
  return e.lower;
}

ComplexMatrix upper_cholesky(const ComplexMatrix& h, double pivot_tol) {
  require_square(h, "upper_cholesky");
  const ComplexMatrix j = exchange(static_cast<int>(h.rows()));
  return j * lower_cholesky(j * h * j, pivot_tol) * j;
}

CholeskyFactors cholesky_factors(const ComplexMatrix& h, double pivot_tol) {
  return {lower_cholesky(h, pivot_tol), upper_cholesky(h, pivot_tol)};
}

PivotScan cholesky_pivot_scan(const ComplexMatrix& h, double pivot_tol) {
  require_square(h, "cholesky_pivot_scan");
  if (!is_hermitian(h)) return {false, -std::numeric_limits<double>::infinity()};
  Elimination e = eliminate(h, pivot_tol);
  return {e.ok, e.min_pivot};
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

bool is_strict_contraction(const ComplexMatrix& m, double margin) {
  return spectral_norm(m) <= 1.0 - margin;
}

bool centro_transpose_symmetric(const ComplexMatrix& m, double tol) {
  require_square(m, "centro_transpose_symmetric");
  if (m.size() == 0) return true;
  const ComplexMatrix j = exchange(static_cast<int>(m.rows()));
  return max_abs(j * m * j - m.transpose()) <= tol * std::max(1.0, max_abs(m));
}

bool is_toeplitz(const ComplexMatrix& m, double tol) {
  require_square(m, "is_toeplitz");
  if (m.rows() <= 1) return true;
  const Eigen::Index k = m.rows() - 1;
  return centro_transpose_symmetric(m, tol) && centro_transpose_symmetric(m.topLeftCorner(k, k), tol);
}

bool is_doubly_toeplitz(const ComplexMatrix& m, int block_size, double tol) {
  require_square(m, "is_doubly_toeplitz");
  if (block_size <= 0 || m.rows() % block_size != 0) {
    throw DimensionMismatch("is_doubly_toeplitz: size is not a multiple of the block size");
  }
  const int blocks = static_cast<int>(m.rows()) / block_size;
  if (!centro_transpose_symmetric(m, tol)) return false;
  const int k1 = (blocks - 1) * block_size;
  if (!centro_transpose_symmetric(m.topLeftCorner(k1, k1), tol)) return false;
  const int b2 = block_size - 1;
  ComplexMatrix a2(blocks * b2, blocks * b2);
  for (int r = 0; r < blocks; ++r) {
    for (int s = 0; s < blocks; ++s) {
      a2.block(r * b2, s * b2, b2, b2) = m.block(r * block_size, s * block_size, b2, b2);
    }
  }
  return centro_transpose_symmetric(a2, tol);
}

ComplexMatrix shift_selector(int m) {
  ComplexMatrix u = ComplexMatrix::Zero(m, m + 1);
  for (int i = 0; i < m; ++i) u(i, i + 1) = 1.0;
  return u;
}

ComplexMatrix lead_selector(int m) {
  ComplexMatrix u = ComplexMatrix::Zero(m, m + 1);
  for (int i = 0; i < m; ++i) u(i, i) = 1.0;
  return u;
}

ComplexVector unit_vector(int size, int index) {
  ComplexVector e = ComplexVector::Zero(size);
  if (index >= 0 && index < size) e(index) = 1.0;
  return e;
}

ComplexMatrix exchange(int size) {
  ComplexMatrix j = ComplexMatrix::Zero(size, size);
  for (int i = 0; i < size; ++i) j(i, size - 1 - i) = 1.0;
  return j;
}

ComplexMatrix lex_to_revlex(int n, int m) {
  const int dim = (n + 1) * (m + 1);
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= m; ++b) p(revlex_index(n, m, a, b), lex_index(n, m, a, b)) = 1.0;
  }
  return p;
}

ComplexMatrix checked_inverse(const ComplexMatrix& a) {
  require_square(a, "checked_inverse");
  if (a.size() == 0) return a;
  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  if (!(lu.rcond() > 1e-14)) throw SingularMatrix("matrix is numerically singular");
  return lu.inverse();
}

double min_hermitian_eigenvalue(const ComplexMatrix& a) {
  require_square(a, "min_hermitian_eigenvalue");
  if (a.size() == 0) return 0.0;
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace bicircle
