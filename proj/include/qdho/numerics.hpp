#pragma once

#include <string_view>

#include "qdho/types.hpp"

namespace qdho {

/// Absolute-plus-relative tolerance used across the library.
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-10;

  double scaled(double norm) const { return abs + rel * norm; }
};

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, std::string_view what) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(what) + ": expected a square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <typename DA, typename DB>
void require_same_shape(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                        std::string_view what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

}  // namespace detail

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
template <typename DA, typename DB>
Matrix<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  Matrix<typename DA::Scalar> out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

template <typename DA, typename DB>
Matrix<typename DA::Scalar> matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  return a * b;
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m, "trace");
  return m.trace();
}

template <typename DA, typename DB>
double frobenius_distance(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  detail::require_same_shape(a, b, "frobenius_distance");
  return (a - b).norm();
}

/// (M + M^dagger) / 2.
template <typename Derived>
Matrix<typename Derived::Scalar> hermitize(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m, "hermitize");
  return (m + m.adjoint()) / 2.0;
}

/// Throws ShapeError when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, std::string_view what);

/// Matrix exponential by Pade scaling-and-squaring.
ComplexMatrix expm(const ComplexMatrix& m);

/// exp(c * M) for nilpotent M by the terminating Taylor series. At most
/// `max_terms` powers are summed; the loop exits early once a power is
/// exactly zero.
ComplexMatrix nilpotent_exp(const ComplexMatrix& m, Complex c, int max_terms);

/// exp(c * M) v by the same terminating series, using matrix-vector products.
ComplexVector nilpotent_exp_apply(const ComplexMatrix& m, Complex c, const ComplexVector& v,
                                  int max_terms);

struct HermitianEigensystem {
  RealVector values;       // ascending
  ComplexMatrix vectors;   // columns
};

/// Eigenvalues of (M + M^dagger)/2 in ascending order.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

}  // namespace qdho
