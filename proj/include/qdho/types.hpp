#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdho {

using Complex = std::complex<double>;

/// Dense row-major matrix. Row-major storage makes vec() a flat copy of the
/// entries, which is the ordering the superoperator algebra is written in.
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = Matrix<Complex>;
using ComplexVector = Vector<Complex>;
using RealVector = Vector<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Shape or index contract violated by the caller.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Model parameters break mu*nu >= |kappa|^2 in strict mode.
class PositivityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Eigensolver non-convergence, non-finite results from expm, and similar.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdho
