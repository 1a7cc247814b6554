#include "qdho/numerics.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace qdho {

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw ShapeError(std::string(what) + ": matrix has non-finite entries");
  }
}

ComplexMatrix expm(const ComplexMatrix& m) {
  detail::require_square(m, "expm");
  require_finite(m, "expm");
  if (m.size() == 0) {
    return m;
  }
  // MatrixFunctions works on column-major storage.
  const Eigen::MatrixXcd col = m;
  ComplexMatrix out = col.exp();
  if (!out.allFinite()) {
    throw NumericalError("expm: result is not finite (input norm " +
                         std::to_string(m.cwiseAbs().colwise().sum().maxCoeff()) + ")");
  }
  return out;
}

ComplexMatrix nilpotent_exp(const ComplexMatrix& m, Complex c, int max_terms) {
  detail::require_square(m, "nilpotent_exp");
  ComplexMatrix result = ComplexMatrix::Identity(m.rows(), m.cols());
  if (c == Complex{0.0, 0.0}) {
    return result;
  }
  ComplexMatrix term = result;
  for (int k = 1; k <= max_terms; ++k) {
    term = (term * m) * (c / static_cast<double>(k));
    if (term.isZero(0.0)) {
      break;
    }
    result += term;
  }
  return result;
}

ComplexVector nilpotent_exp_apply(const ComplexMatrix& m, Complex c, const ComplexVector& v,
                                  int max_terms) {
  detail::require_square(m, "nilpotent_exp_apply");
  if (m.cols() != v.size()) {
    throw ShapeError("nilpotent_exp_apply: vector length does not match matrix");
  }
  ComplexVector result = v;
  if (c == Complex{0.0, 0.0}) {
    return result;
  }
  ComplexVector term = v;
  for (int k = 1; k <= max_terms; ++k) {
    term = (m * term) * (c / static_cast<double>(k));
    if (term.isZero(0.0)) {
      break;
    }
    result += term;
  }
  return result;
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const ComplexMatrix& m, bool vectors) {
  detail::require_square(m, "hermitian_eigenvalues");
  const Eigen::MatrixXcd h = hermitize(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver;
}

}  // namespace

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.size() == 0) {
    return {};
  }
  return solve(m, false).eigenvalues();
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (m.size() == 0) {
    return {};
  }
  auto solver = solve(m, true);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace qdho
