#include "qdho/fock.hpp"

#include <cmath>
#include <string>

namespace qdho {

namespace {

void require_dim(int dim, const char* what) {
  if (dim < 2) {
    throw ShapeError(std::string(what) + ": truncation dimension must be >= 2, got " +
                     std::to_string(dim));
  }
}

}  // namespace

FockOperatorSet build_fock_ops(int dim, double theta) {
  require_dim(dim, "build_fock_ops");
  FockOperatorSet ops;
  ops.dim = dim;
  ops.theta = theta;
  const Complex phase = std::polar(1.0, theta);
  ops.a = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    ops.a(k, k + 1) = phase * std::sqrt(static_cast<double>(k + 1));
  }
  ops.a_dag = ops.a.adjoint();
  ops.n_op = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    ops.n_op(k, k) = static_cast<double>(k);
  }
  ops.identity = ComplexMatrix::Identity(dim, dim);
  return ops;
}

ComplexMatrix fock_state(int dim, int n) {
  require_dim(dim, "fock_state");
  if (n < 0 || n >= dim) {
    throw ShapeError("fock_state: level " + std::to_string(n) + " outside 0.." +
                     std::to_string(dim - 1));
  }
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  rho(n, n) = 1.0;
  return rho;
}

ComplexMatrix coherent_state(int dim, Complex alpha) {
  require_dim(dim, "coherent_state");
  ComplexVector amp(dim);
  amp(0) = 1.0;
  for (int n = 1; n < dim; ++n) {
    amp(n) = amp(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  amp /= amp.norm();
  return amp * amp.adjoint();
}

ComplexMatrix thermal_state(int dim, double nbar) {
  require_dim(dim, "thermal_state");
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw ShapeError("thermal_state: mean occupation must be finite and >= 0");
  }
  const double ratio = nbar / (1.0 + nbar);
  RealVector weights(dim);
  double w = 1.0;
  for (int n = 0; n < dim; ++n) {
    weights(n) = w;
    w *= ratio;
  }
  weights /= weights.sum();
  return weights.cast<Complex>().asDiagonal();
}

ComplexMatrix embed_state(const ComplexMatrix& rho, int dim) {
  if (rho.rows() != rho.cols() || rho.rows() > dim) {
    throw ShapeError("embed_state: state does not fit into " + std::to_string(dim) + " levels");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  out.topLeftCorner(rho.rows(), rho.cols()) = rho;
  return out;
}

}  // namespace qdho
