#include "qdho/vectorize.hpp"

#include <cmath>
#include <string>

#include "qdho/numerics.hpp"

namespace qdho {

VectorizedState vec(const ComplexMatrix& x) {
  detail::require_square(x, "vec");
  const auto d = static_cast<int>(x.rows());
  // Row-major storage: the flat entry sequence is already the row stack.
  return {d, Eigen::Map<const ComplexVector>(x.data(), x.size())};
}

ComplexMatrix unvec(const VectorizedState& v) {
  const auto expected = static_cast<Eigen::Index>(v.dim) * v.dim;
  if (v.dim < 0 || v.data.size() != expected) {
    throw ShapeError("unvec: length " + std::to_string(v.data.size()) + " does not match dim " +
                     std::to_string(v.dim));
  }
  return Eigen::Map<const ComplexMatrix>(v.data.data(), v.dim, v.dim);
}

VectorizedState as_vectorized(ComplexVector data) {
  const auto n = data.size();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) {
    throw ShapeError("as_vectorized: length " + std::to_string(n) + " is not a perfect square");
  }
  return {static_cast<int>(d), std::move(data)};
}

ComplexMatrix sandwich_superop(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_square(a, "sandwich_superop");
  detail::require_same_shape(a, b, "sandwich_superop");
  return kron(a, b.transpose());
}

ComplexMatrix apply_superop(const ComplexMatrix& superop, const ComplexMatrix& x) {
  const auto v = vec(x);
  if (superop.rows() != v.data.size() || superop.cols() != v.data.size()) {
    throw ShapeError("apply_superop: superoperator does not match state dimension");
  }
  return unvec({v.dim, superop * v.data});
}

}  // namespace qdho
