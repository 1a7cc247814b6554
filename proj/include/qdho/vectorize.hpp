#pragma once

#include "qdho/types.hpp"

namespace qdho {

/// Row-stacked density matrix: entry (i, j) sits at index i*dim + j.
struct VectorizedState {
  int dim = 0;
  ComplexVector data;
};

VectorizedState vec(const ComplexMatrix& x);
ComplexMatrix unvec(const VectorizedState& v);

/// Wraps a raw d^2 column, checking that its length is a perfect square.
VectorizedState as_vectorized(ComplexVector data);

/// A (x) B^T, the superoperator of X -> A X B under row-stacking:
/// vec(A X B) = sandwich_superop(A, B) * vec(X).
ComplexMatrix sandwich_superop(const ComplexMatrix& a, const ComplexMatrix& b);

/// Applies a d^2 x d^2 superoperator to a d x d matrix.
ComplexMatrix apply_superop(const ComplexMatrix& superop, const ComplexMatrix& x);

}  // namespace qdho
