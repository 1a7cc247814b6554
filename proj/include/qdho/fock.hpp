#pragma once

#include "qdho/types.hpp"

namespace qdho {

/// Ladder operators truncated to the levels 0..dim-1.
///
/// a(k, k+1) = e^{i theta} sqrt(k+1). The truncation makes a and a_dag
/// nilpotent (a^dim = 0) and breaks [a, a_dag] = 1 at the corner entry
/// (dim-1, dim-1), where a a_dag has 0 instead of dim.
struct FockOperatorSet {
  int dim = 0;
  double theta = 0.0;
  ComplexMatrix a;
  ComplexMatrix a_dag;
  ComplexMatrix n_op;
  ComplexMatrix identity;
};

FockOperatorSet build_fock_ops(int dim, double theta = 0.0);

/// |n><n|
ComplexMatrix fock_state(int dim, int n);

/// Coherent state |alpha><alpha| truncated to dim levels and renormalized to
/// unit trace.
ComplexMatrix coherent_state(int dim, Complex alpha);

/// Thermal state with weights (nbar/(1+nbar))^n over the truncated levels,
/// renormalized to unit trace.
ComplexMatrix thermal_state(int dim, double nbar);

/// Pads (or keeps) a density matrix into a larger Fock space; new levels are
/// empty.
ComplexMatrix embed_state(const ComplexMatrix& rho, int dim);

}  // namespace qdho
