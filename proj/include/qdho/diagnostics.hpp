#pragma once

#include "qdho/types.hpp"

namespace qdho {

inline constexpr int kDefaultTailMargin = 4;

/// Physical-invariant readout of a (possibly unphysical) density matrix.
/// Nothing is repaired: a negative eigenvalue is reported with its index in
/// the ascending spectrum.
struct DiagnosticsRecord {
  Complex trace;
  double herm_residual = 0.0;  // ||rho - rho^dagger||_F
  double min_eigenvalue = 0.0;
  int min_eigenvalue_index = 0;
  double purity = 0.0;   // Re tr(rho^2)
  double mean_n = 0.0;   // Re tr(N rho)
  double tail_mass = 0.0;  // sum of rho_nn over the top `margin` levels

  bool positivity_violated(double tol = 1e-8) const { return min_eigenvalue < -tol; }
};

DiagnosticsRecord state_diagnostics(const ComplexMatrix& rho, int margin = kDefaultTailMargin);

struct StateDistance {
  double frobenius = 0.0;
  double trace_distance = 0.0;  // 1/2 sum |eig| of the Hermitized difference
};

StateDistance compare_states(const ComplexMatrix& rho1, const ComplexMatrix& rho2);

}  // namespace qdho
