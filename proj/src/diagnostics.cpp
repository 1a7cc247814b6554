#include "qdho/diagnostics.hpp"

#include <algorithm>

#include "qdho/numerics.hpp"

namespace qdho {

DiagnosticsRecord state_diagnostics(const ComplexMatrix& rho, int margin) {
  detail::require_square(rho, "state_diagnostics");
  const auto d = rho.rows();
  DiagnosticsRecord r;
  r.trace = rho.trace();
  r.herm_residual = (rho - rho.adjoint()).norm();

  const RealVector eig = hermitian_eigenvalues(rho);
  Eigen::Index idx = 0;
  r.min_eigenvalue = eig.size() > 0 ? eig.minCoeff(&idx) : 0.0;
  r.min_eigenvalue_index = static_cast<int>(idx);

  // tr(rho^2) = sum_ij rho_ij rho_ji
  r.purity = (rho.array() * rho.transpose().array()).sum().real();

  double mean_n = 0.0;
  double tail = 0.0;
  const auto first_tail = std::max<Eigen::Index>(0, d - std::max(margin, 0));
  for (Eigen::Index n = 0; n < d; ++n) {
    const double pop = rho(n, n).real();
    mean_n += static_cast<double>(n) * pop;
    if (n >= first_tail) {
      tail += pop;
    }
  }
  r.mean_n = mean_n;
  r.tail_mass = tail;
  return r;
}

StateDistance compare_states(const ComplexMatrix& rho1, const ComplexMatrix& rho2) {
  detail::require_square(rho1, "compare_states");
  detail::require_same_shape(rho1, rho2, "compare_states");
  const ComplexMatrix diff = rho1 - rho2;
  return {diff.norm(), 0.5 * hermitian_eigenvalues(diff).cwiseAbs().sum()};
}

}  // namespace qdho
