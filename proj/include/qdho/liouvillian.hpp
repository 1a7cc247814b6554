#pragma once

#include <vector>

#include "qdho/types.hpp"

namespace qdho {

/// Damped oscillator with the generalized (Kossakowski-Lindblad) dissipator
///
///   d rho/dt = -i[omega N, rho]
///              - mu/2    (N rho + rho N - 2 a rho a+)
///              - nu/2    (a a+ rho + rho a a+ - 2 a+ rho a)
///              - kappa/2 (a^2 rho + rho a^2 - 2 a rho a)
///              - conj(kappa)/2 ((a+)^2 rho + rho (a+)^2 - 2 a+ rho a+)
///
/// The conjugate of kappa is always formed at the point of use.
struct ModelParams {
  double omega = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  Complex kappa{0.0, 0.0};
  double theta = 0.0;
  int dim = 2;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

enum class PositivityMode { strict, permissive };

/// True iff mu*nu >= |kappa|^2.
bool satisfies_positivity(const ModelParams& p);

/// Rejects dim < 2, negative or non-finite rates; in strict mode also
/// rejects mu*nu < |kappa|^2 with PositivityError.
void validate(const ModelParams& p, PositivityMode mode);

/// 1/2 sum_j (A_j^+ A_j (x) 1 + 1 (x) (A_j^+ A_j)^T - 2 A_j (x) (A_j^+)^T).
/// The master equation subtracts this term. An empty list is not an error;
/// it yields an empty (0 x 0) matrix that callers treat as zero.
ComplexMatrix build_dissipator(const std::vector<ComplexMatrix>& jump_ops);

/// -i(H (x) 1 - 1 (x) H^T) - D for an ordinary Lindblad generator.
/// Products such as a a+ are taken in the truncated space, so this generator
/// annihilates vec(1) exactly.
ComplexMatrix build_lindblad_liouvillian(const ComplexMatrix& hamiltonian,
                                         const std::vector<ComplexMatrix>& jump_ops);

/// Three algebraically equivalent assemblies of the vectorized generator:
///   form_i   term by term from sandwich superoperators,
///   form_ii  regrouped Kronecker products,
///   form_iii the generator families:
///            (mu-nu)/2 + -(mu+nu) Kt3 + nu Kt+ + mu Kt- - 2i omega L3
///            + conj(kappa) L+ + kappa L-.
/// All three write a a+ as N+1, which is exact on the untruncated space only;
/// on dim levels the trace leaks through slot (dim-1, dim-1) at rate nu*dim.
enum class LiouvillianForm { form_i, form_ii, form_iii };

ComplexMatrix build_liouvillian(const ModelParams& p, LiouvillianForm form,
                                PositivityMode mode = PositivityMode::strict);

/// ||H(theta, kappa) - H(0, e^{2i theta} kappa)||_F
double phase_equivalence_check(const ModelParams& p);

}  // namespace qdho
