#pragma once

#include <string_view>

#include "qdho/diagnostics.hpp"
#include "qdho/liouvillian.hpp"

namespace qdho {

enum class Method { exact, factorized, alternative, series, stepped };

std::string_view to_string(Method m);
/// Throws std::invalid_argument for unknown names.
Method method_from_string(std::string_view name);

struct PropagationResult {
  ComplexMatrix rho_t;
  Method method = Method::exact;
  double t = 0.0;
  int n_steps = 1;
  DiagnosticsRecord diagnostics;
};

/// rho(t) = unvec(expm(t H) vec(rho0)), H assembled from the generator
/// families on p.dim levels.
PropagationResult propagate_exact(const ModelParams& p, const ComplexMatrix& rho0, double t);

/// exp(t(-(mu+nu) Kt3 + nu Kt+ + mu Kt-)) in disentangled form
///   (1/F) exp(G a+ (x) a^T) (F^-N (x) F^-N) exp(E a (x) (a+)^T).
/// The outer exponentials are terminating series; the middle factor is the
/// diagonal F^{-(n1+n2+1)}.
ComplexMatrix su11_factor(const ModelParams& p, double t);

/// exp(t(-2i omega L3 + conj(kappa) L+ + kappa L-)) = exp(f L+) exp(g L3) exp(l L-).
ComplexMatrix l_factor(const ModelParams& p, double t);

/// The same factor with L+- split into commuting J and K pieces:
///   exp(f J+) (e^{-f/2 (a+)^2} (x) e^{-f/2 ((a+)^2)^T}) (e^{g N/2} (x) e^{-g N/2})
///   exp(l J-) (e^{-l/2 a^2} (x) e^{-l/2 (a^2)^T})
ComplexMatrix l_factor_split(const ModelParams& p, double t);

/// One-shot superoperators of the two splittings, prefactor e^{(mu-nu)t/2}
/// included. The rightmost factor acts first.
///   factorized:  e^{(mu-nu)t/2} su11(t) L(t)
///   alternative: e^{(mu-nu)t/2} e^{t conj(kappa) L+} [e^{-2i omega t L3} su11(t)] e^{t kappa L-}
ComplexMatrix factorized_step(const ModelParams& p, double t);
ComplexMatrix alternative_step(const ModelParams& p, double t);

PropagationResult propagate_factorized(const ModelParams& p, const ComplexMatrix& rho0, double t);
PropagationResult propagate_alternative(const ModelParams& p, const ComplexMatrix& rho0, double t);

/// The factorized propagator restated on d x d matrices as nested operator
/// sums (no superoperators); every sum terminates at p.dim terms.
PropagationResult operator_series_solution(const ModelParams& p, const ComplexMatrix& rho0,
                                           double t);

/// Applies the factorized or alternative single-step map n_steps times with
/// step t / n_steps.
PropagationResult stepped_propagate(const ModelParams& p, const ComplexMatrix& rho0, double t,
                                    int n_steps, Method method);

/// Dispatch on method; n_steps and step_method are used by Method::stepped only.
PropagationResult propagate(Method method, const ModelParams& p, const ComplexMatrix& rho0,
                            double t, int n_steps = 1, Method step_method = Method::factorized);

}  // namespace qdho
