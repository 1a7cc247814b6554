#pragma once

#include "qdho/liouvillian.hpp"

namespace qdho {

/// Scalar time functions of the two disentangled factors at one time t.
///
/// su(1,1) factor exp(G Kt+) exp(-2 log F Kt3) exp(E Kt-), x = (mu-nu) t / 2:
///   F = cosh x + (mu+nu)/(mu-nu) sinh x
///   E = 2mu/(mu-nu) sinh x / F,   G = 2nu/(mu-nu) sinh x / F
/// L factor exp(f L+) exp(g L3) exp(l L-), c = (e^{-2i omega t} - 1)/(-2i omega):
///   f = conj(kappa) c,   g = -2i omega t,   l = kappa c
struct CoefficientSet {
  double t = 0.0;
  Complex su11_lower;  // E
  Complex su11_raise;  // G
  Complex su11_norm;   // F
  Complex l_raise;     // f
  Complex l_diag;      // g
  Complex l_lower;     // l
};

enum class CoefficientBranch {
  automatic,    // closed form away from the seams, limit series near them
  closed_form,  // force the closed form (undefined exactly at mu == nu or omega == 0)
  limit,        // force the small-x / small-omega*t series
};

inline constexpr double kSu11SeamThreshold = 1e-6;   // |(mu-nu) t / 2|
inline constexpr double kOmegaSeamThreshold = 1e-9;  // |omega t|

CoefficientSet eval_coefficients(const ModelParams& p, double t,
                                 CoefficientBranch branch = CoefficientBranch::automatic);

}  // namespace qdho
