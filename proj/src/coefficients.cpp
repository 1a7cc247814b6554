#include "qdho/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace qdho {

namespace {

struct Su11 {
  double e, g, f;
};

Su11 su11_closed_form(double mu, double nu, double t) {
  const double x = (mu - nu) * t / 2.0;
  const double sh = std::sinh(x);
  const double big_f = std::cosh(x) + (mu + nu) / (mu - nu) * sh;
  return {2.0 * mu / (mu - nu) * sh / big_f, 2.0 * nu / (mu - nu) * sh / big_f, big_f};
}

// sinh(x)/(mu-nu) = (t/2) sinh(x)/x, expanded to three terms.
Su11 su11_limit(double mu, double nu, double t) {
  const double x = (mu - nu) * t / 2.0;
  const double x2 = x * x;
  const double sinhc = 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  const double cosh = 1.0 + x2 / 2.0 + x2 * x2 / 24.0;
  const double half_t = t / 2.0;
  const double big_f = cosh + (mu + nu) * half_t * sinhc;
  return {2.0 * mu * half_t * sinhc / big_f, 2.0 * nu * half_t * sinhc / big_f, big_f};
}

// (e^{-2i w t} - 1)/(-2i w); the numerator is -2 sin^2(wt) - i sin(2wt).
Complex rotation_integral_closed_form(double omega, double t) {
  const double s = std::sin(omega * t);
  const Complex numerator{-2.0 * s * s, -std::sin(2.0 * omega * t)};
  return numerator / Complex{0.0, -2.0 * omega};
}

Complex rotation_integral_limit(double omega, double t) {
  const double wt = omega * t;
  return t * Complex{1.0 - 2.0 * wt * wt / 3.0, -wt};
}

}  // namespace

CoefficientSet eval_coefficients(const ModelParams& p, double t, CoefficientBranch branch) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("eval_coefficients: t must be finite and >= 0");
  }
  const bool su11_seam = std::abs((p.mu - p.nu) * t / 2.0) <= kSu11SeamThreshold;
  const bool omega_seam = std::abs(p.omega * t) <= kOmegaSeamThreshold;

  bool use_limit_su11 = su11_seam;
  bool use_limit_omega = omega_seam;
  if (branch == CoefficientBranch::closed_form) {
    use_limit_su11 = use_limit_omega = false;
  } else if (branch == CoefficientBranch::limit) {
    use_limit_su11 = use_limit_omega = true;
  }

  const Su11 s = use_limit_su11 ? su11_limit(p.mu, p.nu, t) : su11_closed_form(p.mu, p.nu, t);
  const Complex c = use_limit_omega ? rotation_integral_limit(p.omega, t)
                                    : rotation_integral_closed_form(p.omega, t);

  CoefficientSet out;
  out.t = t;
  out.su11_lower = s.e;
  out.su11_raise = s.g;
  out.su11_norm = s.f;
  out.l_raise = std::conj(p.kappa) * c;
  out.l_diag = Complex{0.0, -2.0 * p.omega * t};
  out.l_lower = p.kappa * c;
  return out;
}

}  // namespace qdho
