#include "qdho/propagators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdho/algebra.hpp"
#include "qdho/coefficients.hpp"
#include "qdho/fock.hpp"
#include "qdho/numerics.hpp"
#include "qdho/vectorize.hpp"

namespace qdho {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact:
      return "exact";
    case Method::factorized:
      return "factorized";
    case Method::alternative:
      return "alternative";
    case Method::series:
      return "series";
    case Method::stepped:
      return "stepped";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  for (Method m : {Method::exact, Method::factorized, Method::alternative, Method::series,
                   Method::stepped}) {
    if (to_string(m) == name) {
      return m;
    }
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

namespace {

void require_state(const ModelParams& p, const ComplexMatrix& rho0, double t) {
  validate(p, PositivityMode::permissive);
  if (rho0.rows() != p.dim || rho0.cols() != p.dim) {
    throw ShapeError("initial state is " + std::to_string(rho0.rows()) + "x" +
                     std::to_string(rho0.cols()) + ", model has dim " + std::to_string(p.dim));
  }
  if (std::abs(rho0.trace() - 1.0) > 1e-10) {
    throw ShapeError("initial state must have unit trace");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("propagation time must be finite and >= 0");
  }
}

PropagationResult make_result(ComplexMatrix rho, Method method, double t, int n_steps = 1) {
  PropagationResult r;
  r.diagnostics = state_diagnostics(rho);
  r.rho_t = std::move(rho);
  r.method = method;
  r.t = t;
  r.n_steps = n_steps;
  return r;
}

// Diagonal of F^{-(n1+n2+1)} over row-stack slots.
ComplexVector su11_middle(int d, Complex big_f) {
  ComplexVector diag(static_cast<Eigen::Index>(d) * d);
  const Complex log_f = std::log(big_f);
  for (int n1 = 0; n1 < d; ++n1) {
    for (int n2 = 0; n2 < d; ++n2) {
      diag(n1 * d + n2) = std::exp(-log_f * static_cast<double>(n1 + n2 + 1));
    }
  }
  return diag;
}

// Diagonal of exp(c L3) = exp(c (n1 - n2) / 2).
ComplexVector l3_exponential(int d, Complex c) {
  ComplexVector diag(static_cast<Eigen::Index>(d) * d);
  for (int n1 = 0; n1 < d; ++n1) {
    for (int n2 = 0; n2 < d; ++n2) {
      diag(n1 * d + n2) = std::exp(c * (0.5 * (n1 - n2)));
    }
  }
  return diag;
}

// Single-step maps applied to a row-stacked state with matrix-vector work only.
class StepOperator {
 public:
  StepOperator(const ModelParams& p, double t, Method method)
      : p_(p),
        t_(t),
        method_(method),
        gen_(build_generators(build_fock_ops(p.dim, p.theta))),
        coef_(eval_coefficients(p, t)) {}

  ComplexVector apply(ComplexVector v) const {
    const int d = p_.dim;
    if (method_ == Method::factorized) {
      v = nilpotent_exp_apply(gen_.l_minus, coef_.l_lower, v, d);
      v = l3_exponential(d, coef_.l_diag).cwiseProduct(v);
      v = nilpotent_exp_apply(gen_.l_plus, coef_.l_raise, v, d);
      v = apply_su11(std::move(v));
    } else {
      const Complex kappa = p_.kappa;
      v = nilpotent_exp_apply(gen_.l_minus, t_ * kappa, v, d);
      v = apply_su11(std::move(v));
      v = l3_exponential(d, Complex{0.0, -2.0 * p_.omega * t_}).cwiseProduct(v);
      v = nilpotent_exp_apply(gen_.l_plus, t_ * std::conj(kappa), v, d);
    }
    return std::exp((p_.mu - p_.nu) * t_ / 2.0) * v;
  }

 private:
  ComplexVector apply_su11(ComplexVector v) const {
    const int d = p_.dim;
    v = nilpotent_exp_apply(gen_.ktilde_minus, coef_.su11_lower, v, d);
    v = su11_middle(d, coef_.su11_norm).cwiseProduct(v);
    return nilpotent_exp_apply(gen_.ktilde_plus, coef_.su11_raise, v, d);
  }

  ModelParams p_;
  double t_;
  Method method_;
  GeneratorSet gen_;
  CoefficientSet coef_;
};

}  // namespace

PropagationResult propagate_exact(const ModelParams& p, const ComplexMatrix& rho0, double t) {
  require_state(p, rho0, t);
  if (t == 0.0) {
    return make_result(rho0, Method::exact, t);
  }
  const ComplexMatrix h = build_liouvillian(p, LiouvillianForm::form_iii, PositivityMode::permissive);
  const ComplexMatrix prop = expm(t * h);
  return make_result(apply_superop(prop, rho0), Method::exact, t);
}

ComplexMatrix su11_factor(const ModelParams& p, double t) {
  validate(p, PositivityMode::permissive);
  const GeneratorSet g = build_generators(build_fock_ops(p.dim, p.theta));
  const CoefficientSet c = eval_coefficients(p, t);
  const int d = p.dim;
  return nilpotent_exp(g.ktilde_plus, c.su11_raise, d) * su11_middle(d, c.su11_norm).asDiagonal() *
         nilpotent_exp(g.ktilde_minus, c.su11_lower, d);
}

ComplexMatrix l_factor(const ModelParams& p, double t) {
  validate(p, PositivityMode::permissive);
  const GeneratorSet g = build_generators(build_fock_ops(p.dim, p.theta));
  const CoefficientSet c = eval_coefficients(p, t);
  const int d = p.dim;
  return nilpotent_exp(g.l_plus, c.l_raise, d) * l3_exponential(d, c.l_diag).asDiagonal() *
         nilpotent_exp(g.l_minus, c.l_lower, d);
}

ComplexMatrix l_factor_split(const ModelParams& p, double t) {
  validate(p, PositivityMode::permissive);
  const FockOperatorSet ops = build_fock_ops(p.dim, p.theta);
  const GeneratorSet g = build_generators(ops);
  const CoefficientSet c = eval_coefficients(p, t);
  const int d = p.dim;
  const ComplexMatrix ad2 = ops.a_dag * ops.a_dag;
  const ComplexMatrix a2 = ops.a * ops.a;

  ComplexVector half_n(d);
  for (int n = 0; n < d; ++n) {
    half_n(n) = std::exp(c.l_diag * (0.5 * n));
  }
  const ComplexMatrix rotation =
      kron(ComplexMatrix(half_n.asDiagonal()), ComplexMatrix(half_n.cwiseInverse().asDiagonal()));

  // sandwich_superop(E, E) = E (x) E^T with E = exp(-f/2 (a+)^2).
  auto side_pair = [&](const ComplexMatrix& m, Complex coef) {
    const ComplexMatrix e = nilpotent_exp(m, -coef / 2.0, d);
    return ComplexMatrix(kron(e, e.transpose()));
  };
  return nilpotent_exp(g.j_plus, c.l_raise, d) * side_pair(ad2, c.l_raise) * rotation *
         nilpotent_exp(g.j_minus, c.l_lower, d) * side_pair(a2, c.l_lower);
}

ComplexMatrix factorized_step(const ModelParams& p, double t) {
  return std::exp((p.mu - p.nu) * t / 2.0) * su11_factor(p, t) * l_factor(p, t);
}

ComplexMatrix alternative_step(const ModelParams& p, double t) {
  validate(p, PositivityMode::permissive);
  const GeneratorSet g = build_generators(build_fock_ops(p.dim, p.theta));
  const int d = p.dim;
  const ComplexMatrix middle =
      l3_exponential(d, Complex{0.0, -2.0 * p.omega * t}).asDiagonal() * su11_factor(p, t);
  return std::exp((p.mu - p.nu) * t / 2.0) * nilpotent_exp(g.l_plus, t * std::conj(p.kappa), d) *
         middle * nilpotent_exp(g.l_minus, t * p.kappa, d);
}

PropagationResult propagate_factorized(const ModelParams& p, const ComplexMatrix& rho0, double t) {
  return stepped_propagate(p, rho0, t, 1, Method::factorized);
}

PropagationResult propagate_alternative(const ModelParams& p, const ComplexMatrix& rho0, double t) {
  return stepped_propagate(p, rho0, t, 1, Method::alternative);
}

PropagationResult stepped_propagate(const ModelParams& p, const ComplexMatrix& rho0, double t,
                                    int n_steps, Method method) {
  require_state(p, rho0, t);
  if (n_steps < 1) {
    throw std::invalid_argument("stepped_propagate: n_steps must be >= 1");
  }
  if (method != Method::factorized && method != Method::alternative) {
    throw std::invalid_argument("stepped_propagate: method must be factorized or alternative");
  }
  const StepOperator step(p, t / n_steps, method);
  ComplexVector v = vec(rho0).data;
  for (int i = 0; i < n_steps; ++i) {
    v = step.apply(std::move(v));
  }
  const Method tag = n_steps == 1 ? method : Method::stepped;
  return make_result(unvec({p.dim, v}), tag, t, n_steps);
}

namespace {

// sum_k c^k/k! left^k X right^k, terminating after `terms` powers.
ComplexMatrix outer_sum(Complex c, const ComplexMatrix& left, const ComplexMatrix& x,
                        const ComplexMatrix& right, int terms) {
  ComplexMatrix sum = x;
  if (c == Complex{0.0, 0.0}) {
    return sum;
  }
  ComplexMatrix term = x;
  for (int k = 1; k <= terms; ++k) {
    term = (left * term * right) * (c / static_cast<double>(k));
    if (term.isZero(0.0)) {
      break;
    }
    sum += term;
  }
  return sum;
}

}  // namespace

PropagationResult operator_series_solution(const ModelParams& p, const ComplexMatrix& rho0,
                                           double t) {
  require_state(p, rho0, t);
  const FockOperatorSet ops = build_fock_ops(p.dim, p.theta);
  const CoefficientSet c = eval_coefficients(p, t);
  const int d = p.dim;
  const ComplexMatrix& a = ops.a;
  const ComplexMatrix& ad = ops.a_dag;
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix ad2 = ad * ad;

  ComplexVector rot_left(d), rot_right(d), damp(d);
  const Complex log_f = std::log(c.su11_norm);
  for (int n = 0; n < d; ++n) {
    rot_left(n) = std::exp(c.l_diag * (0.5 * n));
    rot_right(n) = std::exp(-c.l_diag * (0.5 * n));
    damp(n) = std::exp(-log_f * static_cast<double>(n));
  }

  // phi(t): the L factor, innermost sum first.
  const ComplexMatrix squeeze_lower = nilpotent_exp(a2, -c.l_lower / 2.0, d);
  const ComplexMatrix squeeze_raise = nilpotent_exp(ad2, -c.l_raise / 2.0, d);
  ComplexMatrix x = squeeze_lower * rho0 * squeeze_lower;
  x = outer_sum(c.l_lower, a, x, a, d);
  x = rot_left.asDiagonal() * x * rot_right.asDiagonal();
  x = squeeze_raise * x * squeeze_raise;
  const ComplexMatrix phi = outer_sum(c.l_raise, ad, x, ad, d);

  // su(1,1) factor around phi.
  x = outer_sum(c.su11_lower, a, phi, ad, d);
  x = damp.asDiagonal() * x * damp.asDiagonal();
  x = outer_sum(c.su11_raise, ad, x, a, d);
  x *= std::exp((p.mu - p.nu) * t / 2.0) / c.su11_norm;
  return make_result(std::move(x), Method::series, t);
}

PropagationResult propagate(Method method, const ModelParams& p, const ComplexMatrix& rho0,
                            double t, int n_steps, Method step_method) {
  switch (method) {
    case Method::exact:
      return propagate_exact(p, rho0, t);
    case Method::factorized:
      return propagate_factorized(p, rho0, t);
    case Method::alternative:
      return propagate_alternative(p, rho0, t);
    case Method::series:
      return operator_series_solution(p, rho0, t);
    case Method::stepped: {
      auto r = stepped_propagate(p, rho0, t, n_steps, step_method);
      r.method = Method::stepped;
      return r;
    }
  }
  throw std::invalid_argument("propagate: unknown method");
}

}  // namespace qdho
