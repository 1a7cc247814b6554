#include "qdho/liouvillian.hpp"

#include <cmath>
#include <string>

#include "qdho/algebra.hpp"
#include "qdho/fock.hpp"
#include "qdho/numerics.hpp"
#include "qdho/vectorize.hpp"

namespace qdho {

bool satisfies_positivity(const ModelParams& p) { return p.mu * p.nu >= std::norm(p.kappa); }

void validate(const ModelParams& p, PositivityMode mode) {
  if (p.dim < 2) {
    throw ShapeError("model: dim must be >= 2, got " + std::to_string(p.dim));
  }
  if (!std::isfinite(p.omega) || !std::isfinite(p.mu) || !std::isfinite(p.nu) ||
      !std::isfinite(p.kappa.real()) || !std::isfinite(p.kappa.imag()) ||
      !std::isfinite(p.theta)) {
    throw ShapeError("model: parameters must be finite");
  }
  if (p.mu < 0.0 || p.nu < 0.0) {
    throw ShapeError("model: mu and nu must be >= 0");
  }
  if (mode == PositivityMode::strict && !satisfies_positivity(p)) {
    throw PositivityError("model: mu*nu = " + std::to_string(p.mu * p.nu) + " < |kappa|^2 = " +
                          std::to_string(std::norm(p.kappa)));
  }
}

ComplexMatrix build_dissipator(const std::vector<ComplexMatrix>& jump_ops) {
  if (jump_ops.empty()) {
    return {};
  }
  const auto d = jump_ops.front().rows();
  for (const auto& op : jump_ops) {
    detail::require_square(op, "build_dissipator");
    if (op.rows() != d) {
      throw ShapeError("build_dissipator: jump operators have different dimensions");
    }
  }
  const ComplexMatrix one = ComplexMatrix::Identity(d, d);
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& op : jump_ops) {
    const ComplexMatrix ada = op.adjoint() * op;
    out += sandwich_superop(ada, one) + sandwich_superop(one, ada) -
           2.0 * sandwich_superop(op, op.adjoint());
  }
  return 0.5 * out;
}

ComplexMatrix build_lindblad_liouvillian(const ComplexMatrix& hamiltonian,
                                         const std::vector<ComplexMatrix>& jump_ops) {
  detail::require_square(hamiltonian, "build_lindblad_liouvillian");
  const ComplexMatrix one = ComplexMatrix::Identity(hamiltonian.rows(), hamiltonian.cols());
  ComplexMatrix out = -kI * (sandwich_superop(hamiltonian, one) - sandwich_superop(one, hamiltonian));
  if (!jump_ops.empty()) {
    const ComplexMatrix dissipator = build_dissipator(jump_ops);
    detail::require_same_shape(out, dissipator, "build_lindblad_liouvillian");
    out -= dissipator;
  }
  return out;
}

namespace {

ComplexMatrix form_i(const ModelParams& p, const FockOperatorSet& ops) {
  const ComplexMatrix& a = ops.a;
  const ComplexMatrix& ad = ops.a_dag;
  const ComplexMatrix& n = ops.n_op;
  const ComplexMatrix& one = ops.identity;
  const ComplexMatrix n1 = n + one;
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix ad2 = ad * ad;
  const Complex kappa = p.kappa;
  const Complex kappa_bar = std::conj(p.kappa);
  auto s = [](const ComplexMatrix& x, const ComplexMatrix& y) { return sandwich_superop(x, y); };

  ComplexMatrix h = -kI * p.omega * (s(n, one) - s(one, n));
  h -= p.mu / 2.0 * (s(n, one) + s(one, n) - 2.0 * s(a, ad));
  h -= p.nu / 2.0 * (s(n1, one) + s(one, n1) - 2.0 * s(ad, a));
  h -= kappa / 2.0 * (s(a2, one) + s(one, a2) - 2.0 * s(a, a));
  h -= kappa_bar / 2.0 * (s(ad2, one) + s(one, ad2) - 2.0 * s(ad, ad));
  return h;
}

ComplexMatrix form_ii(const ModelParams& p, const FockOperatorSet& ops) {
  const ComplexMatrix& a = ops.a;
  const ComplexMatrix& ad = ops.a_dag;
  const ComplexMatrix& n = ops.n_op;
  const ComplexMatrix& one = ops.identity;
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix ad2 = ad * ad;
  const ComplexMatrix one_one = kron(one, one);
  const ComplexMatrix n_one = kron(n, one);
  const ComplexMatrix one_n = kron(one, n);

  ComplexMatrix h = (p.mu - p.nu) / 2.0 * one_one;
  h -= (p.mu + p.nu) * (n_one + one_n + one_one) / 2.0;
  h += p.nu * kron(ad, a.transpose()) + p.mu * kron(a, ad.transpose());
  h -= 2.0 * kI * p.omega * (n_one - one_n) / 2.0;
  h += std::conj(p.kappa) *
       (kron(ad, ad.transpose()) - (kron(ad2, one) + kron(one, ad2.transpose())) / 2.0);
  h += p.kappa * (kron(a, a.transpose()) - (kron(a2, one) + kron(one, a2.transpose())) / 2.0);
  return h;
}

ComplexMatrix form_iii(const ModelParams& p, const FockOperatorSet& ops) {
  const GeneratorSet g = build_generators(ops);
  const auto d2 = static_cast<Eigen::Index>(p.dim) * p.dim;
  ComplexMatrix h = (p.mu - p.nu) / 2.0 * ComplexMatrix::Identity(d2, d2);
  h += -(p.mu + p.nu) * g.ktilde3 + p.nu * g.ktilde_plus + p.mu * g.ktilde_minus;
  h += -2.0 * kI * p.omega * g.l3 + std::conj(p.kappa) * g.l_plus + p.kappa * g.l_minus;
  return h;
}

}  // namespace

ComplexMatrix build_liouvillian(const ModelParams& p, LiouvillianForm form, PositivityMode mode) {
  validate(p, mode);
  const FockOperatorSet ops = build_fock_ops(p.dim, p.theta);
  switch (form) {
    case LiouvillianForm::form_i:
      return form_i(p, ops);
    case LiouvillianForm::form_ii:
      return form_ii(p, ops);
    case LiouvillianForm::form_iii:
      return form_iii(p, ops);
  }
  throw std::invalid_argument("build_liouvillian: unknown form");
}

double phase_equivalence_check(const ModelParams& p) {
  ModelParams absorbed = p;
  absorbed.theta = 0.0;
  absorbed.kappa = std::polar(1.0, 2.0 * p.theta) * p.kappa;
  return frobenius_distance(build_liouvillian(p, LiouvillianForm::form_i, PositivityMode::permissive),
                            build_liouvillian(absorbed, LiouvillianForm::form_i,
                                              PositivityMode::permissive));
}

}  // namespace qdho
