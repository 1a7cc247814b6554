#include "qdho/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "qdho/numerics.hpp"

namespace qdho {

GeneratorSet build_generators(const FockOperatorSet& ops) {
  const ComplexMatrix& a = ops.a;
  const ComplexMatrix& ad = ops.a_dag;
  const ComplexMatrix& n = ops.n_op;
  const ComplexMatrix& one = ops.identity;
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix ad2 = ad * ad;

  GeneratorSet g;
  g.dim = ops.dim;
  g.ops = ops;

  g.ktilde3 = 0.5 * (kron(n, one) + kron(one, n) + kron(one, one));
  g.ktilde_plus = kron(ad, a.transpose());
  g.ktilde_minus = kron(a, ad.transpose());

  g.j3 = 0.5 * (kron(n, one) - kron(one, n));
  g.j_plus = kron(ad, ad.transpose());
  g.j_minus = kron(a, a.transpose());

  g.k3 = g.j3;
  g.k_plus = 0.5 * (kron(ad2, one) + kron(one, ad2.transpose()));
  g.k_minus = 0.5 * (kron(a2, one) + kron(one, a2.transpose()));

  g.l3 = g.j3;
  g.l_plus = g.j_plus - g.k_plus;
  g.l_minus = g.j_minus - g.k_minus;
  return g;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_square(a, "commutator");
  detail::require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix interior_projector(int dim, int margin) {
  if (dim < 1 || margin < 0 || margin >= dim) {
    throw ShapeError("interior_projector: margin " + std::to_string(margin) +
                     " outside 0.." + std::to_string(dim - 1));
  }
  const int keep = dim - margin;
  ComplexMatrix p = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (int n1 = 0; n1 < keep; ++n1) {
    for (int n2 = 0; n2 < keep; ++n2) {
      const int slot = n1 * dim + n2;
      p(slot, slot) = 1.0;
    }
  }
  return p;
}

double interior_norm(const ComplexMatrix& superop, int dim, int margin) {
  if (superop.rows() != static_cast<Eigen::Index>(dim) * dim || superop.cols() != superop.rows()) {
    throw ShapeError("interior_norm: superoperator does not match dim " + std::to_string(dim));
  }
  const int keep = dim - std::max(margin, 0);
  if (keep <= 0) {
    return 0.0;
  }
  std::vector<Eigen::Index> slots;
  slots.reserve(static_cast<std::size_t>(keep) * keep);
  for (int n1 = 0; n1 < keep; ++n1) {
    for (int n2 = 0; n2 < keep; ++n2) {
      slots.push_back(static_cast<Eigen::Index>(n1) * dim + n2);
    }
  }
  return superop(slots, slots).norm();
}

double AlgebraReport::max_residual() const {
  double worst = 0.0;
  for (const auto& id : identities) {
    worst = std::max(worst, id.residual);
  }
  return worst;
}

AlgebraReport verify_algebra(const GeneratorSet& g, int margin) {
  AlgebraReport report;
  report.dim = g.dim;
  report.margin = margin;
  report.empty_interior = margin >= g.dim;

  const ComplexMatrix& a = g.ops.a;
  const ComplexMatrix& ad = g.ops.a_dag;
  const ComplexMatrix& one = g.ops.identity;
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix ad2 = ad * ad;

  auto check = [&](std::string label, const ComplexMatrix& difference) {
    report.identities.push_back({std::move(label), interior_norm(difference, g.dim, margin)});
  };
  auto comm = [](const ComplexMatrix& x, const ComplexMatrix& y) { return commutator(x, y); };

  // su(1,1) spanned by the tilde generators
  check("[Kt3,Kt+]-Kt+", comm(g.ktilde3, g.ktilde_plus) - g.ktilde_plus);
  check("[Kt3,Kt-]+Kt-", comm(g.ktilde3, g.ktilde_minus) + g.ktilde_minus);
  check("[Kt+,Kt-]+2Kt3", comm(g.ktilde_plus, g.ktilde_minus) + 2.0 * g.ktilde3);
  // su(2)
  check("[J3,J+]-J+", comm(g.j3, g.j_plus) - g.j_plus);
  check("[J3,J-]+J-", comm(g.j3, g.j_minus) + g.j_minus);
  check("[J+,J-]-2J3", comm(g.j_plus, g.j_minus) - 2.0 * g.j3);
  // su(1,1) from the squared ladder operators
  check("[K3,K+]-K+", comm(g.k3, g.k_plus) - g.k_plus);
  check("[K3,K-]+K-", comm(g.k3, g.k_minus) + g.k_minus);
  check("[K+,K-]+2K3", comm(g.k_plus, g.k_minus) + 2.0 * g.k3);
  // L family
  check("[L3,L+]-L+", comm(g.l3, g.l_plus) - g.l_plus);
  check("[L3,L-]+L-", comm(g.l3, g.l_minus) + g.l_minus);
  check("[L+,L-]", comm(g.l_plus, g.l_minus));
  check("[J+,K+]", comm(g.j_plus, g.k_plus));
  check("[J-,K-]", comm(g.j_minus, g.k_minus));
  check("[L3,Kt3]", comm(g.l3, g.ktilde3));
  check("[L3,Kt+]", comm(g.l3, g.ktilde_plus));
  check("[L3,Kt-]", comm(g.l3, g.ktilde_minus));

  // Mixed commutators between the tilde su(1,1) and the L family, right-hand
  // sides as tabulated (not re-derived here).
  const ComplexMatrix ad2_left = kron(ad2, one);
  const ComplexMatrix ad2_right = kron(one, ad2.transpose());
  const ComplexMatrix a2_left = kron(a2, one);
  const ComplexMatrix a2_right = kron(one, a2.transpose());
  const ComplexMatrix ad_ad = kron(ad, ad.transpose());
  const ComplexMatrix a_a = kron(a, a.transpose());

  check("[Kt3,L+]+((a+)^2(x)1-1(x)((a+)^2)^T)/2",
        comm(g.ktilde3, g.l_plus) + 0.5 * (ad2_left - ad2_right));
  check("[Kt3,L-]-(a^2(x)1-1(x)(a^2)^T)/2", comm(g.ktilde3, g.l_minus) - 0.5 * (a2_left - a2_right));
  check("[Kt+,L+]-(a+(x)(a+)^T-(a+)^2(x)1)", comm(g.ktilde_plus, g.l_plus) - (ad_ad - ad2_left));
  check("[Kt+,L-]-(a(x)a^T-1(x)(a^2)^T)", comm(g.ktilde_plus, g.l_minus) - (a_a - a2_right));
  check("[Kt-,L+]-(-a+(x)(a+)^T+1(x)((a+)^2)^T)",
        comm(g.ktilde_minus, g.l_plus) - (ad2_right - ad_ad));
  check("[Kt-,L-]-(-a(x)a^T+a^2(x)1)", comm(g.ktilde_minus, g.l_minus) - (a2_left - a_a));
  return report;
}

std::string to_text(const AlgebraReport& report) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "dim = " << report.dim << '\n';
  out << "margin = " << report.margin << '\n';
  out << "interior = " << (report.empty_interior ? "empty" : "nonempty") << '\n';
  for (const auto& id : report.identities) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), id.residual, std::chars_format::scientific, 3);
    out << id.label << " = " << std::string(buf, end) << '\n';
  }
  return out.str();
}

}  // namespace qdho
