#pragma once

#include <string>
#include <vector>

#include "qdho/fock.hpp"
#include "qdho/types.hpp"

namespace qdho {

/// The four superoperator generator families acting on row-stacked d x d
/// matrices. Kronecker factors follow vec(A X B) = (A (x) B^T) vec(X).
///
///   su(1,1):  Kt3 = (N(x)1 + 1(x)N + 1(x)1)/2, Kt+ = a+(x)a^T,  Kt- = a(x)(a+)^T
///   su(2):    J3  = (N(x)1 - 1(x)N)/2,        J+  = a+(x)(a+)^T, J- = a(x)a^T
///   su(1,1):  K3  = J3,  K+ = ((a+)^2(x)1 + 1(x)((a+)^2)^T)/2,  K- likewise with a^2
///   L:        L3  = J3,  L+ = J+ - K+,  L- = J- - K-   ([L+, L-] = 0)
struct GeneratorSet {
  int dim = 0;
  FockOperatorSet ops;
  ComplexMatrix ktilde3, ktilde_plus, ktilde_minus;
  ComplexMatrix j3, j_plus, j_minus;
  ComplexMatrix k3, k_plus, k_minus;
  ComplexMatrix l3, l_plus, l_minus;
};

GeneratorSet build_generators(const FockOperatorSet& ops);

/// AB - BA
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Diagonal projector onto the row-stack slots (n1, n2) with
/// n1, n2 <= dim-1-margin.
ComplexMatrix interior_projector(int dim, int margin);

/// ||P M P||_F for P = interior_projector(dim, margin), without forming P.
/// A margin >= dim selects nothing and yields 0.
double interior_norm(const ComplexMatrix& superop, int dim, int margin);

struct IdentityResidual {
  std::string label;
  double residual = 0.0;
};

struct AlgebraReport {
  int dim = 0;
  int margin = 0;
  bool empty_interior = false;
  std::vector<IdentityResidual> identities;

  double max_residual() const;
};

inline constexpr int kDefaultAlgebraMargin = 2;

/// Checks every commutation relation among the generator families, each as
/// an interior-projected Frobenius residual ||P (lhs - rhs) P||.
AlgebraReport verify_algebra(const GeneratorSet& gen, int margin = kDefaultAlgebraMargin);

/// "label = residual" lines, one per identity, preceded by a header block.
std::string to_text(const AlgebraReport& report);

}  // namespace qdho
