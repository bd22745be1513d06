#pragma once

#include <string>
#include <vector>

#include "hompoisson/algebra.hpp"
#include "hompoisson/linalg.hpp"
#include "hompoisson/polynomial.hpp"

namespace hompoisson {

/// A basis tuple on which an identity failed, with its nonzero residual.
struct Witness {
  std::vector<std::size_t> basis;  // zero-based basis indices (or other integer labels)
  Vector residual;
  std::vector<Polynomial> symbolic_residual;  // set by generic-element checks only
};

/// Outcome of one identity check. `passed` holds exactly when `witnesses`
/// is empty; aggregate checks also carry their sub-reports in `parts`.
struct CheckReport {
  static constexpr std::size_t kMaxWitnesses = 10;

  std::string identity;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::vector<CheckReport> parts;

  explicit CheckReport(std::string name = {}) : identity(std::move(name)) {}

  bool full() const noexcept { return witnesses.size() >= kMaxWitnesses; }
  void add_witness(Witness w);
  /// Appends a sub-report and copies its witnesses (up to the limit).
  void add_part(CheckReport part);
  /// Depth-first lookup by identity name; nullptr when absent.
  const CheckReport* find(const std::string& name) const;
};

// Element-level operations. The `op`/`alpha` overloads are the kernels;
// the algebra overloads pick the operation the identity is about.

/// (xy)alpha(z) - alpha(x)(yz)
Vector hom_associator(const Trilinear& mu, const LinearMap& alpha, const Vector& x, const Vector& y, const Vector& z);
Vector hom_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
Vector hom_associator(const HomPoissonAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

/// (xy)alpha(z) + (zx)alpha(y) + (yz)alpha(x)
Vector hom_jacobian(const Trilinear& op, const LinearMap& alpha, const Vector& x, const Vector& y, const Vector& z);
Vector hom_jacobian(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
/// Uses the bracket.
Vector hom_jacobian(const HomPoissonAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

/// as(x,y,z) + as(z,x,y) + as(y,z,x)
Vector cyclic_associator_sum(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

/// {alpha(x), yz} - {x,y}alpha(z) - alpha(y){x,z}
Vector hom_leibniz_defect(const HomPoissonAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

// Identity checks. Each identity is multilinear, so it is decided on basis
// tuples, visited in lexicographic order; at most kMaxWitnesses are kept.

CheckReport check_hom_associative(const HomAlgebra& a);
CheckReport check_hom_associative(const HomPoissonAlgebra& a);
CheckReport check_antisymmetry(const Trilinear& op, const std::string& name = "antisymmetry");
CheckReport check_antisymmetry(const HomPoissonAlgebra& a);
CheckReport check_commutative(const Trilinear& op, const std::string& name = "commutativity");
CheckReport check_hom_jacobi(const HomAlgebra& a);
CheckReport check_hom_jacobi(const HomPoissonAlgebra& a);
CheckReport check_hom_leibniz(const HomPoissonAlgebra& a);
CheckReport check_multiplicative(const HomAlgebra& a);
CheckReport check_multiplicative(const HomPoissonAlgebra& a);
/// f: A -> B intertwines the operations; unless `weak`, also f alpha_A = alpha_B f.
CheckReport check_morphism(const LinearMap& f, const HomAlgebra& a, const HomAlgebra& b, bool weak);
CheckReport check_morphism(const LinearMap& f, const HomPoissonAlgebra& a, const HomPoissonAlgebra& b, bool weak);
/// Antisymmetry, Hom-Jacobi, Hom-associativity, Hom-Leibniz, plus product
/// commutativity when the algebra claims it.
CheckReport check_hom_poisson(const HomPoissonAlgebra& a);

}  // namespace hompoisson
