#pragma once

#include "hompoisson/algebra.hpp"
#include "hompoisson/checks.hpp"
#include "hompoisson/linalg.hpp"

namespace hompoisson {

/// A^- = (A, mu - mu^op, mu, alpha). Throws PreconditionFailed unless A is
/// Hom-associative.
HomPoissonAlgebra commutator_poisson(const HomAlgebra& a);

struct TwistOptions {
  /// Skip the weak-morphism precondition; for building negative examples.
  bool force = false;
};

/// A_beta = (A, beta{,}, beta mu, beta alpha) for a weak morphism beta.
HomPoissonAlgebra twist(const HomPoissonAlgebra& a, const LinearMap& beta, TwistOptions options = {});

/// A^n = (A, alpha^n{,}, alpha^n mu, alpha^(n+1)); requires A multiplicative.
HomPoissonAlgebra derived(const HomPoissonAlgebra& a, unsigned n);

/// Twisting of an untwisted algebra (alpha = Id) by a morphism beta; the
/// result (A, beta{,}, beta mu, beta) is multiplicative.
HomPoissonAlgebra yau_twist(const HomPoissonAlgebra& p, const LinearMap& beta);

/// The untwisted pair (beta{,}, beta mu) obtained from an algebra with
/// identity twisting map and one of its morphisms.
struct BetaTwisting {
  HomPoissonAlgebra base;
  LinearMap beta;
  Trilinear bracket;
  Trilinear mu;

  /// (A, beta{,}, beta mu, Id); no Hom-Poisson guarantee.
  HomPoissonAlgebra as_algebra() const;
};

BetaTwisting beta_twisting(const HomPoissonAlgebra& p, const LinearMap& beta);
bool is_trivial_twisting(const BetaTwisting& t);

/// Passes when f is invertible and f, f^-1 are morphisms A -> B, B -> A.
CheckReport verify_isomorphism(const LinearMap& f, const HomPoissonAlgebra& a, const HomPoissonAlgebra& b);

enum class NonrigidityKind { associator, jacobian };

/// Associator of beta mu (or Jacobian of beta{,}) at (x, y, z), computed
/// without twisting map. Nonzero output means the beta-twisting is neither
/// trivial nor isomorphic to the original.
Vector nonrigidity_witness(const HomPoissonAlgebra& p, const LinearMap& beta, const Vector& x, const Vector& y,
                           const Vector& z, NonrigidityKind kind = NonrigidityKind::associator);

/// Tensor product of two Hom-Poisson algebras (commutative products).
/// Basis e_i (x) f_j has index i * dim2 + j.
HomPoissonAlgebra tensor(const HomPoissonAlgebra& a1, const HomPoissonAlgebra& a2);

/// P(A) = (A, (mu - mu^op)/2, (mu + mu^op)/2, alpha).
HomPoissonAlgebra polarize(const HomAlgebra& a);
/// P^-(A) = (A, {,} + bullet, alpha).
HomAlgebra depolarize(const HomPoissonAlgebra& a);

/// as(x,y,z) = 1/3 [(xz)alpha(y) - (zx)alpha(y) + (yz)alpha(x) - (yx)alpha(z)]
CheckReport check_admissible(const HomAlgebra& a);
/// as(x,y,z) + as(z,y,x) = 0
CheckReport check_hom_flexible(const HomAlgebra& a);

}  // namespace hompoisson
