#pragma once

#include <string>
#include <vector>

#include "hompoisson/algebra.hpp"
#include "hompoisson/checks.hpp"
#include "hompoisson/polynomial.hpp"

namespace hompoisson {

/// Linear Poisson structure on the polynomial algebra over a Lie algebra
/// with basis e_1..e_n and brackets [e_i, e_j] = sum_k c_ij^k e_k.
class LiePoissonStructure {
 public:
  /// Throws PreconditionFailed unless `constants` is antisymmetric and
  /// satisfies the Jacobi identity.
  LiePoissonStructure(std::vector<std::string> generators, Trilinear constants);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const Trilinear& constants() const noexcept { return constants_; }

  Polynomial generator(std::size_t i) const { return Polynomial::variable(generators_, i); }
  Polynomial generator(const std::string& name) const;

 private:
  std::vector<std::string> generators_;
  Trilinear constants_;
};

/// Canonical bracket on polynomials in x_1..x_2n.
class SymplecticStructure {
 public:
  explicit SymplecticStructure(std::size_t n);

  std::size_t half_dim() const noexcept { return n_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  Polynomial coordinate(std::size_t i) const { return Polynomial::variable(generators_, i); }

 private:
  std::size_t n_;
  std::vector<std::string> generators_;
};

/// Algebra endomorphism of a polynomial algebra given by the images of the
/// generators.
class Substitution {
 public:
  explicit Substitution(std::vector<Polynomial> images);
  static Substitution identity(const std::vector<std::string>& generators);

  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const std::vector<std::string>& generators() const { return images_.front().generators(); }
  /// Every image has degree <= 1 and no constant term.
  bool is_linear() const;
  /// Every image has degree <= 1.
  bool is_affine() const;

 private:
  std::vector<Polynomial> images_;
};

/// F(s(x_1), ..., s(x_n)); an algebra morphism.
Polynomial substitute(const Substitution& s, const Polynomial& f);
/// s applied n times.
Polynomial substitute_n(const Substitution& s, const Polynomial& f, unsigned n);

/// {F,G} = 1/2 sum_{i,j,k} c_ij^k e_k (dF/de_i dG/de_j - dF/de_j dG/de_i), evaluated literally.
Polynomial lie_poisson_bracket(const LiePoissonStructure& l, const Polynomial& f, const Polynomial& g);

/// {f,g} = sum_i (df/dx_i dg/dx_{i+n} - df/dx_{i+n} dg/dx_i).
Polynomial symplectic_bracket(const SymplecticStructure& s, const Polynomial& f, const Polynomial& g);

/// s{e_i, e_j} = {s(e_i), s(e_j)} for all generator pairs. By the Leibniz
/// rule this certifies s as a Poisson morphism. Throws PreconditionFailed
/// for non-linear images.
CheckReport check_poisson_substitution(const LiePoissonStructure& l, const Substitution& s);
/// Same generator-pair check for the canonical bracket; affine images allowed.
CheckReport check_symplectic_substitution(const SymplecticStructure& sym, const Substitution& s);

/// Associator of mu_s(F, G) = s(FG) at (F, G, H):
/// mu_s(mu_s(F,G), H) - mu_s(F, mu_s(G,H)). Callers pass the triple
/// exactly as the example displays it, e.g. (X, X, s(X)).
Polynomial twisted_associator(const Substitution& s, const Polynomial& f, const Polynomial& g, const Polynomial& h);

/// Values f(phi(x)), f(phi^2(x)), f(phi^3(x)) for a Poisson map phi given
/// by its pullback substitution, and the two non-rigidity conditions.
struct ManifoldNonrigidity {
  Rational f_phi1;
  Rational f_phi2;
  Rational f_phi3;
  Rational trace_term;   // f(phi^2(x))
  Rational determinant;  // f(phi^2(x))^2 - f(phi(x)) f(phi^3(x))
  bool nonrigid = false;
};

/// phi^k(point) for the map whose coordinate functions are s's images.
Vector iterate_point(const Substitution& phi, const Vector& point, unsigned k);

/// Throws PreconditionFailed if phi fails check_symplectic_substitution.
ManifoldNonrigidity manifold_nonrigidity_check(const SymplecticStructure& sym, const Substitution& phi,
                                               const Polynomial& f, const Vector& point);

/// Monomials of total degree 0..max_degree: the constant first, then by
/// increasing degree, lexicographically within a degree.
std::vector<Monomial> truncated_monomials(std::size_t generators, unsigned max_degree);

/// The finite-dimensional Poisson algebra S(g) / S^{>max_degree}(g): the
/// monomials of degree > max_degree span an ideal for both the product and
/// the linear Poisson bracket, so the quotient inherits both operations.
HomPoissonAlgebra truncated_lie_poisson(const LiePoissonStructure& l, unsigned max_degree);

/// Matrix of a linear substitution on the truncated basis.
LinearMap truncated_substitution_map(const LiePoissonStructure& l, const Substitution& s, unsigned max_degree);

}  // namespace hompoisson
