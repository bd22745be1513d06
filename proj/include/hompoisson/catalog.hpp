#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hompoisson/algebra.hpp"
#include "hompoisson/poly_poisson.hpp"

namespace hompoisson {

using CatalogParams = std::map<std::string, Rational>;

struct CatalogParam {
  std::string name;
  Rational default_value;
};

struct CatalogEntry {
  std::string name;
  std::vector<CatalogParam> params;
  std::string description;
};

/// The polynomial algebra Q[X] with the substitution X -> 1 + X.
struct FreePolynomialExample {
  Substitution alpha;
};

using CatalogObject = std::variant<HomPoissonAlgebra, LiePoissonStructure, SymplecticStructure, FreePolynomialExample>;

const std::vector<CatalogEntry>& catalog_entries();

/// Builds a named example and re-verifies the identities it promises.
/// Throws Error for unknown names or invalid parameters.
CatalogObject build_catalog(const std::string& name, const CatalogParams& params = {});
/// build_catalog restricted to finite-dimensional entries.
HomPoissonAlgebra build_catalog_algebra(const std::string& name, const CatalogParams& params = {});

// Direct builders.

/// Heisenberg Lie algebra [X,Y] = Z with commutative product XY = YX = zeta Z.
HomPoissonAlgebra heisenberg_p31(const Rational& zeta);
/// Heisenberg Lie algebra with X^2 = Z.
HomPoissonAlgebra heisenberg_p32();
/// M_n(Q) with basis E_ij at index i*n + j (zero-based).
HomAlgebra matrix_algebra(std::size_t n);
/// 1-dimensional unital algebra u*u = u with zero bracket.
HomPoissonAlgebra unit_algebra();
/// sl2 with basis e, f, h and [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LiePoissonStructure sl2_lie_poisson();
/// e -> lambda e, f -> f / lambda, h -> h. Lambda = 0 is rejected.
Substitution sl2_scaling(const LiePoissonStructure& sl2, const Rational& lambda);
FreePolynomialExample free_polynomial_example();

/// Heisenberg Lie-algebra morphism: alpha(X) = a11 X + a21 Y + a31 Z,
/// alpha(Y) = a12 X + a22 Y + a32 Z, alpha(Z) = (a11 a22 - a21 a12) Z.
LinearMap heisenberg_morphism(const Rational& a11, const Rational& a12, const Rational& a21, const Rational& a22,
                              const Rational& a31, const Rational& a32);

/// The five morphism families of the Heisenberg Poisson algebras, each
/// with four free parameters:
///   1: (a11, a22, a31, a32), a12 = a21 = 0
///   2: (a11, a12, a31, a32), a21 = a22 = 0, a12 != 0
///   3: (a21, a22, a31, a32), a11 = a12 = 0, a21 != 0
///   4: (a21, a22, a31, a32), a11 = a12 = 0           (on X^2 = Z)
///   5: (a11, a21, a31, a32), a12 = 0, a22 = a11 != 0 (on X^2 = Z)
/// Returns nullopt when the parameters break the family's nonzero condition.
std::optional<LinearMap> heisenberg_family_member(int family, const std::array<Rational, 4>& params);

}  // namespace hompoisson
