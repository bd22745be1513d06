#pragma once

#include <vector>

#include "hompoisson/algebra.hpp"
#include "hompoisson/checks.hpp"
#include "hompoisson/polynomial.hpp"

namespace hompoisson {

/// An element whose coordinates are polynomials in independent
/// indeterminates t1..td. An identity polynomial in x holds for every x
/// over Q exactly when it holds for the generic element.
struct GenericElement {
  std::vector<Polynomial> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  bool is_zero() const;
  friend bool operator==(const GenericElement&, const GenericElement&) = default;
};

/// x = t1 e_1 + ... + td e_d.
GenericElement generic_element(std::size_t dim);

/// Largest n and dimension accepted by the generic-element checks.
inline constexpr unsigned kMaxPowerDegree = 8;
inline constexpr std::size_t kMaxPowerDim = 8;

/// x^1 = x, x^n = x^(n-1) alpha^(n-2)(x). Throws on n = 0.
Vector hom_power(const HomAlgebra& a, const Vector& x, unsigned n);
GenericElement hom_power(const HomAlgebra& a, const GenericElement& x, unsigned n);

/// x^(i,j) = alpha^(j-1)(x^i) alpha^(i-1)(x^j).
Vector hom_power_pair(const HomAlgebra& a, const Vector& x, unsigned i, unsigned j);
GenericElement hom_power_pair(const HomAlgebra& a, const GenericElement& x, unsigned i, unsigned j);

/// x^n = x^(n-i,i) for i = 1..n-1, decided on the generic element.
/// Witness labels are {n, i}. Throws ResourceLimit past the degree guard.
CheckReport check_nth_power_assoc(const HomAlgebra& a, unsigned n);

/// x^2 alpha(x) = alpha(x) x^2 and x^4 = alpha(x^2) alpha(x^2), which for a
/// multiplicative Hom-algebra is equivalent to Hom-power associativity.
/// Throws PreconditionFailed if the algebra is not multiplicative.
CheckReport check_criterion_34(const HomAlgebra& a);

}  // namespace hompoisson
