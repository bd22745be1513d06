#pragma once

#include <string>
#include <vector>

#include "hompoisson/linalg.hpp"

namespace hompoisson {

/// Default labels e1..en.
std::vector<std::string> default_basis(std::size_t dim);

/// A vector space with one bilinear product and a twisting map.
class HomAlgebra {
 public:
  HomAlgebra(std::vector<std::string> basis, Trilinear mu, LinearMap alpha);
  /// Untwisted algebra: alpha is the identity.
  HomAlgebra(std::vector<std::string> basis, Trilinear mu);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const Trilinear& mu() const noexcept { return mu_; }
  const LinearMap& alpha() const noexcept { return alpha_; }

  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;

 private:
  std::vector<std::string> basis_;
  Trilinear mu_;
  LinearMap alpha_;
};

/// Bracket, product and twisting map. `commutative` is a claim about mu
/// that check_hom_poisson verifies; it is not enforced here, so both the
/// commutative and non-commutative cases share this type.
class HomPoissonAlgebra {
 public:
  HomPoissonAlgebra(std::vector<std::string> basis, Trilinear bracket, Trilinear mu, LinearMap alpha,
                    bool commutative);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const Trilinear& bracket() const noexcept { return bracket_; }
  const Trilinear& mu() const noexcept { return mu_; }
  const LinearMap& alpha() const noexcept { return alpha_; }
  bool commutative() const noexcept { return commutative_; }

  /// The Hom-algebra (A, mu, alpha), forgetting the bracket.
  HomAlgebra product_algebra() const { return HomAlgebra(basis_, mu_, alpha_); }
  /// The Hom-algebra (A, {,}, alpha), forgetting the product.
  HomAlgebra bracket_algebra() const { return HomAlgebra(basis_, bracket_, alpha_); }

  friend bool operator==(const HomPoissonAlgebra&, const HomPoissonAlgebra&) = default;

 private:
  std::vector<std::string> basis_;
  Trilinear bracket_;
  Trilinear mu_;
  LinearMap alpha_;
  bool commutative_;
};

}  // namespace hompoisson
