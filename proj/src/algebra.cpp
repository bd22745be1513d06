#include "hompoisson/algebra.hpp"

#include <set>

#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

void validate_basis(const std::vector<std::string>& basis) {
  if (basis.empty()) throw Error("algebra dimension must be positive");
  std::set<std::string> seen;
  for (const auto& name : basis) {
    if (name.empty()) throw Error("basis names must be non-empty");
    if (!seen.insert(name).second) throw Error("duplicate basis name '" + name + "'");
  }
}

}  // namespace

std::vector<std::string> default_basis(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

HomAlgebra::HomAlgebra(std::vector<std::string> basis, Trilinear mu, LinearMap alpha)
    : basis_(std::move(basis)), mu_(std::move(mu)), alpha_(std::move(alpha)) {
  validate_basis(basis_);
  if (mu_.dim() != dim()) throw DimensionMismatch("HomAlgebra product", dim(), mu_.dim());
  if (alpha_.dim() != dim()) throw DimensionMismatch("HomAlgebra twisting map", dim(), alpha_.dim());
}

HomAlgebra::HomAlgebra(std::vector<std::string> basis, Trilinear mu)
    : HomAlgebra(basis, std::move(mu), LinearMap::identity(basis.size())) {}

HomPoissonAlgebra::HomPoissonAlgebra(std::vector<std::string> basis, Trilinear bracket, Trilinear mu,
                                     LinearMap alpha, bool commutative)
    : basis_(std::move(basis)),
      bracket_(std::move(bracket)),
      mu_(std::move(mu)),
      alpha_(std::move(alpha)),
      commutative_(commutative) {
  validate_basis(basis_);
  if (bracket_.dim() != dim()) throw DimensionMismatch("HomPoissonAlgebra bracket", dim(), bracket_.dim());
  if (mu_.dim() != dim()) throw DimensionMismatch("HomPoissonAlgebra product", dim(), mu_.dim());
  if (alpha_.dim() != dim()) throw DimensionMismatch("HomPoissonAlgebra twisting map", dim(), alpha_.dim());
}

}  // namespace hompoisson
