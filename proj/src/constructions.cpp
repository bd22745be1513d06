#include "hompoisson/constructions.hpp"

#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

void require_identity_twist(const HomPoissonAlgebra& p, const char* what) {
  if (!p.alpha().is_identity()) throw PreconditionFailed(std::string(what) + ": twisting map must be the identity");
}

void require_passed(const CheckReport& report, const std::string& what) {
  if (!report.passed) throw PreconditionFailed(what + ": " + report.identity + " check failed");
}

/// Some nonzero vector v with m v = 0; m must be singular.
Vector kernel_vector(const LinearMap& m) {
  const std::size_t n = m.dim();
  LinearMap a = m;
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && is_zero(a.at(p, col))) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < n; ++j) swap(a.at(p, j), a.at(row, j));
    const Rational scale = 1 / a.at(row, col);
    for (std::size_t j = 0; j < n; ++j) a.at(row, j) *= scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || is_zero(a.at(r, col))) continue;
      const Rational factor = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) a.at(r, j) -= factor * a.at(row, j);
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::size_t free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  Vector v(n);
  if (free_col == n) return v;
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) v[pivot_col_of_row[r]] = -a.at(r, free_col);
  return v;
}

std::string tensor_name(const std::string& a, const std::string& b) { return a + "⊗" + b; }

/// out[(a,b),(c,d)] += left[a][c][p] * right[b][d][q] at (p,q).
void add_tensor_product(Trilinear& out, const Trilinear& left, const Trilinear& right) {
  const std::size_t n2 = right.dim();
  left.for_each_nonzero([&](std::size_t a, std::size_t c, std::size_t p, const Rational& v1) {
    right.for_each_nonzero([&](std::size_t b, std::size_t d, std::size_t q, const Rational& v2) {
      out.add(a * n2 + b, c * n2 + d, p * n2 + q, v1 * v2);
    });
  });
}

}  // namespace

HomPoissonAlgebra commutator_poisson(const HomAlgebra& a) {
  require_passed(check_hom_associative(a), "commutator_poisson");
  const bool commutative = check_commutative(a.mu()).passed;
  return HomPoissonAlgebra(a.basis(), a.mu() - a.mu().opposite(), a.mu(), a.alpha(), commutative);
}

HomPoissonAlgebra twist(const HomPoissonAlgebra& a, const LinearMap& beta, TwistOptions options) {
  if (beta.dim() != a.dim()) throw DimensionMismatch("twist", a.dim(), beta.dim());
  if (!options.force) require_passed(check_morphism(beta, a, a, /*weak=*/true), "twist");
  return HomPoissonAlgebra(a.basis(), a.bracket().then(beta), a.mu().then(beta), compose(beta, a.alpha()),
                           a.commutative());
}

HomPoissonAlgebra derived(const HomPoissonAlgebra& a, unsigned n) {
  require_passed(check_multiplicative(a), "derived");
  return twist(a, power(a.alpha(), n));
}

HomPoissonAlgebra yau_twist(const HomPoissonAlgebra& p, const LinearMap& beta) {
  require_identity_twist(p, "yau_twist");
  if (beta.dim() != p.dim()) throw DimensionMismatch("yau_twist", p.dim(), beta.dim());
  require_passed(check_morphism(beta, p, p, /*weak=*/false), "yau_twist");
  return twist(p, beta);
}

HomPoissonAlgebra BetaTwisting::as_algebra() const {
  return HomPoissonAlgebra(base.basis(), bracket, mu, LinearMap::identity(base.dim()), base.commutative());
}

BetaTwisting beta_twisting(const HomPoissonAlgebra& p, const LinearMap& beta) {
  require_identity_twist(p, "beta_twisting");
  if (beta.dim() != p.dim()) throw DimensionMismatch("beta_twisting", p.dim(), beta.dim());
  require_passed(check_morphism(beta, p, p, /*weak=*/false), "beta_twisting");
  return BetaTwisting{p, beta, p.bracket().then(beta), p.mu().then(beta)};
}

bool is_trivial_twisting(const BetaTwisting& t) { return t.bracket.is_zero() && t.mu.is_zero(); }

CheckReport verify_isomorphism(const LinearMap& f, const HomPoissonAlgebra& a, const HomPoissonAlgebra& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("verify_isomorphism", a.dim(), b.dim());
  if (f.dim() != a.dim()) throw DimensionMismatch("verify_isomorphism", a.dim(), f.dim());
  CheckReport report("isomorphism");
  LinearMap inverse;
  try {
    inverse = invert(f);
  } catch (const NotInvertible&) {
    CheckReport singular("isomorphism.invertible");
    singular.add_witness({{}, kernel_vector(f), {}});
    report.add_part(std::move(singular));
    return report;
  }
  report.add_part(CheckReport("isomorphism.invertible"));
  CheckReport forward = check_morphism(f, a, b, /*weak=*/false);
  forward.identity = "isomorphism.forward";
  report.add_part(std::move(forward));
  CheckReport backward = check_morphism(inverse, b, a, /*weak=*/false);
  backward.identity = "isomorphism.backward";
  report.add_part(std::move(backward));
  return report;
}

Vector nonrigidity_witness(const HomPoissonAlgebra& p, const LinearMap& beta, const Vector& x, const Vector& y,
                           const Vector& z, NonrigidityKind kind) {
  const LinearMap id = LinearMap::identity(p.dim());
  if (kind == NonrigidityKind::associator) return hom_associator(p.mu().then(beta), id, x, y, z);
  return hom_jacobian(p.bracket().then(beta), id, x, y, z);
}

HomPoissonAlgebra tensor(const HomPoissonAlgebra& a1, const HomPoissonAlgebra& a2) {
  for (const auto* a : {&a1, &a2}) {
    if (!a->commutative() || !check_commutative(a->mu()).passed) {
      throw PreconditionFailed("tensor: both factors must have a commutative product");
    }
  }
  const std::size_t n = a1.dim() * a2.dim();
  std::vector<std::string> basis;
  basis.reserve(n);
  for (const auto& x : a1.basis())
    for (const auto& y : a2.basis()) basis.push_back(tensor_name(x, y));

  Trilinear mu(n);
  add_tensor_product(mu, a1.mu(), a2.mu());
  Trilinear bracket(n);
  add_tensor_product(bracket, a1.bracket(), a2.mu());
  add_tensor_product(bracket, a1.mu(), a2.bracket());
  return HomPoissonAlgebra(std::move(basis), std::move(bracket), std::move(mu), kronecker(a1.alpha(), a2.alpha()),
                           true);
}

HomPoissonAlgebra polarize(const HomAlgebra& a) {
  const Rational half(1, 2);
  const Trilinear op = a.mu().opposite();
  return HomPoissonAlgebra(a.basis(), half * (a.mu() - op), half * (a.mu() + op), a.alpha(), true);
}

HomAlgebra depolarize(const HomPoissonAlgebra& a) { return HomAlgebra(a.basis(), a.bracket() + a.mu(), a.alpha()); }

CheckReport check_admissible(const HomAlgebra& a) {
  const Rational third(1, 3);
  CheckReport report("admissibility");
  const std::size_t n = a.dim();
  const auto& mu = a.mu();
  std::vector<Vector> al;
  for (std::size_t j = 0; j < n; ++j) al.push_back(a.alpha().column(j));
  for (std::size_t i = 0; i < n && !report.full(); ++i)
    for (std::size_t j = 0; j < n && !report.full(); ++j)
      for (std::size_t k = 0; k < n && !report.full(); ++k) {
        // x = e_i, y = e_j, z = e_k
        const Vector as = contract(mu, mu.product(i, j), al[k]) - contract(mu, al[i], mu.product(j, k));
        const Vector rhs = contract(mu, mu.product(i, k), al[j]) - contract(mu, mu.product(k, i), al[j]) +
                           contract(mu, mu.product(j, k), al[i]) - contract(mu, mu.product(j, i), al[k]);
        Vector r = as - third * rhs;
        if (!r.is_zero()) report.add_witness({{i, j, k}, std::move(r), {}});
      }
  return report;
}

CheckReport check_hom_flexible(const HomAlgebra& a) {
  CheckReport report("hom-flexibility");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n && !report.full(); ++i)
    for (std::size_t j = 0; j < n && !report.full(); ++j)
      for (std::size_t k = 0; k < n && !report.full(); ++k) {
        const Vector x = Vector::basis(n, i);
        const Vector y = Vector::basis(n, j);
        const Vector z = Vector::basis(n, k);
        Vector r = hom_associator(a, x, y, z) + hom_associator(a, z, y, x);
        if (!r.is_zero()) report.add_witness({{i, j, k}, std::move(r), {}});
      }
  return report;
}

}  // namespace hompoisson
