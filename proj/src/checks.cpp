#include "hompoisson/checks.hpp"

#include <functional>

#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

void require_dim(const char* what, std::size_t expected, std::size_t got) {
  if (expected != got) throw DimensionMismatch(what, expected, got);
}

/// op(e_i, e_j) for all i, j.
using ProductTable = std::vector<std::vector<Vector>>;

ProductTable product_table(const Trilinear& op) {
  ProductTable table(op.dim(), std::vector<Vector>(op.dim()));
  for (std::size_t i = 0; i < op.dim(); ++i)
    for (std::size_t j = 0; j < op.dim(); ++j) table[i][j] = op.product(i, j);
  return table;
}

std::vector<Vector> images(const LinearMap& m) {
  std::vector<Vector> cols;
  cols.reserve(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) cols.push_back(m.column(j));
  return cols;
}

/// Runs `residual` on every basis triple until the witness limit is hit.
CheckReport check_triples(std::string name, std::size_t dim,
                          const std::function<Vector(std::size_t, std::size_t, std::size_t)>& residual) {
  CheckReport report(std::move(name));
  for (std::size_t i = 0; i < dim && !report.full(); ++i)
    for (std::size_t j = 0; j < dim && !report.full(); ++j)
      for (std::size_t k = 0; k < dim && !report.full(); ++k) {
        Vector r = residual(i, j, k);
        if (!r.is_zero()) report.add_witness({{i, j, k}, std::move(r), {}});
      }
  return report;
}

CheckReport check_pairs(std::string name, std::size_t dim,
                        const std::function<Vector(std::size_t, std::size_t)>& residual) {
  CheckReport report(std::move(name));
  for (std::size_t i = 0; i < dim && !report.full(); ++i)
    for (std::size_t j = 0; j < dim && !report.full(); ++j) {
      Vector r = residual(i, j);
      if (!r.is_zero()) report.add_witness({{i, j}, std::move(r), {}});
    }
  return report;
}

CheckReport check_hom_associative_impl(const Trilinear& mu, const LinearMap& alpha) {
  const auto prod = product_table(mu);
  const auto a = images(alpha);
  return check_triples("hom-associativity", mu.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return contract(mu, prod[i][j], a[k]) - contract(mu, a[i], prod[j][k]);
  });
}

CheckReport check_hom_jacobi_impl(const Trilinear& op, const LinearMap& alpha) {
  const auto prod = product_table(op);
  const auto a = images(alpha);
  return check_triples("hom-jacobi", op.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return contract(op, prod[i][j], a[k]) + contract(op, prod[k][i], a[j]) + contract(op, prod[j][k], a[i]);
  });
}

/// f op_A(e_i, e_j) - op_B(f e_i, f e_j)
CheckReport check_intertwines(std::string name, const LinearMap& f, const Trilinear& op_a, const Trilinear& op_b) {
  const auto fe = images(f);
  return check_pairs(std::move(name), op_a.dim(), [&](std::size_t i, std::size_t j) {
    return apply(f, op_a.product(i, j)) - contract(op_b, fe[i], fe[j]);
  });
}

}  // namespace

void CheckReport::add_witness(Witness w) {
  passed = false;
  if (!full()) witnesses.push_back(std::move(w));
}

void CheckReport::add_part(CheckReport part) {
  for (const auto& w : part.witnesses) {
    if (full()) break;
    witnesses.push_back(w);
  }
  if (!part.passed) passed = false;
  parts.push_back(std::move(part));
}

const CheckReport* CheckReport::find(const std::string& name) const {
  if (identity == name) return this;
  for (const auto& p : parts) {
    if (const auto* found = p.find(name)) return found;
  }
  return nullptr;
}

// ---------------------------------------------------------------- element level

Vector hom_associator(const Trilinear& mu, const LinearMap& alpha, const Vector& x, const Vector& y, const Vector& z) {
  require_dim("hom_associator", mu.dim(), alpha.dim());
  return contract(mu, contract(mu, x, y), apply(alpha, z)) - contract(mu, apply(alpha, x), contract(mu, y, z));
}

Vector hom_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return hom_associator(a.mu(), a.alpha(), x, y, z);
}

Vector hom_associator(const HomPoissonAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return hom_associator(a.mu(), a.alpha(), x, y, z);
}

Vector hom_jacobian(const Trilinear& op, const LinearMap& alpha, const Vector& x, const Vector& y, const Vector& z) {
  require_dim("hom_jacobian", op.dim(), alpha.dim());
  return contract(op, contract(op, x, y), apply(alpha, z)) + contract(op, contract(op, z, x), apply(alpha, y)) +
         contract(op, contract(op, y, z), apply(alpha, x));
}

Vector hom_jacobian(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return hom_jacobian(a.mu(), a.alpha(), x, y, z);
}

Vector hom_jacobian(const HomPoissonAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return hom_jacobian(a.bracket(), a.alpha(), x, y, z);
}

Vector cyclic_associator_sum(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return hom_associator(a, x, y, z) + hom_associator(a, z, x, y) + hom_associator(a, y, z, x);
}

Vector hom_leibniz_defect(const HomPoissonAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  const auto& br = a.bracket();
  const auto& mu = a.mu();
  return contract(br, apply(a.alpha(), x), contract(mu, y, z)) - contract(mu, contract(br, x, y), apply(a.alpha(), z)) -
         contract(mu, apply(a.alpha(), y), contract(br, x, z));
}

// ---------------------------------------------------------------- checks

CheckReport check_hom_associative(const HomAlgebra& a) { return check_hom_associative_impl(a.mu(), a.alpha()); }

CheckReport check_hom_associative(const HomPoissonAlgebra& a) {
  return check_hom_associative_impl(a.mu(), a.alpha());
}

CheckReport check_antisymmetry(const Trilinear& op, const std::string& name) {
  return check_pairs(name, op.dim(), [&](std::size_t i, std::size_t j) { return op.product(i, j) + op.product(j, i); });
}

CheckReport check_antisymmetry(const HomPoissonAlgebra& a) { return check_antisymmetry(a.bracket()); }

CheckReport check_commutative(const Trilinear& op, const std::string& name) {
  return check_pairs(name, op.dim(), [&](std::size_t i, std::size_t j) { return op.product(i, j) - op.product(j, i); });
}

CheckReport check_hom_jacobi(const HomAlgebra& a) { return check_hom_jacobi_impl(a.mu(), a.alpha()); }

CheckReport check_hom_jacobi(const HomPoissonAlgebra& a) { return check_hom_jacobi_impl(a.bracket(), a.alpha()); }

CheckReport check_hom_leibniz(const HomPoissonAlgebra& a) {
  const auto& br = a.bracket();
  const auto& mu = a.mu();
  const auto prod = product_table(mu);
  const auto brk = product_table(br);
  const auto al = images(a.alpha());
  return check_triples("hom-leibniz", a.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return contract(br, al[i], prod[j][k]) - contract(mu, brk[i][j], al[k]) - contract(mu, al[j], brk[i][k]);
  });
}

CheckReport check_multiplicative(const HomAlgebra& a) {
  CheckReport report("multiplicativity");
  report.add_part(check_intertwines("multiplicativity.mu", a.alpha(), a.mu(), a.mu()));
  return report;
}

CheckReport check_multiplicative(const HomPoissonAlgebra& a) {
  CheckReport report("multiplicativity");
  report.add_part(check_intertwines("multiplicativity.mu", a.alpha(), a.mu(), a.mu()));
  report.add_part(check_intertwines("multiplicativity.bracket", a.alpha(), a.bracket(), a.bracket()));
  return report;
}

namespace {

CheckReport check_alpha_compatible(const LinearMap& f, const LinearMap& alpha_a, const LinearMap& alpha_b) {
  CheckReport report("morphism.alpha");
  const LinearMap lhs = compose(f, alpha_a);
  const LinearMap rhs = compose(alpha_b, f);
  for (std::size_t j = 0; j < f.dim() && !report.full(); ++j) {
    Vector r = lhs.column(j) - rhs.column(j);
    if (!r.is_zero()) report.add_witness({{j}, std::move(r), {}});
  }
  return report;
}

}  // namespace

CheckReport check_morphism(const LinearMap& f, const HomAlgebra& a, const HomAlgebra& b, bool weak) {
  require_dim("check_morphism", a.dim(), f.dim());
  require_dim("check_morphism", b.dim(), f.dim());
  CheckReport report(weak ? "weak-morphism" : "morphism");
  report.add_part(check_intertwines("morphism.mu", f, a.mu(), b.mu()));
  if (!weak) report.add_part(check_alpha_compatible(f, a.alpha(), b.alpha()));
  return report;
}

CheckReport check_morphism(const LinearMap& f, const HomPoissonAlgebra& a, const HomPoissonAlgebra& b, bool weak) {
  require_dim("check_morphism", a.dim(), f.dim());
  require_dim("check_morphism", b.dim(), f.dim());
  CheckReport report(weak ? "weak-morphism" : "morphism");
  report.add_part(check_intertwines("morphism.mu", f, a.mu(), b.mu()));
  report.add_part(check_intertwines("morphism.bracket", f, a.bracket(), b.bracket()));
  if (!weak) report.add_part(check_alpha_compatible(f, a.alpha(), b.alpha()));
  return report;
}

CheckReport check_hom_poisson(const HomPoissonAlgebra& a) {
  CheckReport report("hom-poisson");
  report.add_part(check_antisymmetry(a));
  report.add_part(check_hom_jacobi(a));
  report.add_part(check_hom_associative(a));
  report.add_part(check_hom_leibniz(a));
  if (a.commutative()) report.add_part(check_commutative(a.mu()));
  return report;
}

}  // namespace hompoisson
