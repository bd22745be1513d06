#include "hompoisson/catalog.hpp"

#include <algorithm>

#include "hompoisson/checks.hpp"
#include "hompoisson/constructions.hpp"
#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

const std::vector<std::string> kHeisenbergBasis{"X", "Y", "Z"};

Trilinear heisenberg_bracket() {
  Trilinear br(3);
  br.set(0, 1, 2, 1);
  br.set(1, 0, 2, -1);
  return br;
}

Rational param(const CatalogEntry& entry, const CatalogParams& params, const std::string& name) {
  if (auto it = params.find(name); it != params.end()) return it->second;
  for (const auto& p : entry.params) {
    if (p.name == name) return p.default_value;
  }
  throw Error("catalog entry '" + entry.name + "' has no parameter '" + name + "'");
}

std::size_t positive_integer(const Rational& value, const std::string& what, std::size_t max) {
  if (value.get_den() != 1 || sgn(value) <= 0 || value > Rational(static_cast<long>(max))) {
    throw Error("parameter " + what + " must be an integer in 1.." + std::to_string(max) + ", got " +
                to_string(value));
  }
  return value.get_num().get_ui();
}

const CatalogEntry& find_entry(const std::string& name) {
  const auto& entries = catalog_entries();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw Error("unknown catalog entry '" + name + "'");
  return *it;
}

void validate_params(const CatalogEntry& entry, const CatalogParams& params) {
  for (const auto& [key, value] : params) {
    bool known = std::any_of(entry.params.begin(), entry.params.end(), [&](const CatalogParam& p) { return p.name == key; });
    if (!known) throw Error("catalog entry '" + entry.name + "' has no parameter '" + key + "'");
  }
}

HomPoissonAlgebra verified(HomPoissonAlgebra a, const std::string& name) {
  if (!check_hom_poisson(a).passed) throw Error("catalog entry '" + name + "' failed its self-check");
  return a;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"heisenberg-p31", {{"zeta", Rational(1)}}, "Heisenberg bracket [X,Y] = Z with product XY = YX = zeta Z"},
      {"heisenberg-p32", {}, "Heisenberg bracket [X,Y] = Z with product X^2 = Z"},
      {"matrix", {{"n", Rational(2)}}, "commutator Poisson algebra of M_n(Q), basis E_ij"},
      {"sl2-linear-poisson", {{"degree", Rational(3)}}, "S(sl2) truncated above the given degree, linear Poisson bracket"},
      {"symplectic", {{"n", Rational(1)}}, "polynomials in x1..x2n with the canonical bracket"},
      {"free-poly", {}, "Q[X] with the substitution X -> 1 + X"},
      {"unit", {}, "1-dimensional algebra u*u = u with zero bracket"},
  };
  return entries;
}

HomPoissonAlgebra heisenberg_p31(const Rational& zeta) {
  Trilinear mu(3);
  mu.set(0, 1, 2, zeta);
  mu.set(1, 0, 2, zeta);
  return HomPoissonAlgebra(kHeisenbergBasis, heisenberg_bracket(), mu, LinearMap::identity(3), true);
}

HomPoissonAlgebra heisenberg_p32() {
  Trilinear mu(3);
  mu.set(0, 0, 2, 1);
  return HomPoissonAlgebra(kHeisenbergBasis, heisenberg_bracket(), mu, LinearMap::identity(3), true);
}

HomAlgebra matrix_algebra(std::size_t n) {
  if (n == 0) throw Error("matrix algebra needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) names.push_back("E" + std::to_string(i) + std::to_string(j));
  if (n > 9) {
    names.clear();
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
  }
  Trilinear mu(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) mu.set(i * n + j, j * n + l, i * n + l, 1);
  return HomAlgebra(std::move(names), std::move(mu));
}

HomPoissonAlgebra unit_algebra() {
  Trilinear mu(1);
  mu.set(0, 0, 0, 1);
  return HomPoissonAlgebra({"u"}, Trilinear(1), mu, LinearMap::identity(1), true);
}

LiePoissonStructure sl2_lie_poisson() {
  // e = 0, f = 1, h = 2
  Trilinear c(3);
  c.set(2, 0, 0, 2);
  c.set(0, 2, 0, -2);
  c.set(2, 1, 1, -2);
  c.set(1, 2, 1, 2);
  c.set(0, 1, 2, 1);
  c.set(1, 0, 2, -1);
  return LiePoissonStructure({"e", "f", "h"}, std::move(c));
}

Substitution sl2_scaling(const LiePoissonStructure& sl2, const Rational& lambda) {
  if (is_zero(lambda)) throw PreconditionFailed("sl2 scaling needs lambda != 0");
  Rational inv = 1 / lambda;
  return Substitution({lambda * sl2.generator(0), inv * sl2.generator(1), sl2.generator(2)});
}

FreePolynomialExample free_polynomial_example() {
  const std::vector<std::string> gens{"X"};
  return FreePolynomialExample{
      Substitution({Polynomial::constant(gens, 1) + Polynomial::variable(gens, 0)})};
}

LinearMap heisenberg_morphism(const Rational& a11, const Rational& a12, const Rational& a21, const Rational& a22,
                              const Rational& a31, const Rational& a32) {
  const Rational b = a11 * a22 - a21 * a12;
  return LinearMap::from_rows(3, {a11, a12, 0, a21, a22, 0, a31, a32, b});
}

std::optional<LinearMap> heisenberg_family_member(int family, const std::array<Rational, 4>& p) {
  const Rational zero(0);
  switch (family) {
    case 1:
      return heisenberg_morphism(p[0], zero, zero, p[1], p[2], p[3]);
    case 2:
      if (is_zero(p[1])) return std::nullopt;
      return heisenberg_morphism(p[0], p[1], zero, zero, p[2], p[3]);
    case 3:
      if (is_zero(p[0])) return std::nullopt;
      return heisenberg_morphism(zero, zero, p[0], p[1], p[2], p[3]);
    case 4:
      return heisenberg_morphism(zero, zero, p[0], p[1], p[2], p[3]);
    case 5:
      if (is_zero(p[0])) return std::nullopt;
      return heisenberg_morphism(p[0], zero, p[1], p[0], p[2], p[3]);
    default:
      throw Error("Heisenberg morphism families are numbered 1..5");
  }
}

CatalogObject build_catalog(const std::string& name, const CatalogParams& params) {
  const CatalogEntry& entry = find_entry(name);
  validate_params(entry, params);
  if (name == "heisenberg-p31") return verified(heisenberg_p31(param(entry, params, "zeta")), name);
  if (name == "heisenberg-p32") return verified(heisenberg_p32(), name);
  if (name == "matrix") {
    const std::size_t n = positive_integer(param(entry, params, "n"), "n", 6);
    return verified(commutator_poisson(matrix_algebra(n)), name);
  }
  if (name == "sl2-linear-poisson") {
    const std::size_t degree = positive_integer(param(entry, params, "degree"), "degree", 4);
    return verified(truncated_lie_poisson(sl2_lie_poisson(), static_cast<unsigned>(degree)), name);
  }
  if (name == "symplectic") {
    const std::size_t n = positive_integer(param(entry, params, "n"), "n", 16);
    SymplecticStructure s(n);
    if (!check_symplectic_substitution(s, Substitution::identity(s.generators())).passed) {
      throw Error("catalog entry 'symplectic' failed its self-check");
    }
    return s;
  }
  if (name == "free-poly") return free_polynomial_example();
  return verified(unit_algebra(), name);
}

HomPoissonAlgebra build_catalog_algebra(const std::string& name, const CatalogParams& params) {
  CatalogObject obj = build_catalog(name, params);
  if (auto* a = std::get_if<HomPoissonAlgebra>(&obj)) return std::move(*a);
  throw Error("catalog entry '" + name + "' is not finite-dimensional");
}

}  // namespace hompoisson
