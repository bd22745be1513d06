#include "hompoisson/poly_poisson.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

std::uint32_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::uint32_t{0}); }

Polynomial monomial_polynomial(const std::vector<std::string>& gens, const Monomial& m) {
  Polynomial p(gens);
  p.add_term(m, Rational(1));
  return p;
}

std::string monomial_name(const std::vector<std::string>& gens, const Monomial& m) {
  if (total_degree(m) == 0) return "1";
  return to_string(monomial_polynomial(gens, m));
}

CheckReport check_generator_pairs(std::string name, std::size_t n, const Substitution& s,
                                  const std::function<Polynomial(const Polynomial&, const Polynomial&)>& bracket,
                                  const std::vector<std::string>& gens) {
  CheckReport report(std::move(name));
  for (std::size_t i = 0; i < n && !report.full(); ++i)
    for (std::size_t j = 0; j < n && !report.full(); ++j) {
      const Polynomial ei = Polynomial::variable(gens, i);
      const Polynomial ej = Polynomial::variable(gens, j);
      Polynomial residual = substitute(s, bracket(ei, ej)) - bracket(s.images()[i], s.images()[j]);
      if (!residual.is_zero()) report.add_witness({{i, j}, Vector(), {std::move(residual)}});
    }
  return report;
}

}  // namespace

// ---------------------------------------------------------------- structures

LiePoissonStructure::LiePoissonStructure(std::vector<std::string> generators, Trilinear constants)
    : generators_(std::move(generators)), constants_(std::move(constants)) {
  if (constants_.dim() != generators_.size()) {
    throw DimensionMismatch("LiePoissonStructure", generators_.size(), constants_.dim());
  }
  const HomAlgebra lie(generators_, constants_);
  if (!check_antisymmetry(constants_).passed) throw PreconditionFailed("Lie structure constants are not antisymmetric");
  if (!check_hom_jacobi(lie).passed) throw PreconditionFailed("Lie structure constants violate the Jacobi identity");
}

Polynomial LiePoissonStructure::generator(const std::string& name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw Error("unknown generator '" + name + "'");
  return generator(static_cast<std::size_t>(it - generators_.begin()));
}

SymplecticStructure::SymplecticStructure(std::size_t n) : n_(n) {
  if (n == 0) throw PreconditionFailed("symplectic half-dimension must be at least 1");
  for (std::size_t i = 1; i <= 2 * n; ++i) generators_.push_back("x" + std::to_string(i));
}

Substitution::Substitution(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("substitution needs at least one generator");
  const auto& gens = images_.front().generators();
  if (gens.size() != images_.size()) throw DimensionMismatch("substitution images", gens.size(), images_.size());
  for (const auto& img : images_) {
    if (img.generators() != gens) throw Error("substitution images use different generators");
  }
}

Substitution Substitution::identity(const std::vector<std::string>& generators) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < generators.size(); ++i) images.push_back(Polynomial::variable(generators, i));
  return Substitution(std::move(images));
}

bool Substitution::is_affine() const {
  return std::all_of(images_.begin(), images_.end(), [](const Polynomial& p) { return p.degree() <= 1; });
}

bool Substitution::is_linear() const {
  const Monomial one(images_.size(), 0);
  return is_affine() && std::all_of(images_.begin(), images_.end(),
                                    [&](const Polynomial& p) { return is_zero(p.coefficient(one)); });
}

// ---------------------------------------------------------------- operations

Polynomial substitute(const Substitution& s, const Polynomial& f) {
  if (f.generators() != s.generators()) throw Error("substitute: generator mismatch");
  Polynomial out(f.generators());
  // Powers of each image, built on demand.
  std::vector<std::vector<Polynomial>> powers(s.images().size());
  auto image_power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(f.generators(), Rational(1)));
    while (cache.size() <= e) cache.push_back(poly_mul(cache.back(), s.images()[i]));
    return cache[e];
  };
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(f.generators(), c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term = poly_mul(term, image_power(i, m[i]));
    }
    out += term;
  }
  return out;
}

Polynomial substitute_n(const Substitution& s, const Polynomial& f, unsigned n) {
  Polynomial out = f;
  for (unsigned i = 0; i < n; ++i) out = substitute(s, out);
  return out;
}

Polynomial lie_poisson_bracket(const LiePoissonStructure& l, const Polynomial& f, const Polynomial& g) {
  if (f.generators() != l.generators() || g.generators() != l.generators()) {
    throw Error("lie_poisson_bracket: generator mismatch");
  }
  const std::size_t n = l.size();
  std::vector<Polynomial> df;
  std::vector<Polynomial> dg;
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(poly_diff(f, i));
    dg.push_back(poly_diff(g, i));
  }
  const Rational half(1, 2);
  Polynomial out(l.generators());
  l.constants().for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    Polynomial cross = poly_mul(df[i], dg[j]) - poly_mul(df[j], dg[i]);
    if (cross.is_zero()) return;
    out += (half * c) * poly_mul(l.generator(k), cross);
  });
  return out;
}

Polynomial symplectic_bracket(const SymplecticStructure& s, const Polynomial& f, const Polynomial& g) {
  if (f.generators() != s.generators() || g.generators() != s.generators()) {
    throw Error("symplectic_bracket: generator mismatch");
  }
  const std::size_t n = s.half_dim();
  Polynomial out(s.generators());
  for (std::size_t i = 0; i < n; ++i) {
    out += poly_mul(poly_diff(f, i), poly_diff(g, i + n));
    out -= poly_mul(poly_diff(f, i + n), poly_diff(g, i));
  }
  return out;
}

CheckReport check_poisson_substitution(const LiePoissonStructure& l, const Substitution& s) {
  if (s.generators() != l.generators()) throw Error("check_poisson_substitution: generator mismatch");
  if (!s.is_linear()) {
    throw PreconditionFailed("check_poisson_substitution: images must be linear in the generators");
  }
  return check_generator_pairs(
      "poisson-substitution", l.size(), s,
      [&](const Polynomial& a, const Polynomial& b) { return lie_poisson_bracket(l, a, b); }, l.generators());
}

CheckReport check_symplectic_substitution(const SymplecticStructure& sym, const Substitution& s) {
  if (s.generators() != sym.generators()) throw Error("check_symplectic_substitution: generator mismatch");
  if (!s.is_affine()) {
    throw PreconditionFailed("check_symplectic_substitution: images must have degree at most 1");
  }
  return check_generator_pairs(
      "symplectic-substitution", sym.generators().size(), s,
      [&](const Polynomial& a, const Polynomial& b) { return symplectic_bracket(sym, a, b); }, sym.generators());
}

Polynomial twisted_associator(const Substitution& s, const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  auto mu_s = [&](const Polynomial& a, const Polynomial& b) { return substitute(s, poly_mul(a, b)); };
  return mu_s(mu_s(f, g), h) - mu_s(f, mu_s(g, h));
}

Vector iterate_point(const Substitution& phi, const Vector& point, unsigned k) {
  Vector p = point;
  for (unsigned step = 0; step < k; ++step) {
    Vector next(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) next[i] = phi.images()[i].evaluate(p);
    p = std::move(next);
  }
  return p;
}

ManifoldNonrigidity manifold_nonrigidity_check(const SymplecticStructure& sym, const Substitution& phi,
                                               const Polynomial& f, const Vector& point) {
  if (!check_symplectic_substitution(sym, phi).passed) {
    throw PreconditionFailed("manifold_nonrigidity_check: phi is not a Poisson map");
  }
  ManifoldNonrigidity out;
  out.f_phi1 = f.evaluate(iterate_point(phi, point, 1));
  out.f_phi2 = f.evaluate(iterate_point(phi, point, 2));
  out.f_phi3 = f.evaluate(iterate_point(phi, point, 3));
  out.trace_term = out.f_phi2;
  out.determinant = out.f_phi2 * out.f_phi2 - out.f_phi1 * out.f_phi3;
  out.nonrigid = !is_zero(out.trace_term) && !is_zero(out.determinant);
  return out;
}

// ---------------------------------------------------------------- truncation

std::vector<Monomial> truncated_monomials(std::size_t generators, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::vector<Monomial> level;
    Monomial m(generators, 0);
    // Enumerate exponent vectors of total degree d.
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t pos, unsigned left) {
      if (pos + 1 == generators) {
        m[pos] = left;
        level.push_back(m);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        m[pos] = e;
        fill(pos + 1, left - e);
      }
    };
    if (generators == 0) break;
    fill(0, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

struct TruncatedBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;

  TruncatedBasis(std::size_t generators, unsigned max_degree)
      : monomials(truncated_monomials(generators, max_degree)) {
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }

  /// Coordinates of p, dropping monomials above the truncation degree.
  Vector coordinates(const Polynomial& p) const {
    Vector v(monomials.size());
    for (const auto& [m, c] : p.terms()) {
      if (auto it = index.find(m); it != index.end()) v[it->second] = c;
    }
    return v;
  }
};

}  // namespace

HomPoissonAlgebra truncated_lie_poisson(const LiePoissonStructure& l, unsigned max_degree) {
  const TruncatedBasis basis(l.size(), max_degree);
  const std::size_t n = basis.monomials.size();
  std::vector<Polynomial> elems;
  std::vector<std::string> names;
  for (const auto& m : basis.monomials) {
    elems.push_back(monomial_polynomial(l.generators(), m));
    names.push_back(monomial_name(l.generators(), m));
  }
  Trilinear mu(n);
  Trilinear bracket(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = basis.coordinates(poly_mul(elems[i], elems[j]));
      const Vector br = basis.coordinates(lie_poisson_bracket(l, elems[i], elems[j]));
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(prod[k])) mu.set(i, j, k, prod[k]);
        if (!is_zero(br[k])) bracket.set(i, j, k, br[k]);
      }
    }
  return HomPoissonAlgebra(std::move(names), std::move(bracket), std::move(mu), LinearMap::identity(n), true);
}

LinearMap truncated_substitution_map(const LiePoissonStructure& l, const Substitution& s, unsigned max_degree) {
  if (s.generators() != l.generators()) throw Error("truncated_substitution_map: generator mismatch");
  if (!s.is_linear()) throw PreconditionFailed("truncated_substitution_map: substitution must be linear");
  const TruncatedBasis basis(l.size(), max_degree);
  std::vector<Vector> columns;
  for (const auto& m : basis.monomials) {
    columns.push_back(basis.coordinates(substitute(s, monomial_polynomial(l.generators(), m))));
  }
  return LinearMap::from_columns(columns);
}

}  // namespace hompoisson
