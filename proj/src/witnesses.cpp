#include "hompoisson/witnesses.hpp"

#include <array>

#include "hompoisson/constructions.hpp"
#include "hompoisson/error.hpp"
#include "hompoisson/report.hpp"

namespace hompoisson {

namespace {

Rational get_or(const CatalogParams& params, const std::string& key, const Rational& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void only_params(const CatalogParams& params, const std::string& name, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw Error("witness '" + name + "' has no parameter '" + key + "'");
  }
}

std::size_t small_integer(const Rational& v, const std::string& what, std::size_t lo, std::size_t hi) {
  if (v.get_den() != 1 || v < Rational(static_cast<long>(lo)) || v > Rational(static_cast<long>(hi))) {
    throw Error("parameter " + what + " must be an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return v.get_num().get_ui();
}

Vector times(const HomPoissonAlgebra& p, const LinearMap& beta, const Vector& x, const Vector& y) {
  return apply(beta, contract(p.mu(), x, y));
}

std::string block_text(const Vector& x, std::size_t n) {
  std::string out = "[[";
  for (std::size_t i = 0; i < 2; ++i) {
    if (i) out += "], [";
    for (std::size_t j = 0; j < 2; ++j) {
      if (j) out += ", ";
      out += to_string(x[i * n + j]);
    }
  }
  return out + "]]";
}

std::string lambda_key(const Rational& lambda) { return "lambda=" + to_string(lambda); }

ReplayResult replay_free_poly() {
  ReplayResult r{"free-poly", true, {}, {}, {}};
  const FreePolynomialExample ex = free_polynomial_example();
  const Polynomial x = ex.alpha.images().front() - Polynomial::constant({"X"}, 1);
  for (unsigned n = 1; n <= 3; ++n) {
    r.values.emplace_back("alpha^" + std::to_string(n) + "(X)", to_string(substitute_n(ex.alpha, x, n)));
  }
  const Polynomial residual = free_poly_associator();
  r.values.emplace_back("associator(X, X, alpha(X))", to_string(residual));
  r.passed = !residual.is_zero();
  return r;
}

ReplayResult replay_matrix(const CatalogParams& params) {
  only_params(params, "matrix", {"n"});
  const std::size_t n = small_integer(get_or(params, "n", 2), "n", 2, 6);
  ReplayResult r{"matrix", true, {}, {}, {}};
  const HomPoissonAlgebra p = commutator_poisson(matrix_algebra(n));
  r.basis = p.basis();
  r.reports.push_back(check_morphism(matrix_conjugation(n), p, p, false));
  auto w = matrix_witness(n);
  r.values.emplace_back("n", std::to_string(n));
  if (!w) {
    r.values.emplace_back("X", "none found");
    r.passed = false;
    return r;
  }
  r.values.emplace_back("X", block_text(w->x, n));
  r.values.emplace_back("alpha^2(X^3)", block_text(w->lhs, n));
  r.values.emplace_back("alpha(X alpha(X) alpha^2(X))", block_text(w->rhs, n));
  r.values.emplace_back("associator(X, X, alpha(X))", format_vector(w->residual, p.basis()));
  r.passed = r.reports.front().passed && !w->residual.is_zero();
  return r;
}

ReplayResult replay_sl2(const CatalogParams& params) {
  only_params(params, "sl2", {"lambda"});
  std::vector<Rational> lambdas{2, 3, Rational(1, 2), 0, 1};
  if (auto it = params.find("lambda"); it != params.end()) lambdas = {it->second};
  ReplayResult r{"sl2", true, {}, {}, {}};
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  const Polynomial e = sl2.generator(0);
  const Polynomial h = sl2.generator(2);
  for (const auto& lambda : lambdas) {
    const Polynomial residual = sl2_associator(lambda);
    const Polynomial expected = (lambda * lambda - lambda) * (e * h * h);
    const bool zero_expected = is_zero(lambda) || lambda == 1;
    r.values.emplace_back(lambda_key(lambda), to_string(residual));
    r.passed = r.passed && residual == expected && residual.is_zero() == zero_expected;
    if (!is_zero(lambda)) {
      CheckReport morphism = check_poisson_substitution(sl2, sl2_scaling(sl2, lambda));
      morphism.identity += "[" + lambda_key(lambda) + "]";
      r.passed = r.passed && morphism.passed;
      r.reports.push_back(std::move(morphism));
    }
  }
  return r;
}

ReplayResult replay_r2n(const CatalogParams& params) {
  only_params(params, "r2n", {"n", "i", "c"});
  const std::size_t n = small_integer(get_or(params, "n", 1), "n", 1, 16);
  const std::size_t i = small_integer(get_or(params, "i", 1), "i", 1, 2 * n);
  std::vector<Rational> cs{1, Rational(3, 2), -2};
  if (auto it = params.find("c"); it != params.end()) cs = {it->second};
  ReplayResult r{"r2n", true, {}, {}, {}};
  for (const auto& ci : cs) {
    std::vector<Rational> c(2 * n);
    c[i - 1] = ci;
    const ManifoldNonrigidity m = r2n_witness(c, i);
    const std::string key = "c" + std::to_string(i) + "=" + to_string(ci);
    r.values.emplace_back(key + " f(phi^2(0))", to_string(m.trace_term));
    r.values.emplace_back(key + " determinant", to_string(m.determinant));
    r.values.emplace_back(key + " nonrigid", m.nonrigid ? "true" : "false");
    r.passed = r.passed && m.trace_term == 2 * ci && m.determinant == ci * ci && m.nonrigid == !is_zero(ci);
  }
  return r;
}

void add_heisenberg(ReplayResult& r, const HeisenbergReplay& h) {
  const std::string& k = h.algebra;
  r.values.emplace_back(k + " morphisms", std::to_string(h.morphisms));
  r.values.emplace_back(k + " trivial", std::to_string(h.trivial));
  r.values.emplace_back(k + " isomorphic", std::to_string(h.isomorphic));
  r.values.emplace_back(k + " other", std::to_string(h.other));
  r.values.emplace_back(k + " unverified", std::to_string(h.unverified));
  r.values.emplace_back(k + " twists checked", std::to_string(h.twists_checked));
  r.values.emplace_back(k + " twists failed", std::to_string(h.twists_failed));
  r.values.emplace_back(k + " grid mismatches", std::to_string(h.grid_mismatches) + "/" + std::to_string(h.grid_points));
  r.passed = r.passed && h.passed();
}

ReplayResult replay_heisenberg(const CatalogParams& params) {
  only_params(params, "heisenberg", {"zeta", "p32"});
  ReplayResult r{"heisenberg", true, {}, {}, {}};
  const auto grid = default_parameter_grid();
  const bool p32_only = get_or(params, "p32", 0) != 0;
  if (auto it = params.find("zeta"); it != params.end()) {
    if (p32_only) throw Error("witness 'heisenberg' takes either zeta or p32");
    add_heisenberg(r, heisenberg_replay(it->second, grid, false));
    return r;
  }
  if (!p32_only) {
    for (const Rational& zeta : {Rational(0), Rational(1), Rational(1, 2)}) {
      add_heisenberg(r, heisenberg_replay(zeta, grid, false));
    }
  }
  add_heisenberg(r, heisenberg_replay(std::nullopt, grid, false));
  return r;
}

/// The conditions a Lie morphism must meet to preserve the product.
bool satisfies_family_conditions(const std::optional<Rational>& zeta, const std::array<Rational, 4>& a) {
  const Rational &a11 = a[0], &a12 = a[1], &a21 = a[2], &a22 = a[3];
  if (!zeta) return is_zero(a12) && a11 * a22 == a11 * a11;
  if (is_zero(*zeta)) return true;
  return is_zero(a21 * a12) && is_zero(a11 * a21) && is_zero(a12 * a22);
}

}  // namespace

Polynomial free_poly_associator() {
  const FreePolynomialExample ex = free_polynomial_example();
  const Polynomial x = Polynomial::variable({"X"}, 0);
  return twisted_associator(ex.alpha, x, x, substitute(ex.alpha, x));
}

LinearMap matrix_conjugation(std::size_t n) {
  if (n < 2) throw PreconditionFailed("the matrix example needs n >= 2");
  std::vector<Rational> d(n, Rational(1));
  d[0] = Rational(1, 2);
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) diag.push_back(d[i] / d[j]);
  return LinearMap::diagonal(diag);
}

std::optional<MatrixWitness> matrix_witness(std::size_t n) {
  const HomPoissonAlgebra p = commutator_poisson(matrix_algebra(n));
  const LinearMap beta = matrix_conjugation(n);
  for (int code = 1; code < 81; ++code) {
    Vector x(n * n);
    int rest = code;
    for (std::size_t slot : {std::size_t{0}, std::size_t{1}, n, n + 1}) {
      x[slot] = rest % 3;
      rest /= 3;
    }
    const Vector bx = apply(beta, x);
    const Vector lhs = times(p, beta, times(p, beta, x, x), bx);
    const Vector rhs = times(p, beta, x, times(p, beta, x, bx));
    if (lhs != rhs) return MatrixWitness{n, beta, x, lhs, rhs, lhs - rhs};
  }
  return std::nullopt;
}

Polynomial sl2_associator(const Rational& lambda) {
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  const Substitution s = is_zero(lambda) ? Substitution({Polynomial(sl2.generators()), sl2.generator(1), sl2.generator(2)})
                                         : sl2_scaling(sl2, lambda);
  return twisted_associator(s, sl2.generator(0), sl2.generator(2), sl2.generator(2));
}

ManifoldNonrigidity r2n_witness(const std::vector<Rational>& c, std::size_t i) {
  if (c.empty() || c.size() % 2 != 0) throw PreconditionFailed("translation constants need 2n entries");
  if (i == 0 || i > c.size()) throw PreconditionFailed("coordinate index out of range");
  const SymplecticStructure sym(c.size() / 2);
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < c.size(); ++k) {
    images.push_back(sym.coordinate(k) + Polynomial::constant(sym.generators(), c[k]));
  }
  return manifold_nonrigidity_check(sym, Substitution(std::move(images)), sym.coordinate(i - 1), Vector(c.size()));
}

std::vector<Rational> default_parameter_grid() { return {-2, -1, 0, Rational(1, 2), 1, 2}; }

HeisenbergReplay heisenberg_replay(const std::optional<Rational>& zeta, const std::vector<Rational>& grid,
                                   bool check_twists) {
  const HomPoissonAlgebra p = zeta ? heisenberg_p31(*zeta) : heisenberg_p32();
  HeisenbergReplay out;
  out.algebra = zeta ? "P31(zeta=" + to_string(*zeta) + ")" : "P32";

  auto process = [&](const LinearMap& beta) {
    ++out.morphisms;
    if (!check_morphism(beta, p, p, false).passed) {
      ++out.unverified;
      return;
    }
    const BetaTwisting t = beta_twisting(p, beta);
    if (is_trivial_twisting(t)) {
      ++out.trivial;
    } else {
      const Rational b = beta.at(2, 2);
      LinearMap iso = LinearMap::identity(3);
      iso.at(2, 2) = b;
      if (!is_zero(b) && verify_isomorphism(iso, p, t.as_algebra()).passed) {
        ++out.isomorphic;
      } else {
        ++out.other;
      }
    }
    if (check_twists) {
      ++out.twists_checked;
      const HomPoissonAlgebra twisted = yau_twist(p, beta);
      if (!check_hom_poisson(twisted).passed || !check_multiplicative(twisted).passed) ++out.twists_failed;
    }
  };

  std::vector<std::array<Rational, 4>> points;
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid)
        for (const auto& d : grid) points.push_back({a, b, c, d});

  if (zeta && is_zero(*zeta)) {
    // Every Lie morphism preserves the zero product.
    for (const auto& q : points) process(heisenberg_morphism(q[0], q[1], q[2], q[3], 1, Rational(-1, 2)));
  } else {
    const std::vector<int> families = zeta ? std::vector<int>{1, 2, 3} : std::vector<int>{4, 5};
    for (int family : families) {
      for (const auto& q : points) {
        if (auto beta = heisenberg_family_member(family, q)) process(*beta);
      }
    }
  }

  for (const auto& q : points) {
    ++out.grid_points;
    const LinearMap m = heisenberg_morphism(q[0], q[1], q[2], q[3], Rational(1, 2), -1);
    if (check_morphism(m, p, p, false).passed != satisfies_family_conditions(zeta, q)) ++out.grid_mismatches;
  }
  return out;
}

const std::vector<std::string>& witness_names() {
  static const std::vector<std::string> names{"free-poly", "matrix", "sl2", "r2n", "heisenberg"};
  return names;
}

ReplayResult run_witness(const std::string& name, const CatalogParams& params) {
  if (name == "free-poly") {
    only_params(params, name, {});
    return replay_free_poly();
  }
  if (name == "matrix") return replay_matrix(params);
  if (name == "sl2") return replay_sl2(params);
  if (name == "r2n" || name == "symplectic") return replay_r2n(params);
  if (name == "heisenberg") return replay_heisenberg(params);
  throw Error("unknown witness '" + name + "'");
}

}  // namespace hompoisson
