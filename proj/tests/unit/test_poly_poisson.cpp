#include <gtest/gtest.h>

#include "generators.hpp"
#include "hompoisson/catalog.hpp"
#include "hompoisson/checks.hpp"
#include "hompoisson/error.hpp"
#include "hompoisson/poly_poisson.hpp"
#include "hompoisson/witnesses.hpp"

using namespace hompoisson;

namespace {

LiePoissonStructure heisenberg_lie() {
  Trilinear c(3);
  c.set(0, 1, 2, 1);
  c.set(1, 0, 2, -1);
  return LiePoissonStructure({"X", "Y", "Z"}, c);
}

}  // namespace

TEST(LiePoisson, BracketOfGeneratorsIsLieBracket) {
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  const Polynomial e = sl2.generator("e"), f = sl2.generator("f"), h = sl2.generator("h");
  EXPECT_EQ(lie_poisson_bracket(sl2, e, f), h);
  EXPECT_EQ(lie_poisson_bracket(sl2, h, e), Rational(2) * e);
  EXPECT_EQ(lie_poisson_bracket(sl2, h, f), Rational(-2) * f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Polynomial expected(sl2.generators());
      for (std::size_t k = 0; k < 3; ++k) expected += sl2.constants().at(i, j, k) * sl2.generator(k);
      EXPECT_EQ(lie_poisson_bracket(sl2, sl2.generator(i), sl2.generator(j)), expected);
    }
  EXPECT_TRUE(lie_poisson_bracket(sl2, e * h, Polynomial::constant(sl2.generators(), 1)).is_zero());
  // {e, h^2} = 2 h {e, h} = -4 e h
  EXPECT_EQ(lie_poisson_bracket(sl2, e, h * h), Rational(-4) * e * h);
}

TEST(LiePoisson, RejectsNonLieConstants) {
  Trilinear c(2);
  c.set(0, 1, 0, 1);
  EXPECT_THROW(LiePoissonStructure({"a", "b"}, c), PreconditionFailed);
  Trilinear j(3);
  j.set(0, 1, 2, 1);
  j.set(1, 0, 2, -1);
  j.set(0, 2, 0, 1);
  j.set(2, 0, 0, -1);
  EXPECT_THROW(LiePoissonStructure({"a", "b", "c"}, j), PreconditionFailed);
}

TEST(LiePoisson, PoissonAxiomsOnRandomPolynomials) {
  hptest::Rng rng(53);
  for (const LiePoissonStructure& l : {sl2_lie_poisson(), heisenberg_lie()}) {
    for (int t = 0; t < 15; ++t) {
      const auto& g = l.generators();
      const Polynomial a = hptest::random_polynomial(rng, g, 3, 4);
      const Polynomial b = hptest::random_polynomial(rng, g, 3, 4);
      const Polynomial c = hptest::random_polynomial(rng, g, 3, 4);
      auto br = [&](const Polynomial& x, const Polynomial& y) { return lie_poisson_bracket(l, x, y); };
      EXPECT_EQ(br(a, b), Rational(-1) * br(b, a));
      EXPECT_TRUE((br(br(a, b), c) + br(br(c, a), b) + br(br(b, c), a)).is_zero());
      EXPECT_EQ(br(a, b * c), br(a, b) * c + b * br(a, c));
    }
  }
}

TEST(Symplectic, CanonicalRelations) {
  const SymplecticStructure s(2);
  EXPECT_EQ(s.generators(), (std::vector<std::string>{"x1", "x2", "x3", "x4"}));
  const Polynomial one = Polynomial::constant(s.generators(), 1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Polynomial b = symplectic_bracket(s, s.coordinate(i), s.coordinate(j));
      if (j == i + 2) {
        EXPECT_EQ(b, one);
      } else if (i == j + 2) {
        EXPECT_EQ(b, Rational(-1) * one);
      } else {
        EXPECT_TRUE(b.is_zero());
      }
    }
  EXPECT_THROW(SymplecticStructure(0), PreconditionFailed);
}

TEST(PoissonSubstitution, Sl2Scaling) {
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  for (const Rational& lambda : {Rational(2), Rational(-3), Rational(1, 2)})
    EXPECT_TRUE(check_poisson_substitution(sl2, sl2_scaling(sl2, lambda)).passed);
  EXPECT_THROW(sl2_scaling(sl2, 0), PreconditionFailed);
  // e <-> f sends [e, f] = h to [f, e] = -h, but fixes h.
  const Substitution swap({sl2.generator(1), sl2.generator(0), sl2.generator(2)});
  EXPECT_FALSE(check_poisson_substitution(sl2, swap).passed);
  const Substitution nonlinear({sl2.generator(0) * sl2.generator(0), sl2.generator(1), sl2.generator(2)});
  EXPECT_THROW(check_poisson_substitution(sl2, nonlinear), PreconditionFailed);
}

TEST(PoissonSubstitution, Symplectic) {
  const SymplecticStructure s(1);
  const Polynomial one = Polynomial::constant(s.generators(), 1);
  const Substitution shift({s.coordinate(0) + one, s.coordinate(1) + Rational(3) * one});
  EXPECT_TRUE(shift.is_affine());
  EXPECT_FALSE(shift.is_linear());
  EXPECT_TRUE(check_symplectic_substitution(s, shift).passed);
  const Substitution scale({Rational(2) * s.coordinate(0), s.coordinate(1)});
  EXPECT_FALSE(check_symplectic_substitution(s, scale).passed);
}

TEST(Substitution, IsAnAlgebraMorphism) {
  hptest::Rng rng(59);
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  const Substitution s = sl2_scaling(sl2, 3);
  for (int t = 0; t < 20; ++t) {
    const Polynomial a = hptest::random_polynomial(rng, sl2.generators(), 3, 4);
    const Polynomial b = hptest::random_polynomial(rng, sl2.generators(), 3, 4);
    EXPECT_EQ(substitute(s, a * b), substitute(s, a) * substitute(s, b));
    EXPECT_EQ(substitute(s, a + b), substitute(s, a) + substitute(s, b));
    // A Poisson morphism on generators is one on every polynomial.
    EXPECT_EQ(substitute(s, lie_poisson_bracket(sl2, a, b)),
              lie_poisson_bracket(sl2, substitute(s, a), substitute(s, b)));
  }
  const Polynomial e = sl2.generator(0), h = sl2.generator(2);
  EXPECT_EQ(substitute(sl2_scaling(sl2, 2), e * h), Rational(2) * e * h);
}

TEST(Substitution, FreePolyIterates) {
  const Substitution s = free_polynomial_example().alpha;
  const std::vector<std::string> g{"X"};
  const Polynomial x = Polynomial::variable(g, 0);
  for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(substitute_n(s, x, n), x + Polynomial::constant(g, n));
}

TEST(TwistedAssociator, Examples) {
  EXPECT_EQ(to_string(free_poly_associator()), "X + 2");
  EXPECT_EQ(to_string(sl2_associator(2)), "2*e*h^2");
  EXPECT_EQ(to_string(sl2_associator(3)), "6*e*h^2");
  EXPECT_EQ(to_string(sl2_associator(Rational(1, 2))), "-1/4*e*h^2");
  EXPECT_TRUE(sl2_associator(1).is_zero());
  EXPECT_TRUE(sl2_associator(0).is_zero());
}

TEST(TwistedAssociator, MatchesClosedForm) {
  // mu_s(mu_s(e,h),h) - mu_s(e, mu_s(h,h)) = (lambda^2 - lambda) e h^2
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  const Polynomial e = sl2.generator(0), h = sl2.generator(2);
  for (int num = -4; num <= 4; ++num) {
    if (num == 0) continue;
    const Rational lambda(num, 3);
    EXPECT_EQ(sl2_associator(lambda), (lambda * lambda - lambda) * e * h * h);
  }
}

TEST(TwistedHomLeibniz, PolynomialLevel) {
  // {s(F), s(GH)} = s({F,G}) s^2(H) + s^2(G) s({F,H}) for the twisted operations
  // {F,G}_s = s{F,G}, F*G = s(FG) and alpha = s.
  hptest::Rng rng(61);
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  const Substitution s = sl2_scaling(sl2, -2);
  auto br = [&](const Polynomial& a, const Polynomial& b) { return substitute(s, lie_poisson_bracket(sl2, a, b)); };
  auto mu = [&](const Polynomial& a, const Polynomial& b) { return substitute(s, a * b); };
  auto al = [&](const Polynomial& a) { return substitute(s, a); };
  for (int t = 0; t < 10; ++t) {
    const Polynomial f = hptest::random_polynomial(rng, sl2.generators(), 2, 3);
    const Polynomial g = hptest::random_polynomial(rng, sl2.generators(), 2, 3);
    const Polynomial h = hptest::random_polynomial(rng, sl2.generators(), 2, 3);
    EXPECT_EQ(br(al(f), mu(g, h)), mu(br(f, g), al(h)) + mu(al(g), br(f, h)));
    EXPECT_TRUE((br(br(f, g), al(h)) + br(br(h, f), al(g)) + br(br(g, h), al(f))).is_zero());
    EXPECT_EQ(mu(mu(f, g), al(h)), mu(al(f), mu(g, h)));
  }
}

TEST(Manifold, TranslationWitness) {
  const auto w1 = r2n_witness({1, 0}, 1);
  EXPECT_EQ(w1.trace_term, Rational(2));
  EXPECT_EQ(w1.determinant, Rational(1));
  EXPECT_TRUE(w1.nonrigid);
  const auto w2 = r2n_witness({0, Rational(3, 2)}, 2);
  EXPECT_EQ(w2.trace_term, Rational(3));
  EXPECT_EQ(w2.determinant, Rational(9, 4));
  const auto w3 = r2n_witness({-2, 5, 1, 1}, 1);
  EXPECT_EQ(w3.f_phi1, Rational(-2));
  EXPECT_EQ(w3.trace_term, Rational(-4));
  EXPECT_EQ(w3.determinant, Rational(4));
  const auto zero = r2n_witness({0, 0}, 1);
  EXPECT_FALSE(zero.nonrigid);
  EXPECT_THROW(r2n_witness({1, 2, 3}, 1), PreconditionFailed);
  EXPECT_THROW(r2n_witness({1, 2}, 3), PreconditionFailed);
}

TEST(Manifold, IteratePoint) {
  const SymplecticStructure s(1);
  const Polynomial one = Polynomial::constant(s.generators(), 1);
  const Substitution phi({s.coordinate(0) + s.coordinate(1), s.coordinate(1) + one});
  EXPECT_EQ(iterate_point(phi, Vector{0, 0}, 0), (Vector{0, 0}));
  EXPECT_EQ(iterate_point(phi, Vector{0, 0}, 1), (Vector{0, 1}));
  EXPECT_EQ(iterate_point(phi, Vector{0, 0}, 2), (Vector{1, 2}));
  EXPECT_EQ(iterate_point(phi, Vector{0, 0}, 3), (Vector{3, 3}));
}

TEST(Truncated, Sl2Degree3) {
  const LiePoissonStructure sl2 = sl2_lie_poisson();
  EXPECT_EQ(truncated_monomials(3, 3).size(), 20u);
  EXPECT_EQ(truncated_monomials(3, 3).front(), (Monomial{0, 0, 0}));
  const HomPoissonAlgebra a = truncated_lie_poisson(sl2, 3);
  EXPECT_EQ(a.dim(), 20u);
  EXPECT_TRUE(a.mu().is_sparse());
  EXPECT_TRUE(a.commutative());
  EXPECT_TRUE(check_hom_poisson(a).passed);
  const LinearMap m = truncated_substitution_map(sl2, sl2_scaling(sl2, 2), 3);
  EXPECT_TRUE(check_morphism(m, a, a, false).passed);
}
