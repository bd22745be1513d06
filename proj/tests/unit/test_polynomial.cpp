#include <gtest/gtest.h>

#include "generators.hpp"
#include "hompoisson/error.hpp"
#include "hompoisson/polynomial.hpp"

using namespace hompoisson;

namespace {

const std::vector<std::string> kX{"X"};
const std::vector<std::string> kEFH{"e", "f", "h"};

Polynomial X() { return Polynomial::variable(kX, 0); }
Polynomial c(const Rational& v) { return Polynomial::constant(kX, v); }

}  // namespace

TEST(Polynomial, ZeroCoefficientsAreDropped) {
  Polynomial p = X() + c(2);
  p -= X();
  EXPECT_EQ(p, c(2));
  p -= c(2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
  EXPECT_EQ(p.term_count(), 0u);
}

TEST(Polynomial, MultiplicationAndPowers) {
  EXPECT_EQ(poly_mul(X() + c(2), c(1)), X() + c(2));
  // (2+X)^3 = X^3 + 6X^2 + 12X + 8
  const Polynomial cube = poly_pow(c(2) + X(), 3);
  EXPECT_EQ(to_string(cube), "X^3 + 6*X^2 + 12*X + 8");
  EXPECT_EQ(cube.coefficient({2}), Rational(6));
  EXPECT_EQ(cube.degree(), 3);
}

TEST(Polynomial, DerivativePowerRule) {
  const Polynomial e = Polynomial::variable(kEFH, 0), h = Polynomial::variable(kEFH, 2);
  EXPECT_EQ(poly_diff(e * h * h, "h"), Rational(2) * e * h);
  EXPECT_TRUE(poly_diff(Polynomial::constant(kEFH, 7), 1).is_zero());
}

TEST(Polynomial, GradedLexOrderLeadsWithHighestDegree) {
  const Polynomial e = Polynomial::variable(kEFH, 0), f = Polynomial::variable(kEFH, 1);
  const Polynomial p = f + e * e + Polynomial::constant(kEFH, 3) + e * f;
  EXPECT_EQ(to_string(p), "e^2 + e*f + f + 3");
  EXPECT_EQ(to_string(Rational(-1) * e + Rational(1, 2) * f), "-e + 1/2*f");
}

TEST(Polynomial, GeneratorMismatchThrows) {
  EXPECT_THROW(X() + Polynomial::variable(kEFH, 0), Error);
  EXPECT_THROW(poly_mul(X(), Polynomial::variable(kEFH, 0)), Error);
  EXPECT_THROW(X().generator_index("Y"), Error);
}

TEST(Polynomial, FreePolyOracle) {
  // Dense univariate oracle for (2+X)^3 - (1+X)(2+X)(3+X).
  using V = std::vector<Rational>;
  const V two_x{2, 1}, one_x{1, 1}, three_x{3, 1};
  V lhs = hptest::univariate_mul(hptest::univariate_mul(two_x, two_x), two_x);
  V rhs = hptest::univariate_mul(hptest::univariate_mul(one_x, two_x), three_x);
  Polynomial oracle(kX);
  for (std::size_t d = 0; d < lhs.size(); ++d) oracle.add_term({static_cast<std::uint32_t>(d)}, lhs[d] - rhs[d]);
  EXPECT_EQ(oracle, X() + c(2));

  const Polynomial computed = poly_pow(c(2) + X(), 3) - (c(1) + X()) * (c(2) + X()) * (c(3) + X());
  EXPECT_EQ(computed, oracle);
}

TEST(Polynomial, EvaluationIsARingMorphism) {
  hptest::Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const Polynomial f = hptest::random_polynomial(rng, kEFH, 3, 5);
    const Polynomial g = hptest::random_polynomial(rng, kEFH, 3, 5);
    const Vector pt = hptest::random_vector(rng, 3);
    EXPECT_EQ((f * g).evaluate(pt), f.evaluate(pt) * g.evaluate(pt));
    EXPECT_EQ((f + g).evaluate(pt), f.evaluate(pt) + g.evaluate(pt));
  }
}

TEST(Polynomial, RingAxioms) {
  hptest::Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    const Polynomial f = hptest::random_polynomial(rng, kEFH, 2, 4);
    const Polynomial g = hptest::random_polynomial(rng, kEFH, 2, 4);
    const Polynomial h = hptest::random_polynomial(rng, kEFH, 2, 4);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    // Leibniz rule for the derivative.
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(poly_diff(f * g, i), poly_diff(f, i) * g + f * poly_diff(g, i));
  }
}

TEST(Polynomial, TermGuard) {
  const std::vector<std::string> gens{"x", "y"};
  Polynomial f(gens), g(gens);
  for (std::uint32_t i = 0; i <= 1100; ++i) {
    f.add_term({i, 0}, 1);
    g.add_term({0, i}, 1);
  }
  // Every product x^i y^j is distinct: 1101^2 terms, past the 10^6 limit.
  EXPECT_THROW(poly_mul(f, g), ResourceLimit);
  EXPECT_EQ(poly_mul(f, Polynomial::constant(gens, 2)).term_count(), 1101u);
}
