#include <gtest/gtest.h>

#include "generators.hpp"
#include "hompoisson/catalog.hpp"
#include "hompoisson/error.hpp"
#include "hompoisson/linalg.hpp"

using namespace hompoisson;

TEST(Rational, ParsesExactForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("+3"), Rational(3));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1.5", "1/0", "1/-2", "a", "1/", "/2", "1e3", "--1", "1/+2"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ArithmeticStaysCanonical) {
  hptest::Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    Rational a = hptest::random_rational(rng, 50, 40);
    Rational b = hptest::random_nonzero(rng, 50, 40);
    for (const Rational& r : {Rational(a + b), Rational(a - b), Rational(a * b), Rational(a / b)}) {
      ASSERT_TRUE(is_canonical(r)) << to_string(r);
    }
  }
}

TEST(Apply, IdentityAndDiagonal) {
  EXPECT_EQ(apply(LinearMap::identity(2), Vector{1, 2}), (Vector{1, 2}));
  const std::vector<Rational> d{Rational(1, 2), 1};
  EXPECT_EQ(apply(LinearMap::diagonal(d), Vector{2, 2}), (Vector{1, 2}));
}

TEST(Apply, HeisenbergAlphaOneScalesZ) {
  const LinearMap a = heisenberg_morphism(2, 0, 0, 3, 0, 0);
  EXPECT_EQ(apply(a, Vector{0, 0, 1}), (Vector{0, 0, 6}));
}

TEST(Apply, DimensionMismatchThrows) {
  EXPECT_THROW(apply(LinearMap::identity(2), Vector{1, 2, 3}), DimensionMismatch);
}

TEST(Compose, IdentityAndPowers) {
  hptest::Rng rng(3);
  const LinearMap m = hptest::random_map(rng, 3);
  EXPECT_EQ(compose(LinearMap::identity(3), m), m);
  EXPECT_EQ(compose(m, LinearMap::identity(3)), m);
  EXPECT_TRUE(power(m, 0).is_identity());
  EXPECT_EQ(power(m, 3), compose(m, compose(m, m)));

  const std::vector<Rational> d{Rational(1, 2), 1, 1};
  const std::vector<Rational> d2{Rational(1, 4), 1, 1};
  EXPECT_EQ(power(LinearMap::diagonal(d), 2), LinearMap::diagonal(d2));

  const LinearMap a = heisenberg_morphism(2, 0, 0, 3, 0, 0);
  EXPECT_EQ(power(a, 2).at(2, 2), Rational(36));
}

TEST(Compose, IsAssociative) {
  hptest::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto a = hptest::random_map(rng, 4), b = hptest::random_map(rng, 4), c = hptest::random_map(rng, 4);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Invert, KnownCases) {
  EXPECT_TRUE(invert(LinearMap::identity(4)).is_identity());
  const std::vector<Rational> d{Rational(1, 2), 1, 1};
  const std::vector<Rational> dinv{2, 1, 1};
  EXPECT_EQ(invert(LinearMap::diagonal(d)), LinearMap::diagonal(dinv));
  EXPECT_THROW(invert(LinearMap::zero(3)), NotInvertible);
  EXPECT_THROW(invert(LinearMap::from_rows(2, {1, 2, 2, 4})), NotInvertible);
}

TEST(Invert, NeedsRowSwap) {
  const LinearMap m = LinearMap::from_rows(3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
  EXPECT_TRUE(compose(m, invert(m)).is_identity());
}

TEST(Invert, RandomRoundTrip) {
  hptest::Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(hptest::uniform(rng, 1, 6));
    const LinearMap m = hptest::random_invertible(rng, n);
    const LinearMap inv = invert(m);
    ASSERT_TRUE(compose(m, inv).is_identity());
    ASSERT_TRUE(compose(inv, m).is_identity());
  }
}

TEST(Contract, KnownProducts) {
  const auto p = heisenberg_p31(Rational(1, 3));
  const Vector x = Vector::basis(3, 0), y = Vector::basis(3, 1);
  EXPECT_EQ(contract(p.bracket(), x, y), Vector::basis(3, 2));
  EXPECT_EQ(contract(p.mu(), x, y), Rational(1, 3) * Vector::basis(3, 2));
  EXPECT_TRUE(contract(p.mu(), Vector(3), y).is_zero());
}

TEST(Contract, IsBilinear) {
  hptest::Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const Trilinear op = hptest::random_trilinear(rng, 4);
    const Vector x = hptest::random_vector(rng, 4), x2 = hptest::random_vector(rng, 4);
    const Vector y = hptest::random_vector(rng, 4), y2 = hptest::random_vector(rng, 4);
    const Rational a = hptest::random_rational(rng), b = hptest::random_rational(rng);
    EXPECT_EQ(contract(op, a * x + b * x2, y), a * contract(op, x, y) + b * contract(op, x2, y));
    EXPECT_EQ(contract(op, x, a * y + b * y2), a * contract(op, x, y) + b * contract(op, x, y2));
  }
}

TEST(Trilinear, SparseAndDenseAgree) {
  hptest::Rng rng(17);
  const std::size_t n = 18;
  ASSERT_TRUE(Trilinear(n).is_sparse());
  Trilinear t(n);
  std::vector<std::array<std::size_t, 3>> idx;
  for (int e = 0; e < 60; ++e) {
    std::array<std::size_t, 3> i{static_cast<std::size_t>(hptest::uniform(rng, 0, n - 1)),
                                 static_cast<std::size_t>(hptest::uniform(rng, 0, n - 1)),
                                 static_cast<std::size_t>(hptest::uniform(rng, 0, n - 1))};
    t.set(i[0], i[1], i[2], hptest::random_nonzero(rng));
  }
  // Visiting order is lexicographic, and contract matches the defining sum.
  std::array<std::size_t, 3> last{0, 0, 0};
  bool first = true;
  t.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational&) {
    std::array<std::size_t, 3> cur{i, j, k};
    if (!first) EXPECT_LT(last, cur);
    last = cur;
    first = false;
  });
  const Vector x = hptest::random_vector(rng, n), y = hptest::random_vector(rng, n);
  Vector expected(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) expected[k] += x[i] * y[j] * t.at(i, j, k);
  EXPECT_EQ(contract(t, x, y), expected);

  t.set(1, 2, 3, 5);
  t.set(1, 2, 3, 0);
  EXPECT_TRUE(is_zero(t.at(1, 2, 3)));
}

TEST(Trilinear, BoundsChecked) {
  Trilinear t(3);
  EXPECT_THROW(t.set(3, 0, 0, 1), Error);
  EXPECT_THROW(static_cast<void>(t.at(0, 0, 3)), Error);
}

TEST(Trilinear, OppositeAndThen) {
  hptest::Rng rng(19);
  const Trilinear t = hptest::random_trilinear(rng, 3);
  const LinearMap b = hptest::random_map(rng, 3);
  const Vector x = hptest::random_vector(rng, 3), y = hptest::random_vector(rng, 3);
  EXPECT_EQ(contract(t.opposite(), x, y), contract(t, y, x));
  EXPECT_EQ(contract(t.then(b), x, y), apply(b, contract(t, x, y)));
  EXPECT_EQ(t.opposite().opposite(), t);
}

TEST(Kronecker, MatchesIndexLayout) {
  const LinearMap a = LinearMap::from_rows(2, {1, 2, 3, 4});
  const LinearMap b = LinearMap::from_rows(3, {0, 1, 0, 5, 0, 0, 0, 0, 7});
  const LinearMap k = kronecker(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(k.at(r * 3 + s, i * 3 + j), a.at(r, i) * b.at(s, j));
}
