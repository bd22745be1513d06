#include <gtest/gtest.h>

#include <variant>

#include "generators.hpp"
#include "hompoisson/catalog.hpp"
#include "hompoisson/checks.hpp"
#include "hompoisson/constructions.hpp"
#include "hompoisson/error.hpp"

using namespace hompoisson;

TEST(Catalog, ListsEveryEntry) {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) {
    names.push_back(e.name);
    EXPECT_FALSE(e.description.empty());
  }
  EXPECT_EQ(names, (std::vector<std::string>{"heisenberg-p31", "heisenberg-p32", "matrix", "sl2-linear-poisson",
                                             "symplectic", "free-poly", "unit"}));
}

TEST(Catalog, FiniteEntriesAreHomPoisson) {
  for (const auto& e : catalog_entries()) {
    const CatalogObject obj = build_catalog(e.name);
    if (const auto* a = std::get_if<HomPoissonAlgebra>(&obj)) EXPECT_TRUE(check_hom_poisson(*a).passed) << e.name;
  }
  EXPECT_TRUE(std::holds_alternative<SymplecticStructure>(build_catalog("symplectic", {{"n", 3}})));
  EXPECT_TRUE(std::holds_alternative<FreePolynomialExample>(build_catalog("free-poly")));
}

TEST(Catalog, Parameters) {
  EXPECT_EQ(build_catalog_algebra("heisenberg-p31", {{"zeta", Rational(1, 2)}}), heisenberg_p31(Rational(1, 2)));
  EXPECT_EQ(build_catalog_algebra("heisenberg-p31"), heisenberg_p31(1));
  EXPECT_EQ(build_catalog_algebra("matrix", {{"n", 3}}).dim(), 9u);
  EXPECT_EQ(build_catalog_algebra("sl2-linear-poisson", {{"degree", 2}}).dim(), 10u);
  EXPECT_EQ(build_catalog_algebra("unit").basis(), (std::vector<std::string>{"u"}));
}

TEST(Catalog, Errors) {
  EXPECT_THROW(build_catalog("nope"), Error);
  EXPECT_THROW(build_catalog("matrix", {{"m", 2}}), Error);
  EXPECT_THROW(build_catalog("matrix", {{"n", 0}}), Error);
  EXPECT_THROW(build_catalog("matrix", {{"n", Rational(3, 2)}}), Error);
  EXPECT_THROW(build_catalog("matrix", {{"n", 7}}), Error);
  EXPECT_THROW(build_catalog_algebra("free-poly"), Error);
  EXPECT_THROW(build_catalog_algebra("symplectic"), Error);
}

TEST(Catalog, HeisenbergAlgebras) {
  const auto p = heisenberg_p31(Rational(2, 3));
  EXPECT_EQ(p.basis(), (std::vector<std::string>{"X", "Y", "Z"}));
  EXPECT_EQ(p.bracket().at(0, 1, 2), Rational(1));
  EXPECT_EQ(p.bracket().at(1, 0, 2), Rational(-1));
  EXPECT_EQ(p.mu().at(0, 1, 2), Rational(2, 3));
  EXPECT_EQ(p.mu().at(1, 0, 2), Rational(2, 3));
  EXPECT_TRUE(p.alpha().is_identity());
  const auto q = heisenberg_p32();
  EXPECT_EQ(q.mu().at(0, 0, 2), Rational(1));
  EXPECT_TRUE(check_hom_poisson(q).passed);
}

TEST(Catalog, MatrixUnitsMatchOracle) {
  const std::size_t n = 3;
  const HomAlgebra a = matrix_algebra(n);
  EXPECT_EQ(a.basis()[n + 2], "E23");
  for (std::size_t p = 0; p < n * n; ++p)
    for (std::size_t q = 0; q < n * n; ++q) {
      const auto prod = hptest::dense_mul(hptest::unit_matrix(n, p / n, p % n), hptest::unit_matrix(n, q / n, q % n));
      for (std::size_t r = 0; r < n * n; ++r) EXPECT_EQ(a.mu().at(p, q, r), prod[r / n][r % n]);
    }
}

TEST(HeisenbergFamilies, MembersAreMorphisms) {
  hptest::Rng rng(67);
  for (int family = 1; family <= 5; ++family) {
    const auto p = family <= 3 ? heisenberg_p31(1) : heisenberg_p32();
    for (int t = 0; t < 30; ++t) {
      const LinearMap f = hptest::random_family_member(rng, family);
      EXPECT_TRUE(check_morphism(f, p, p, false).passed) << family;
      EXPECT_EQ(f.at(2, 2), f.at(0, 0) * f.at(1, 1) - f.at(1, 0) * f.at(0, 1));
    }
  }
  EXPECT_FALSE(heisenberg_family_member(2, {1, 0, 1, 1}).has_value());
  EXPECT_FALSE(heisenberg_family_member(3, {0, 1, 1, 1}).has_value());
  EXPECT_FALSE(heisenberg_family_member(5, {0, 1, 1, 1}).has_value());
  EXPECT_THROW(heisenberg_family_member(6, {1, 1, 1, 1}), Error);
}

TEST(HeisenbergFamilies, TwistsAreMultiplicativeHomPoisson) {
  hptest::Rng rng(71);
  for (int family = 1; family <= 5; ++family) {
    const auto p = family <= 3 ? heisenberg_p31(Rational(1, 2)) : heisenberg_p32();
    for (int t = 0; t < 10; ++t) {
      const auto tw = yau_twist(p, hptest::random_family_member(rng, family));
      EXPECT_TRUE(check_hom_poisson(tw).passed);
      EXPECT_TRUE(check_multiplicative(tw).passed);
    }
  }
}
