#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hompoisson/linalg.hpp"
#include "hompoisson/rational.hpp"

namespace hompoisson {

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first: total degree, then the
/// exponent of the earliest generator.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of named generators. Zero coefficients are never stored.
class Polynomial {
 public:
  static constexpr std::size_t kMaxTerms = 1'000'000;

  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> generators) : generators_(std::move(generators)) {}

  static Polynomial constant(std::vector<std::string> generators, const Rational& c);
  static Polynomial variable(std::vector<std::string> generators, std::size_t index);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::size_t generator_index(const std::string& name) const;

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.generators_ == b.generators_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const Vector& point) const;

 private:
  void require_same_generators(const Polynomial& other, const char* what) const;
  void guard_size() const;

  std::vector<std::string> generators_;
  Terms terms_;
};

/// Human-readable form, leading term first, e.g. "X + 2" or "2*e*h^2".
std::string to_string(const Polynomial& p);

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
/// Partial derivative with respect to generator `index`.
Polynomial poly_diff(const Polynomial& f, std::size_t index);
Polynomial poly_diff(const Polynomial& f, const std::string& generator);
Polynomial poly_pow(const Polynomial& f, unsigned n);

}  // namespace hompoisson
