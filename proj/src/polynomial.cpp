#include "hompoisson/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hompoisson/error.hpp"

namespace hompoisson {

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::vector<std::string> generators, const Rational& c) {
  Polynomial p(std::move(generators));
  p.add_term(Monomial(p.generator_count(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> generators, std::size_t index) {
  Polynomial p(std::move(generators));
  if (index >= p.generator_count()) throw Error("generator index out of range");
  Monomial m(p.generator_count(), 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

std::size_t Polynomial::generator_index(const std::string& name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw Error("unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  const auto& lead = terms_.begin()->first;
  return static_cast<int>(std::accumulate(lead.begin(), lead.end(), std::uint64_t{0}));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != generators_.size()) throw DimensionMismatch("monomial", generators_.size(), m.size());
  if (hompoisson::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (hompoisson::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::require_same_generators(const Polynomial& other, const char* what) const {
  if (generators_ != other.generators_) throw Error(std::string(what) + ": generator mismatch");
}

void Polynomial::guard_size() const {
  if (terms_.size() > kMaxTerms) throw ResourceLimit("polynomial exceeds " + std::to_string(kMaxTerms) + " terms");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_generators(other, "polynomial addition");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  guard_size();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_generators(other, "polynomial subtraction");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  guard_size();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (hompoisson::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = poly_mul(*this, other);
  return *this;
}

Rational Polynomial::evaluate(const Vector& point) const {
  if (point.dim() != generators_.size()) throw DimensionMismatch("polynomial evaluation", generators_.size(), point.dim());
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  if (f.generators() != g.generators()) throw Error("polynomial multiplication: generator mismatch");
  Polynomial out(f.generators());
  Monomial m(f.generator_count());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mf[i] + mg[i];
      out.add_term(m, cf * cg);
    }
    if (out.term_count() > Polynomial::kMaxTerms) {
      throw ResourceLimit("polynomial exceeds " + std::to_string(Polynomial::kMaxTerms) + " terms");
    }
  }
  return out;
}

Polynomial poly_diff(const Polynomial& f, std::size_t index) {
  if (index >= f.generator_count()) throw Error("generator index out of range");
  Polynomial out(f.generators());
  for (const auto& [m, c] : f.terms()) {
    if (m[index] == 0) continue;
    Monomial d = m;
    --d[index];
    out.add_term(d, c * m[index]);
  }
  return out;
}

Polynomial poly_diff(const Polynomial& f, const std::string& generator) {
  return poly_diff(f, f.generator_index(generator));
}

Polynomial poly_pow(const Polynomial& f, unsigned n) {
  Polynomial result = Polynomial::constant(f.generators(), Rational(1));
  for (unsigned i = 0; i < n; ++i) result = poly_mul(result, f);
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool constant_term = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant_term || magnitude != 1) {
      out << to_string(magnitude);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << '*';
      out << p.generators()[i];
      if (m[i] > 1) out << '^' << m[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace hompoisson
