#include "hompoisson/hom_power.hpp"

#include <map>
#include <string>

#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

template <class T>
bool coord_is_zero(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return hompoisson::is_zero(v);
  } else {
    return v.is_zero();
  }
}

template <class T>
std::vector<T> contract_generic(const Trilinear& t, const std::vector<T>& x, const std::vector<T>& y, const T& zero) {
  std::vector<T> out(t.dim(), zero);
  std::size_t last_i = t.dim();
  std::size_t last_j = t.dim();
  T xy = zero;
  t.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (coord_is_zero(x[i]) || coord_is_zero(y[j])) return;
    if (i != last_i || j != last_j) {
      xy = x[i] * y[j];
      last_i = i;
      last_j = j;
    }
    out[k] += c * xy;
  });
  return out;
}

template <class T>
std::vector<T> apply_generic(const LinearMap& m, const std::vector<T>& x, const T& zero) {
  std::vector<T> out(m.dim(), zero);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (coord_is_zero(x[j])) continue;
    for (std::size_t r = 0; r < m.dim(); ++r) {
      if (!hompoisson::is_zero(m.at(r, j))) out[r] += m.at(r, j) * x[j];
    }
  }
  return out;
}

template <class T>
std::vector<T> subtract(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
bool all_zero(const std::vector<T>& v) {
  for (const auto& c : v) {
    if (!coord_is_zero(c)) return false;
  }
  return true;
}

/// Memoizes alpha^k and the Hom-powers of one element.
template <class T>
class PowerTable {
 public:
  PowerTable(const HomAlgebra& a, std::vector<T> x, T zero) : algebra_(a), zero_(std::move(zero)) {
    powers_.emplace(1u, std::move(x));
  }

  const std::vector<T>& power(unsigned n) {
    if (n == 0) throw PreconditionFailed("Hom-powers start at n = 1");
    if (auto it = powers_.find(n); it != powers_.end()) return it->second;
    // x^n = x^(n-1) alpha^(n-2)(x)
    std::vector<T> lhs = power(n - 1);
    std::vector<T> rhs = twisted(power(1), n - 2);
    return powers_.emplace(n, contract_generic(algebra_.mu(), lhs, rhs, zero_)).first->second;
  }

  std::vector<T> pair(unsigned i, unsigned j) {
    if (i == 0 || j == 0) throw PreconditionFailed("Hom-power pair indices start at 1");
    std::vector<T> left = twisted(power(i), j - 1);
    std::vector<T> right = twisted(power(j), i - 1);
    return contract_generic(algebra_.mu(), left, right, zero_);
  }

  std::vector<T> twisted(const std::vector<T>& v, unsigned k) { return apply_generic(alpha_power(k), v, zero_); }

  std::vector<T> product(const std::vector<T>& a, const std::vector<T>& b) const {
    return contract_generic(algebra_.mu(), a, b, zero_);
  }

 private:
  const LinearMap& alpha_power(unsigned k) {
    if (auto it = alpha_powers_.find(k); it != alpha_powers_.end()) return it->second;
    return alpha_powers_.emplace(k, hompoisson::power(algebra_.alpha(), k)).first->second;
  }

  const HomAlgebra& algebra_;
  T zero_;
  std::map<unsigned, std::vector<T>> powers_;
  std::map<unsigned, LinearMap> alpha_powers_;
};

std::vector<Rational> coords_of(const Vector& v) { return {v.entries().begin(), v.entries().end()}; }

Polynomial zero_of(const GenericElement& x) {
  if (x.coords.empty()) throw Error("generic element has no coordinates");
  return Polynomial(x.coords.front().generators());
}

void require_dim(const HomAlgebra& a, std::size_t got) {
  if (a.dim() != got) throw DimensionMismatch("hom_power", a.dim(), got);
}

void guard(const HomAlgebra& a, unsigned n) {
  if (n > kMaxPowerDegree || a.dim() > kMaxPowerDim) {
    throw ResourceLimit("generic Hom-power checks are limited to n <= " + std::to_string(kMaxPowerDegree) +
                        " and dimension <= " + std::to_string(kMaxPowerDim) + " (got n = " + std::to_string(n) +
                        ", dimension " + std::to_string(a.dim()) + ")");
  }
}

Witness symbolic_witness(std::vector<std::size_t> labels, std::vector<Polynomial> residual) {
  return Witness{std::move(labels), Vector(), std::move(residual)};
}

}  // namespace

bool GenericElement::is_zero() const { return all_zero(coords); }

GenericElement generic_element(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("t" + std::to_string(i));
  GenericElement x;
  for (std::size_t i = 0; i < dim; ++i) x.coords.push_back(Polynomial::variable(names, i));
  return x;
}

Vector hom_power(const HomAlgebra& a, const Vector& x, unsigned n) {
  require_dim(a, x.dim());
  PowerTable<Rational> table(a, coords_of(x), Rational(0));
  return Vector(table.power(n));
}

GenericElement hom_power(const HomAlgebra& a, const GenericElement& x, unsigned n) {
  require_dim(a, x.dim());
  PowerTable<Polynomial> table(a, x.coords, zero_of(x));
  return GenericElement{table.power(n)};
}

Vector hom_power_pair(const HomAlgebra& a, const Vector& x, unsigned i, unsigned j) {
  require_dim(a, x.dim());
  PowerTable<Rational> table(a, coords_of(x), Rational(0));
  return Vector(table.pair(i, j));
}

GenericElement hom_power_pair(const HomAlgebra& a, const GenericElement& x, unsigned i, unsigned j) {
  require_dim(a, x.dim());
  PowerTable<Polynomial> table(a, x.coords, zero_of(x));
  return GenericElement{table.pair(i, j)};
}

CheckReport check_nth_power_assoc(const HomAlgebra& a, unsigned n) {
  if (n < 2) throw PreconditionFailed("nth Hom-power associativity needs n >= 2");
  guard(a, n);
  const GenericElement x = generic_element(a.dim());
  PowerTable<Polynomial> table(a, x.coords, zero_of(x));
  CheckReport report("hom-power-associativity-" + std::to_string(n));
  const auto& xn = table.power(n);
  for (unsigned i = 1; i < n && !report.full(); ++i) {
    auto residual = subtract(xn, table.pair(n - i, i));
    if (!all_zero(residual)) report.add_witness(symbolic_witness({n, i}, std::move(residual)));
  }
  return report;
}

CheckReport check_criterion_34(const HomAlgebra& a) {
  guard(a, 4);
  if (!check_multiplicative(a).passed) {
    throw PreconditionFailed("check_criterion_34: the Hom-algebra is not multiplicative");
  }
  const GenericElement x = generic_element(a.dim());
  PowerTable<Polynomial> table(a, x.coords, zero_of(x));
  const auto& x2 = table.power(2);
  const auto ax = table.twisted(table.power(1), 1);
  const auto ax2 = table.twisted(x2, 1);

  CheckReport report("criterion-34");
  CheckReport third("criterion-34.cubic");
  auto cubic = subtract(table.product(x2, ax), table.product(ax, x2));
  if (!all_zero(cubic)) third.add_witness(symbolic_witness({3}, std::move(cubic)));
  report.add_part(std::move(third));

  CheckReport fourth("criterion-34.quartic");
  auto quartic = subtract(table.power(4), table.product(ax2, ax2));
  if (!all_zero(quartic)) fourth.add_witness(symbolic_witness({4}, std::move(quartic)));
  report.add_part(std::move(fourth));
  return report;
}

}  // namespace hompoisson
