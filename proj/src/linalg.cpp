#include "hompoisson/linalg.hpp"

#include <utility>

#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

void require_dim(const char* what, std::size_t expected, std::size_t got) {
  if (expected != got) throw DimensionMismatch(what, expected, got);
}

const Rational& zero_scalar() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector Vector::basis(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (!hompoisson::is_zero(e)) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& other) {
  require_dim("vector addition", dim(), other.dim());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_dim("vector subtraction", dim(), other.dim());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

// ---------------------------------------------------------------- LinearMap

LinearMap LinearMap::identity(std::size_t dim) {
  LinearMap m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

LinearMap LinearMap::diagonal(std::span<const Rational> diag) {
  LinearMap m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

LinearMap LinearMap::from_rows(std::size_t dim, std::vector<Rational> rows) {
  require_dim("LinearMap::from_rows", dim * dim, rows.size());
  LinearMap m;
  m.dim_ = dim;
  m.entries_ = std::move(rows);
  return m;
}

LinearMap LinearMap::from_columns(std::span<const Vector> columns) {
  LinearMap m(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_dim("LinearMap::from_columns", columns.size(), columns[j].dim());
    for (std::size_t i = 0; i < columns.size(); ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Vector LinearMap::column(std::size_t col) const {
  Vector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = at(i, col);
  return v;
}

bool LinearMap::is_zero() const {
  for (const auto& e : entries_) {
    if (!hompoisson::is_zero(e)) return false;
  }
  return true;
}

bool LinearMap::is_identity() const { return *this == identity(dim_); }

Vector apply(const LinearMap& m, const Vector& v) {
  require_dim("apply", m.dim(), v.dim());
  Vector out(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (is_zero(v[j])) continue;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (!is_zero(m.at(i, j))) out[i] += m.at(i, j) * v[j];
    }
  }
  return out;
}

LinearMap compose(const LinearMap& m1, const LinearMap& m2) {
  require_dim("compose", m1.dim(), m2.dim());
  const std::size_t n = m1.dim();
  LinearMap out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(m1.at(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += m1.at(i, k) * m2.at(k, j);
    }
  return out;
}

LinearMap power(const LinearMap& m, unsigned n) {
  LinearMap result = LinearMap::identity(m.dim());
  LinearMap base = m;
  while (n > 0) {
    if (n & 1u) result = compose(result, base);
    n >>= 1u;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

LinearMap invert(const LinearMap& m) {
  const std::size_t n = m.dim();
  LinearMap a = m;
  LinearMap inv = LinearMap::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Any nonzero pivot will do in exact arithmetic.
    std::size_t pivot = col;
    while (pivot < n && is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == n) throw NotInvertible();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        swap(a.at(pivot, j), a.at(col, j));
        swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational scale = 1 / a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || is_zero(a.at(row, col))) continue;
      const Rational factor = a.at(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(row, j) -= factor * a.at(col, j);
        inv.at(row, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

LinearMap kronecker(const LinearMap& a, const LinearMap& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  LinearMap out(na * nb);
  for (std::size_t r1 = 0; r1 < na; ++r1)
    for (std::size_t c1 = 0; c1 < na; ++c1) {
      if (is_zero(a.at(r1, c1))) continue;
      for (std::size_t r2 = 0; r2 < nb; ++r2)
        for (std::size_t c2 = 0; c2 < nb; ++c2) out.at(r1 * nb + r2, c1 * nb + c2) = a.at(r1, c1) * b.at(r2, c2);
    }
  return out;
}

// ---------------------------------------------------------------- Trilinear

Trilinear::Trilinear(std::size_t dim) : dim_(dim) {
  if (!is_sparse()) dense_.resize(dim * dim * dim);
}

void Trilinear::check_bounds(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw Error("structure constant index (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                std::to_string(k) + ") out of range for dimension " + std::to_string(dim_));
  }
}

const Rational& Trilinear::at(std::size_t i, std::size_t j, std::size_t k) const {
  check_bounds(i, j, k);
  if (!is_sparse()) return dense_[index(i, j, k)];
  auto it = sparse_.find(Index{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)});
  return it == sparse_.end() ? zero_scalar() : it->second;
}

void Trilinear::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  check_bounds(i, j, k);
  if (!is_sparse()) {
    dense_[index(i, j, k)] = value;
    return;
  }
  const Index key{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)};
  if (hompoisson::is_zero(value)) {
    sparse_.erase(key);
  } else {
    sparse_[key] = value;
  }
}

void Trilinear::add(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (hompoisson::is_zero(value)) return;
  set(i, j, k, at(i, j, k) + value);
}

Vector Trilinear::product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  if (!is_sparse()) {
    for (std::size_t k = 0; k < dim_; ++k) v[k] = dense_[index(i, j, k)];
    return v;
  }
  check_bounds(i, j, 0);
  const auto ui = static_cast<std::uint32_t>(i);
  const auto uj = static_cast<std::uint32_t>(j);
  for (auto it = sparse_.lower_bound(Index{ui, uj, 0}); it != sparse_.end() && it->first[0] == ui && it->first[1] == uj; ++it) {
    v[it->first[2]] = it->second;
  }
  return v;
}

bool Trilinear::is_zero() const { return nonzero_count() == 0; }

std::size_t Trilinear::nonzero_count() const {
  if (is_sparse()) return sparse_.size();
  std::size_t n = 0;
  for (const auto& v : dense_) n += hompoisson::is_zero(v) ? 0 : 1;
  return n;
}

Trilinear Trilinear::opposite() const {
  Trilinear out(dim_);
  for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) { out.set(j, i, k, v); });
  return out;
}

Trilinear Trilinear::then(const LinearMap& beta) const {
  require_dim("Trilinear::then", dim_, beta.dim());
  Trilinear out(dim_);
  for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    for (std::size_t r = 0; r < dim_; ++r) {
      if (!hompoisson::is_zero(beta.at(r, k))) out.add(i, j, r, beta.at(r, k) * v);
    }
  });
  return out;
}

Trilinear& Trilinear::operator+=(const Trilinear& other) {
  require_dim("Trilinear addition", dim_, other.dim_);
  other.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) { add(i, j, k, v); });
  return *this;
}

Trilinear& Trilinear::operator-=(const Trilinear& other) {
  require_dim("Trilinear subtraction", dim_, other.dim_);
  other.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) { add(i, j, k, -v); });
  return *this;
}

Trilinear& Trilinear::operator*=(const Rational& s) {
  if (hompoisson::is_zero(s)) {
    *this = Trilinear(dim_);
    return *this;
  }
  if (is_sparse()) {
    for (auto& [idx, v] : sparse_) v *= s;
  } else {
    for (auto& v : dense_) v *= s;
  }
  return *this;
}

bool operator==(const Trilinear& a, const Trilinear& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.is_sparse()) return a.sparse_ == b.sparse_;
  return a.dense_ == b.dense_;
}

Vector contract(const Trilinear& t, const Vector& x, const Vector& y) {
  require_dim("contract", t.dim(), x.dim());
  require_dim("contract", t.dim(), y.dim());
  const std::size_t n = t.dim();
  Vector out(n);
  if (t.is_sparse()) {
    t.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
      if (!is_zero(x[i]) && !is_zero(y[j])) out[k] += x[i] * y[j] * c;
    });
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = t.at(i, j, k);
        if (!is_zero(c)) out[k] += xy * c;
      }
    }
  }
  return out;
}

}  // namespace hompoisson
