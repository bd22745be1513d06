#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "hompoisson/rational.hpp"

namespace hompoisson {

/// Coordinates of an element in a fixed basis.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static Vector basis(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= Rational(-1); }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Square matrix acting on coordinates; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static LinearMap identity(std::size_t dim);
  static LinearMap zero(std::size_t dim) { return LinearMap(dim); }
  static LinearMap diagonal(std::span<const Rational> diag);
  /// Row-major construction; `rows` must hold dim*dim entries.
  static LinearMap from_rows(std::size_t dim, std::vector<Rational> rows);
  /// Builds the map whose j-th column is `columns[j]`.
  static LinearMap from_columns(std::span<const Vector> columns);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Rational& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  Vector column(std::size_t col) const;

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Rank-3 structure-constant tensor: at(i, j, k) is the coefficient of e_k
/// in op(e_i, e_j). Dense up to kDenseLimit, sparse above.
class Trilinear {
 public:
  static constexpr std::size_t kDenseLimit = 16;

  Trilinear() = default;
  explicit Trilinear(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  bool is_sparse() const noexcept { return dim_ > kDenseLimit; }

  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  /// op(e_i, e_j) as a coordinate vector.
  Vector product(std::size_t i, std::size_t j) const;

  /// Visits nonzero entries as f(i, j, k, value) in lexicographic order.
  template <class F>
  void for_each_nonzero(F&& f) const {
    if (is_sparse()) {
      for (const auto& [idx, value] : sparse_) f(std::size_t{idx[0]}, std::size_t{idx[1]}, std::size_t{idx[2]}, value);
      return;
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          const Rational& v = dense_[index(i, j, k)];
          if (!hompoisson::is_zero(v)) f(i, j, k, v);
        }
  }

  bool is_zero() const;
  std::size_t nonzero_count() const;

  /// The opposite operation: op^op(x, y) = op(y, x).
  Trilinear opposite() const;
  /// beta composed after the operation: (beta . op)(x, y) = beta(op(x, y)).
  Trilinear then(const LinearMap& beta) const;

  Trilinear& operator+=(const Trilinear& other);
  Trilinear& operator-=(const Trilinear& other);
  Trilinear& operator*=(const Rational& s);
  friend Trilinear operator+(Trilinear a, const Trilinear& b) { return a += b; }
  friend Trilinear operator-(Trilinear a, const Trilinear& b) { return a -= b; }
  friend Trilinear operator*(const Rational& s, Trilinear t) { return t *= s; }

  friend bool operator==(const Trilinear& a, const Trilinear& b);

 private:
  using Index = std::array<std::uint32_t, 3>;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }
  void check_bounds(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_ = 0;
  std::vector<Rational> dense_;
  std::map<Index, Rational> sparse_;
};

Vector apply(const LinearMap& m, const Vector& v);
/// m1 after m2.
LinearMap compose(const LinearMap& m1, const LinearMap& m2);
/// n-fold composition; power(m, 0) is the identity.
LinearMap power(const LinearMap& m, unsigned n);
/// Exact Gauss-Jordan elimination. Throws NotInvertible.
LinearMap invert(const LinearMap& m);
/// Kronecker product; basis e_i (x) f_j sits at index i * dim(b) + j.
LinearMap kronecker(const LinearMap& a, const LinearMap& b);
/// Evaluates op(x, y): result_k = sum_{i,j} x_i y_j c[i][j][k].
Vector contract(const Trilinear& t, const Vector& x, const Vector& y);

}  // namespace hompoisson
