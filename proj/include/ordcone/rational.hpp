#pragma once

// Exact rational scalars, vectors and dense matrices. Backed by GMP's mpq.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ordcone {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Accepts "3", "-1.25", "2/5", "-7/3". Throws ParseError otherwise.
  static Rational parse(std::string_view text);
  /// Accepts only decimal notation: optional sign, digits, optional fraction.
  static Rational from_decimal(std::string_view text);

  const mpq_class& raw() const noexcept { return q_; }
  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  double to_double() const { return q_.get_d(); }

  /// Canonical "p/q", or "p" when the denominator is one.
  std::string str() const;
  /// Exact decimal expansion when it terminates, otherwise the same as str().
  std::string decimal_str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : v_(dim) {}
  RatVector(std::initializer_list<Rational> init) : v_(init) {}
  explicit RatVector(std::vector<Rational> v) : v_(std::move(v)) {}

  static RatVector unit(std::size_t dim, std::size_t i);
  /// Comma separated entries, each accepted by Rational::parse.
  static RatVector parse_list(std::string_view text);

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  auto begin() noexcept { return v_.begin(); }
  auto end() noexcept { return v_.end(); }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }
  void push_back(Rational r) { v_.push_back(std::move(r)); }
  const std::vector<Rational>& entries() const noexcept { return v_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  RatVector& operator*=(const Rational& s);

  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(RatVector a, const Rational& s) { return a *= s; }
  friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
  friend RatVector operator-(RatVector a);

  friend bool operator==(const RatVector&, const RatVector&) = default;
  friend auto operator<=>(const RatVector& a, const RatVector& b) { return a.v_ <=> b.v_; }

  std::string str() const;

 private:
  std::vector<Rational> v_;
};

std::ostream& operator<<(std::ostream& os, const RatVector& v);

Rational dot(const RatVector& a, const RatVector& b);

/// Scales v by a positive rational so that its first nonzero entry has
/// absolute value one. Two vectors are positive multiples of each other iff
/// their normalizations are equal. Throws Error on the zero vector.
RatVector normalize_ray(const RatVector& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<RatVector> rows);
  explicit RatMatrix(std::vector<RatVector> rows);

  static RatMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static RatMatrix from_columns(std::span<const RatVector> cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const RatVector& row(std::size_t i) const { return rows_[i]; }
  RatVector column(std::size_t j) const;
  const std::vector<RatVector>& row_list() const noexcept { return rows_; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  void append_row(RatVector r);
  RatMatrix transpose() const;
  std::size_t rank() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string str() const;

 private:
  std::vector<RatVector> rows_;
  std::size_t cols_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

RatVector mat_vec(const RatMatrix& a, const RatVector& v);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

}  // namespace ordcone

template <>
struct std::hash<ordcone::Rational> {
  std::size_t operator()(const ordcone::Rational& r) const noexcept;
};

template <>
struct std::hash<ordcone::RatVector> {
  std::size_t operator()(const ordcone::RatVector& v) const noexcept;
};
