#include "ordcone/rational.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

#include "ordcone/errors.hpp"

namespace ordcone {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_decimal(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
    if (!all_digits(frac_part)) throw ParseError("malformed decimal '" + original + "'");
    if (!int_part.empty() && !all_digits(int_part)) throw ParseError("malformed decimal '" + original + "'");
  } else if (!all_digits(int_part)) {
    throw ParseError("malformed decimal '" + original + "'");
  }
  std::string digits(int_part.empty() ? "0" : std::string(int_part));
  digits += frac_part;
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_decimal(s);

  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed fraction '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal_str() const {
  mpz_class den = q_.get_den();
  std::size_t twos = 0;
  std::size_t fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return str();

  const std::size_t places = std::max(twos, fives);
  if (places == 0) return q_.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = q_.get_num() * scale / q_.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return negative ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------

RatVector RatVector::unit(std::size_t dim, std::size_t i) {
  RatVector v(dim);
  v[i] = 1;
  return v;
}

RatVector RatVector::parse_list(std::string_view text) {
  RatVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool RatVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool RatVector::is_nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& r) { return r.sign() >= 0; });
}

RatVector& RatVector::operator+=(const RatVector& o) {
  if (o.size() != size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) v_[i] += o.v_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
  if (o.size() != size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

RatVector operator-(RatVector a) {
  for (auto& x : a.v_) x = -x;
  return a;
}

std::string RatVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: vector sizes differ");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

RatVector normalize_ray(const RatVector& v) {
  const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); });
  if (lead == v.end()) throw Error("cannot normalize the zero vector");
  return v * (Rational(1) / lead->abs());
}

// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows, RatVector(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::initializer_list<RatVector> rows) : RatMatrix(std::vector<RatVector>(rows)) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_)
    if (r.size() != cols_) throw DimensionMismatch("matrix rows of unequal length");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> cols) {
  if (cols.empty()) return {};
  RatMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw DimensionMismatch("columns of unequal length");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
  return c;
}

void RatMatrix::append_row(RatVector r) {
  if (rows_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionMismatch("appended row has wrong length");
  rows_.push_back(std::move(r));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

std::size_t RatMatrix::rank() const {
  std::vector<RatVector> m = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[rank][col];
      m[r] -= m[rank] * f;
    }
    ++rank;
  }
  return rank;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) os << m.row(i) << '\n';
  return os;
}

RatVector mat_vec(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size())
    throw DimensionMismatch("mat_vec: matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                            std::to_string(v.size()) + " entries");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), v);
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).raw() * b(k, j).raw();
      out(i, j) = Rational(acc);
    }
  return out;
}

}  // namespace ordcone

std::size_t std::hash<ordcone::Rational>::operator()(const ordcone::Rational& r) const noexcept {
  const auto h1 = std::hash<std::string>{}(r.numerator());
  const auto h2 = std::hash<std::string>{}(r.denominator());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::size_t std::hash<ordcone::RatVector>::operator()(const ordcone::RatVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) h ^= std::hash<ordcone::Rational>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
