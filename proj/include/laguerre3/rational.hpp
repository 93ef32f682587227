#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <ostream>
#include <string>

#include "laguerre3/errors.hpp"

namespace laguerre3 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational scalar. Plain value semantics around cpp_rational: the
// backend's expression templates and byte-container constructors must not
// leak into Eigen's trait machinery, so every operator here takes and
// returns Rational by value. No rounding anywhere; conversion to double is
// explicit and only used by exporters.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) : v_(BigRat(BigInt(num), BigInt(den))) {}
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  explicit Rational(const BigInt& num, const BigInt& den) : v_(BigRat(num, den)) {}

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError(Err::NotAUnit, "rational division by zero");
    return Rational(BigRat(a.v_ / b.v_));
  }
  Rational operator+() const { return *this; }
  Rational operator-() const { return Rational(BigRat(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }
  double to_double() const { return v_.convert_to<double>(); }
  const BigRat& raw() const { return v_; }

 private:
  BigRat v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, int e) {
  if (e < 0) return Rational(1) / pow(base, -e);
  Rational acc(1), b = base;
  for (; e > 0; e >>= 1, b *= b)
    if (e & 1) acc *= b;
  return acc;
}

// Canonical text form "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& r) {
  std::string s = r.num().str();
  if (r.den() != 1) s += "/" + r.den().str();
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << to_string(r);
}

// Accepts "p", "p/q" and terminating decimals like "-0.5" (parsed exactly).
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return DomainError(Err::BadInput, "malformed rational: '" + text + "'"); };
  std::size_t i = 0, n = text.size();
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < n && text[i] >= '0' && text[i] <= '9') out += text[i++];
    return i > start;
  };
  bool neg = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  std::string ip;
  if (!digits(ip)) throw bad();
  BigInt num(ip), den(1);
  if (i < n && text[i] == '.') {
    ++i;
    std::string fp;
    if (!digits(fp)) throw bad();
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else if (i < n && text[i] == '/') {
    ++i;
    bool dneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) dneg = text[i++] == '-';
    std::string dp;
    if (!digits(dp)) throw bad();
    den = BigInt(dp);
    if (den == 0) throw bad();
    if (dneg) den = -den;
  }
  if (i != n) throw bad();
  if (neg) num = -num;
  return Rational(num, den);
}

}  // namespace laguerre3

namespace Eigen {

template <>
struct NumTraits<laguerre3::Rational> : GenericNumTraits<laguerre3::Rational> {
  using Real = laguerre3::Rational;
  using NonInteger = laguerre3::Rational;
  using Nested = laguerre3::Rational;
  using Literal = long;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace laguerre3 {

using Mat2 = Eigen::Matrix<Rational, 2, 2>;
using Mat3 = Eigen::Matrix<Rational, 3, 3>;
using Mat4 = Eigen::Matrix<Rational, 4, 4>;
using RowVec2 = Eigen::Matrix<Rational, 1, 2>;
using RowVec3 = Eigen::Matrix<Rational, 1, 3>;
using RowVec4 = Eigen::Matrix<Rational, 1, 4>;
using ColVec3 = Eigen::Matrix<Rational, 3, 1>;
using ColVec4 = Eigen::Matrix<Rational, 4, 1>;

}  // namespace laguerre3
