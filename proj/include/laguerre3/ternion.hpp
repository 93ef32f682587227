#pragma once

#include <array>
#include <ostream>
#include <string>

#include "laguerre3/rational.hpp"

namespace laguerre3 {

// Element c0 + c1*eps + c2*eps^2 of the local algebra R[X]/<X^3>. Arithmetic
// is truncated polynomial arithmetic: every term of degree >= 3 in eps
// vanishes. Units are exactly the elements with c0 != 0.
class Ternion {
 public:
  Ternion() = default;
  Ternion(int real) : c_{Rational(real), Rational(0), Rational(0)} {}
  Ternion(const Rational& real) : c_{real, Rational(0), Rational(0)} {}
  Ternion(Rational c0, Rational c1, Rational c2)
      : c_{std::move(c0), std::move(c1), std::move(c2)} {}

  static Ternion eps() { return Ternion(0, 1, 0); }
  static Ternion eps2() { return Ternion(0, 0, 1); }

  const Rational& c0() const { return c_[0]; }
  const Rational& c1() const { return c_[1]; }
  const Rational& c2() const { return c_[2]; }
  const Rational& coeff(int k) const { return c_[k]; }

  friend Ternion operator+(const Ternion& a, const Ternion& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
  }
  friend Ternion operator-(const Ternion& a, const Ternion& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
  }
  friend Ternion operator*(const Ternion& a, const Ternion& b) {
    return {a.c_[0] * b.c_[0],
            a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0],
            a.c_[0] * b.c_[2] + a.c_[1] * b.c_[1] + a.c_[2] * b.c_[0]};
  }
  Ternion operator-() const { return {-c_[0], -c_[1], -c_[2]}; }
  Ternion& operator+=(const Ternion& o) { return *this = *this + o; }
  Ternion& operator-=(const Ternion& o) { return *this = *this - o; }
  Ternion& operator*=(const Ternion& o) { return *this = *this * o; }

  friend bool operator==(const Ternion& a, const Ternion& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Ternion& a, const Ternion& b) { return !(a == b); }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
  bool is_unit() const { return !c_[0].is_zero(); }
  bool is_real() const { return c_[1].is_zero() && c_[2].is_zero(); }

 private:
  std::array<Rational, 3> c_;
};

// Zero < Annihilator (R eps^2) < MaximalIdeal (N = R eps + R eps^2) < Unit;
// ideal_class reports the finest class containing the element.
enum class IdealClass { Unit, MaximalIdeal, Annihilator, Zero };

IdealClass ideal_class(const Ternion& a);

inline bool in_maximal_ideal(const Ternion& a) { return a.c0().is_zero(); }
inline bool in_annihilator(const Ternion& a) { return a.c0().is_zero() && a.c1().is_zero(); }
inline const Rational& real_part(const Ternion& a) { return a.c0(); }

// Inverse of a unit, exact: with a = c0(1 + n/c0), n nilpotent, the inverse
// is c0^-1 (1 - n/c0 + (n/c0)^2). Throws NotAUnit when c0 = 0.
Ternion invert(const Ternion& a);

inline Ternion operator/(const Ternion& a, const Ternion& b) { return a * invert(b); }

// Text form "c0 + c1 e + c2 e2" with exact rational coefficients.
std::string to_string(const Ternion& a);
Ternion parse_ternion(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Ternion& a);

const char* to_string(IdealClass c);

}  // namespace laguerre3

namespace Eigen {

template <>
struct NumTraits<laguerre3::Ternion> : GenericNumTraits<laguerre3::Ternion> {
  using Real = laguerre3::Ternion;
  using NonInteger = laguerre3::Ternion;
  using Nested = laguerre3::Ternion;
  using Literal = long;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 180,
    MulCost = 360,
  };
};

}  // namespace Eigen

namespace laguerre3 {

// 2x2 matrices over the algebra, acting on row pairs from the right.
using TMat2 = Eigen::Matrix<Ternion, 2, 2>;

inline Ternion det2(const TMat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
inline bool is_invertible(const TMat2& m) { return det2(m).is_unit(); }

// Adjugate divided by the (unit) determinant. Throws SingularMatrix.
TMat2 invert2(const TMat2& m);

}  // namespace laguerre3
