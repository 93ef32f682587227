#include "laguerre3/ternion.hpp"

#include <sstream>

namespace laguerre3 {

IdealClass ideal_class(const Ternion& a) {
  if (a.is_unit()) return IdealClass::Unit;
  if (!a.c1().is_zero()) return IdealClass::MaximalIdeal;
  if (!a.c2().is_zero()) return IdealClass::Annihilator;
  return IdealClass::Zero;
}

Ternion invert(const Ternion& a) {
  if (!a.is_unit()) throw DomainError(Err::NotAUnit, "ternion has no inverse: " + to_string(a));
  const Rational& c0 = a.c0();
  Rational r1 = a.c1() / c0;
  Rational r2 = a.c2() / c0;
  // (1 + r1 e + r2 e2)^-1 = 1 - r1 e + (r1^2 - r2) e2, then divide by c0.
  return Ternion(Rational(1) / c0, -r1 / c0, (r1 * r1 - r2) / c0);
}

std::string to_string(const Ternion& a) {
  return to_string(a.c0()) + " + " + to_string(a.c1()) + " e + " + to_string(a.c2()) + " e2";
}

Ternion parse_ternion(const std::string& text) {
  std::istringstream in(text);
  std::string c0, plus1, c1, e1, plus2, c2, e2;
  in >> c0;
  if (!in) throw DomainError(Err::BadInput, "empty ternion literal");
  in >> plus1 >> c1 >> e1 >> plus2 >> c2 >> e2;
  if (!in) {
    // bare real
    return Ternion(parse_rational(c0));
  }
  std::string tail;
  if (plus1 != "+" || plus2 != "+" || e1 != "e" || e2 != "e2" || (in >> tail))
    throw DomainError(Err::BadInput, "malformed ternion literal: '" + text + "'");
  return Ternion(parse_rational(c0), parse_rational(c1), parse_rational(c2));
}

std::ostream& operator<<(std::ostream& os, const Ternion& a) {
  return os << to_string(a);
}

const char* to_string(IdealClass c) {
  switch (c) {
    case IdealClass::Unit: return "unit";
    case IdealClass::MaximalIdeal: return "maximal-ideal";
    case IdealClass::Annihilator: return "annihilator";
    case IdealClass::Zero: return "zero";
  }
  return "?";
}

TMat2 invert2(const TMat2& m) {
  Ternion d = det2(m);
  if (!d.is_unit()) throw DomainError(Err::SingularMatrix, "2x2 matrix over the algebra is singular");
  Ternion di = invert(d);
  TMat2 r;
  r(0, 0) = m(1, 1) * di;
  r(0, 1) = -m(0, 1) * di;
  r(1, 0) = -m(1, 0) * di;
  r(1, 1) = m(0, 0) * di;
  return r;
}

}  // namespace laguerre3
