#pragma once

#include <atomic>
#include <memory>
#include <ostream>
#include <string>

#include "laguerre3/ternion.hpp"

namespace laguerre3 {

// Point of P(L): the class L(u,v) of an admissible pair (u or v a unit),
// two pairs being identified when proportional by a unit. Stored in the
// canonical representative: proper form (z, 1) when v is a unit, improper
// form (1, n) with n in the maximal ideal otherwise. Point equality is
// therefore componentwise equality.
class ProjPoint {
 public:
  ProjPoint(const Ternion& u, const Ternion& v);

  static ProjPoint infinity() { return ProjPoint(Ternion(1), Ternion(0)); }
  static ProjPoint proper(const Ternion& z) { return ProjPoint(z, Ternion(1)); }
  static ProjPoint improper(const Ternion& n);

  bool is_proper() const { return proper_; }
  bool is_improper() const { return !proper_; }

  const Ternion& u() const { return u_; }
  const Ternion& v() const { return v_; }

  // The element z with this point = L(z, 1). Throws AtInfinity on improper points.
  const Ternion& proper_value() const;
  // The n in N with this point = L(1, n). Throws on proper points.
  const Ternion& improper_param() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.proper_ == b.proper_ && a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

 private:
  Ternion u_, v_;
  bool proper_ = true;
};

std::string to_string(const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

// det of the representatives lies in N; independent of the choice of
// admissible representatives. Parallel = non-distant.
bool is_parallel(const ProjPoint& p, const ProjPoint& q);

// Right action of GL2(L) on representatives. Throws SingularMatrix.
ProjPoint apply(const TMat2& m, const ProjPoint& p);

enum class ChainKind { Line, Parabola, CubicParabola };
const char* to_string(ChainKind k);

// Coefficients of the proper-part parametrization with x1 = t:
//   x2 = a02 + a12 t + a22 t^2
//   x3 = a03 + a13 t + a23 t^2 + a33 t^3
// Line: a22 = a23 = a33 = 0. Parabola: a22 = a23 = 0, a33 != 0 (the t^2
// coefficient of x3 carries the name a33). CubicParabola: a33 = a22^2 != 0.
struct NormalForm {
  ChainKind kind = ChainKind::Line;
  Rational a02, a12, a03, a13;
  Rational a33;
  Rational a22, a23;

  static NormalForm line(Rational a02 = 0, Rational a12 = 0, Rational a03 = 0,
                         Rational a13 = 0);
  static NormalForm parabola(Rational a02, Rational a12, Rational a03, Rational a13,
                             Rational a33);
  static NormalForm cubic_parabola(Rational a02, Rational a12, Rational a22,
                                   Rational a03, Rational a13, Rational a23,
                                   Rational a33);

  bool valid() const;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.kind == b.kind && a.a02 == b.a02 && a.a12 == b.a12 && a.a03 == b.a03 &&
           a.a13 == b.a13 && a.a33 == b.a33 && a.a22 == b.a22 && a.a23 == b.a23;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }
};

// Proper point of the parametrized chain at parameter t.
Ternion eval(const NormalForm& nf, const Rational& t);

// The unique improper point, by the closed forms: infinity for lines,
// L(1, -a33 e2) for parabolas, L(1, -a22 e + (-a23 + 2 a12 a22) e2) for
// cubic parabolas.
ProjPoint improper_point_of(const NormalForm& nf);

// Image of the embedded real projective line under an invertible matrix.
// The matrix is the intrinsic representation; the normal form is derived on
// first use and cached (idempotent, so concurrent first access is safe).
class Chain {
 public:
  explicit Chain(const TMat2& m);
  Chain(const Chain& o);
  Chain& operator=(const Chain& o);
  ~Chain();

  static Chain embedded_real();

  const TMat2& matrix() const { return m_; }

  const NormalForm& normal_form() const;

  // The unique point of the chain whose normalized form is improper.
  ProjPoint improper_point() const;

  // Membership: p = L((s,t) * M) for some real (s,t) != (0,0).
  bool contains(const ProjPoint& p) const;

  // Point at real parameters (s,t). Throws BothZero.
  ProjPoint point_at(const Rational& s, const Rational& t) const;

 private:
  TMat2 m_;
  mutable std::atomic<const NormalForm*> cache_{nullptr};
};

// The unique chain through three mutually distant points; p, q, r are the
// images of L(1,0), L(0,1), L(1,1). Throws NotMutuallyDistant.
Chain chain_through(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// Exact polynomial fit of the proper part (x1 is the parameter in every
// normal form); verified on extra samples. Equivalent to c.normal_form().
NormalForm classify(const Chain& c);

// A chain whose point set is the parametrized set of nf. Throws
// InvalidCoefficients when the kind invariant is violated.
Chain chain_from_normal_form(const NormalForm& nf);

Chain apply_chain(const TMat2& m, const Chain& c);

// Set equality: the transfer matrix is a unit multiple of a real matrix.
bool same_chain(const Chain& a, const Chain& b);

}  // namespace laguerre3
