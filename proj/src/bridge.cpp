#include "laguerre3/bridge.hpp"

#include <Eigen/Dense>

namespace laguerre3 {

HPoint3 affine_to_projective(const Ternion& z) {
  return HPoint3(Rational(1), z.c0(), z.c1(), z.c2());
}

Ternion projective_to_affine(const HPoint3& p) {
  std::array<Rational, 3> a = p.affine();
  return Ternion(a[0], a[1], a[2]);
}

const char* to_string(LineKind k) {
  switch (k) {
    case LineKind::Regular: return "regular";
    case LineKind::Singular: return "singular";
    case LineKind::Vertical: return "vertical";
  }
  return "?";
}

const char* to_string(PlaneKind k) {
  return k == PlaneKind::Regular ? "regular" : "singular";
}

LineKind line_kind(const AffineLine& l) {
  switch (ideal_class(l.direction)) {
    case IdealClass::Unit: return LineKind::Regular;
    case IdealClass::MaximalIdeal: return LineKind::Singular;
    case IdealClass::Annihilator: return LineKind::Vertical;
    case IdealClass::Zero: break;
  }
  throw DomainError(Err::ZeroDirection, "line direction must not vanish");
}

PlaneKind plane_kind(const AffinePlane& pl) {
  if (pl.n1.is_zero() && pl.n2.is_zero() && pl.n3.is_zero())
    throw DomainError(Err::ZeroDirection, "plane normal must not vanish");
  // A direction (u1, u2, u3) in the plane is regular iff u1 != 0; such a
  // direction exists unless the normal is proportional to (1, 0, 0).
  return (pl.n2.is_zero() && pl.n3.is_zero()) ? PlaneKind::Singular : PlaneKind::Regular;
}

Ternion TernionCurve::eval(const Rational& t) const {
  Ternion acc = z[3];
  for (int k = 2; k >= 0; --k) acc = acc * Ternion(t) + z[k];
  return acc;
}

TernionCurve TernionCurve::from_normal_form(const NormalForm& nf) {
  TernionCurve c{{Ternion(Rational(0), nf.a02, nf.a03), Ternion(Rational(1), nf.a12, nf.a13),
                  Ternion(0), Ternion(0)}};
  // a33 is the top coefficient of x3 in every kind, but it sits at t^2 for
  // parabolas and at t^3 for cubic parabolas.
  if (nf.kind == ChainKind::Parabola) {
    c.z[2] = Ternion(Rational(0), Rational(0), nf.a33);
  } else if (nf.kind == ChainKind::CubicParabola) {
    c.z[2] = Ternion(Rational(0), nf.a22, nf.a23);
    c.z[3] = Ternion(Rational(0), Rational(0), nf.a33);
  }
  return c;
}

Mat4 extension_matrix(const TernionCurve& c) {
  Mat4 e;
  e(0, 0) = Rational(1);
  for (int k = 1; k < 4; ++k) e(k, 0) = Rational(0);
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 3; ++j) e(k, j + 1) = c.z[k].coeff(j);
  return e;
}

TernionCurve map_curve(const Collineation4& a, const TernionCurve& c) {
  const Mat4& m = a.mat();
  if (!m(1, 0).is_zero() || !m(2, 0).is_zero() || !m(3, 0).is_zero() || m(0, 0).is_zero())
    throw DomainError(Err::BadInput, "curve image requires an affine collineation");
  Mat4 e = extension_matrix(c) * m;
  Rational w = Rational(1) / e(0, 0);
  TernionCurve out;
  for (int k = 0; k < 4; ++k)
    out.z[k] = Ternion(e(k, 1) * w, e(k, 2) * w, e(k, 3) * w);
  return out;
}

Chain chain_of_curve(const TernionCurve& c) {
  ProjPoint p0 = ProjPoint::proper(c.eval(Rational(0)));
  ProjPoint p1 = ProjPoint::proper(c.eval(Rational(1)));
  ProjPoint p2 = ProjPoint::proper(c.eval(Rational(-1)));
  return chain_through(p0, p1, p2);
}

CurveExtension projective_extension(const Chain& c) {
  const NormalForm& nf = c.normal_form();
  switch (nf.kind) {
    case ChainKind::Line: {
      HPoint3 base = affine_to_projective(eval(nf, Rational(0)));
      HPoint3 at_inf(Rational(0), Rational(1), nf.a12, nf.a13);
      return LineExtension{base, at_inf};
    }
    case ChainKind::Parabola: {
      ConicExtension conic;
      conic.rows << Rational(1), Rational(0), nf.a02, nf.a03,
          Rational(0), Rational(1), nf.a12, nf.a13,
          Rational(0), Rational(0), Rational(0), nf.a33;
      conic.plane << -nf.a02, -nf.a12, Rational(1), Rational(0);
      return conic;
    }
    case ChainKind::CubicParabola:
      return CubicExtension{
          Collineation4(extension_matrix(TernionCurve::from_normal_form(nf)))};
  }
  throw DomainError(Err::InternalInconsistency, "unknown chain kind");
}

namespace {

bool real_independent_2(const Ternion& a, const Ternion& b) {
  // rank of the 2x3 real coefficient matrix
  Rational d01 = a.c0() * b.c1() - a.c1() * b.c0();
  Rational d02 = a.c0() * b.c2() - a.c2() * b.c0();
  Rational d12 = a.c1() * b.c2() - a.c2() * b.c1();
  return !(d01.is_zero() && d02.is_zero() && d12.is_zero());
}

bool real_independent_3(const Ternion& a, const Ternion& b, const Ternion& c) {
  Mat3 m;
  for (int j = 0; j < 3; ++j) {
    m(0, j) = a.coeff(j);
    m(1, j) = b.coeff(j);
    m(2, j) = c.coeff(j);
  }
  return !m.determinant().is_zero();
}

}  // namespace

bool is_admissible_parabola(const TernionCurve& c) {
  if (!c.z[3].is_zero() || c.z[2].is_zero() || !real_independent_2(c.z[1], c.z[2]))
    throw DomainError(Err::NotAParabola, "input does not parametrize a parabola");
  bool diameters_vertical = ideal_class(c.z[2]) == IdealClass::Annihilator;
  bool plane_regular = !real_part(c.z[1]).is_zero() || !real_part(c.z[2]).is_zero();
  return diameters_vertical && plane_regular;
}

bool AdmissibleCubicVerdict::value() const {
  if (by_normal_form != by_contact)
    throw DomainError(Err::InternalInconsistency, "admissibility decision paths disagree");
  return by_normal_form;
}

AdmissibleCubicVerdict is_admissible_cubic_checked(const TernionCurve& c) {
  if (!real_independent_3(c.z[1], c.z[2], c.z[3]))
    throw DomainError(Err::NotACubic, "input does not parametrize a cubic parabola");

  AdmissibleCubicVerdict verdict;

  // Normal-form route: x1 must be an affine function of the parameter; after
  // substituting it as the new parameter the coefficients must match the
  // chain parametrization with a33 = a22^2 != 0.
  const Rational &q = real_part(c.z[0]), &r = real_part(c.z[1]);
  if (real_part(c.z[2]).is_zero() && real_part(c.z[3]).is_zero() && !r.is_zero()) {
    // Substitute t = (u - q)/r so that x1 becomes the parameter. pw holds
    // the real u-coefficients of ((u - q)/r)^k.
    Ternion w[4];
    Rational ri = Rational(1) / r, shift = -q / r;
    Rational pw[4] = {Rational(1), Rational(0), Rational(0), Rational(0)};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) {
        Rational next[4] = {Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int i = 0; i < 3; ++i) {
          next[i + 1] += pw[i] * ri;
          next[i] += pw[i] * shift;
        }
        for (int i = 0; i < 4; ++i) pw[i] = next[i];
      }
      for (int i = 0; i < 4; ++i) w[i] += Ternion(pw[i]) * c.z[k];
    }
    Rational a22 = w[2].c1(), a33 = w[3].c2();
    verdict.by_normal_form =
        w[3].c1().is_zero() && !a22.is_zero() && a33 == a22 * a22;
  } else {
    verdict.by_normal_form = false;
  }

  // Contact route: the extension has second-order contact with the extension
  // of the standard cubic parabola (the canonical cubic itself) at f.
  Mat4 e = extension_matrix(c);
  if (is_flag_preserving(e))
    verdict.by_contact = contact_order_at_f(Collineation4(e)).at_least(2);
  else
    verdict.by_contact = false;

  return verdict;
}

bool is_admissible_cubic(const TernionCurve& c) { return is_admissible_cubic_checked(c).value(); }

bool ImproperVerdict::value() const {
  if (by_improper_point != by_second_path)
    throw DomainError(Err::InternalInconsistency, "improper-point decision paths disagree");
  return by_improper_point;
}

namespace {

// Coefficients of the parallel projection of the parabola nf2 onto the plane
// of nf1, along the singular direction e + r e2. Returns (a03*, a13*, a33*).
std::array<Rational, 3> project_parabola(const NormalForm& nf1, const NormalForm& nf2,
                                         const Rational& r) {
  Rational shift0 = nf1.a02 - nf2.a02;
  Rational shift1 = nf1.a12 - nf2.a12;
  return {nf2.a03 + r * shift0, nf2.a13 + r * shift1, nf2.a33};
}

}  // namespace

ImproperVerdict same_improper_point_parabolas_checked(const Chain& c1, const Chain& c2,
                                                      const Rational& r) {
  const NormalForm &nf1 = c1.normal_form(), &nf2 = c2.normal_form();
  if (nf1.kind != ChainKind::Parabola || nf2.kind != ChainKind::Parabola)
    throw DomainError(Err::NotParabolas, "both chains must be parabola chains");
  ImproperVerdict v;
  v.by_improper_point = c1.improper_point() == c2.improper_point();
  // The projected parabola is a translate of the proper part of c1 iff the
  // leading coefficients agree (the lower ones are absorbed by the shift).
  std::array<Rational, 3> proj = project_parabola(nf1, nf2, r);
  v.by_second_path = proj[2] == nf1.a33;
  return v;
}

bool same_improper_point_parabolas(const Chain& c1, const Chain& c2) {
  return same_improper_point_parabolas_checked(c1, c2).value();
}

namespace {

Collineation4 cubic_extension_of(const NormalForm& nf) {
  return Collineation4(extension_matrix(TernionCurve::from_normal_form(nf)));
}

ContactOrder extension_contact(const NormalForm& nf1, const NormalForm& nf2) {
  // Contact is preserved under collineations, so compare after pulling c1
  // back onto the canonical cubic.
  Collineation4 e1 = cubic_extension_of(nf1), e2 = cubic_extension_of(nf2);
  return contact_order_at_f(e2 * e1.inverse());
}

}  // namespace

ImproperVerdict same_improper_point_cubics_checked(const Chain& c1, const Chain& c2) {
  const NormalForm &nf1 = c1.normal_form(), &nf2 = c2.normal_form();
  if (nf1.kind != ChainKind::CubicParabola || nf2.kind != ChainKind::CubicParabola)
    throw DomainError(Err::NotCubics, "both chains must be cubic parabola chains");
  ImproperVerdict v;
  v.by_improper_point = c1.improper_point() == c2.improper_point();
  v.by_second_path = extension_contact(nf1, nf2).at_least(3);
  return v;
}

bool same_improper_point_cubics(const Chain& c1, const Chain& c2) {
  return same_improper_point_cubics_checked(c1, c2).value();
}

TMat2 normalizing_projectivity(const Rational& a, const Rational& b) {
  if (a.is_zero()) throw DomainError(Err::ZeroA, "leading improper coefficient must not vanish");
  TMat2 m;
  m << Ternion(a), Ternion(0), Ternion(-b / a), Ternion(1);
  return m;
}

bool chains_touch(const Chain& c1, const Chain& c2) {
  const NormalForm &nf1 = c1.normal_form(), &nf2 = c2.normal_form();
  if (nf1.kind != nf2.kind)
    throw DomainError(Err::KindMismatch, "touching is defined per chain kind");
  switch (nf1.kind) {
    case ChainKind::Line:
      // proper parts are parallel lines: directions (1, a12, a13) coincide
      return nf1.a12 == nf2.a12 && nf1.a13 == nf2.a13;
    case ChainKind::Parabola: {
      // translate in the direction of e2, for every projection direction
      // e + r e2; the offset along x1 is affine in r, so two directions
      // decide.
      for (long r : {0L, 1L}) {
        std::array<Rational, 3> proj = project_parabola(nf1, nf2, Rational(r));
        if (proj[2] != nf1.a33) return false;
        Rational v1 = (nf1.a13 - proj[1]) / (Rational(2) * nf1.a33);
        if (!v1.is_zero()) return false;
      }
      return true;
    }
    case ChainKind::CubicParabola:
      return extension_contact(nf1, nf2).at_least(4);
  }
  throw DomainError(Err::InternalInconsistency, "unknown chain kind");
}

}  // namespace laguerre3
