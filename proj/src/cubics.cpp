#include "laguerre3/cubics.hpp"

#include <Eigen/Dense>

#include <sstream>

namespace laguerre3 {

HPoint3::HPoint3(const RowVec4& h) : h_(h) {
  if (h_(0).is_zero() && h_(1).is_zero() && h_(2).is_zero() && h_(3).is_zero())
    throw DomainError(Err::NotAPoint, "homogeneous coordinates must not all vanish");
}

HPoint3::HPoint3(Rational x0, Rational x1, Rational x2, Rational x3)
    : HPoint3(RowVec4{{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}}) {}

std::array<Rational, 3> HPoint3::affine() const {
  if (at_infinity()) throw DomainError(Err::AtInfinity, "point lies in the plane at infinity");
  return {h_(1) / h_(0), h_(2) / h_(0), h_(3) / h_(0)};
}

bool operator==(const HPoint3& a, const HPoint3& b) {
  int k = -1;
  for (int i = 0; i < 4 && k < 0; ++i)
    if (!a.h_(i).is_zero()) k = i;
  if (k < 0 || b.h_(k).is_zero()) return false;
  for (int i = 0; i < 4; ++i)
    if (a.h_(i) * b.h_(k) != b.h_(i) * a.h_(k)) return false;
  return true;
}

std::string to_string(const HPoint3& p) {
  std::string out = "R(";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ", ";
    out += to_string(p.h()(i));
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const HPoint3& p) { return os << to_string(p); }

HPoint3 canonical_cubic(const Rational& s, const Rational& t) {
  if (s.is_zero() && t.is_zero())
    throw DomainError(Err::BothZero, "(0,0) is not a parameter of the cubic");
  return HPoint3(s * s * s, s * s * t, s * t * t, t * t * t);
}

Collineation4::Collineation4(const Mat4& m) : m_(m) {
  if (m_.determinant().is_zero())
    throw DomainError(Err::SingularMatrix, "collineation matrix must be regular");
}

Collineation4 sigma(const Rational& c) {
  Mat4 m = Mat4::Identity();
  m(1, 3) = c;
  m(2, 3) = c;
  return Collineation4(m);
}

Collineation4 gamma1(const Rational& a) {
  Mat4 m = Mat4::Identity();
  m(0, 1) = a;
  m(2, 3) = -a;
  return Collineation4(m);
}

Collineation4 gamma2(const Rational& a) {
  Mat4 m = Mat4::Identity();
  m(0, 2) = a;
  m(1, 3) = Rational(2) * a;
  return Collineation4(m);
}

Collineation4 sym_cube(const Mat2& m) {
  const Rational &u = m(0, 0), &v = m(0, 1), &w = m(1, 0), &x = m(1, 1);
  if ((u * x - v * w).is_zero())
    throw DomainError(Err::SingularMatrix, "parameter change must be invertible");
  Mat4 s;
  s << u * u * u, u * u * v, u * v * v, v * v * v,
      Rational(3) * u * u * w, u * u * x + Rational(2) * u * v * w,
      Rational(2) * u * v * x + w * v * v, Rational(3) * v * v * x,
      Rational(3) * u * w * w, Rational(2) * u * w * x + w * w * v,
      u * x * x + Rational(2) * w * v * x, Rational(3) * v * x * x,
      w * w * w, w * w * x, w * x * x, x * x * x;
  return Collineation4(s);
}

bool is_flag_preserving(const Mat4& a) {
  for (int i = 0; i < 4; ++i) {
    if (a(i, i).is_zero()) return false;
    for (int j = 0; j < i; ++j)
      if (!a(i, j).is_zero()) return false;
  }
  return true;
}

Mat4 normalize_leading(const Mat4& a) {
  if (a(0, 0).is_zero())
    throw DomainError(Err::NotFlagPreserving, "leading entry vanishes");
  Mat4 out = a;
  Rational inv = Rational(1) / a(0, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) *= inv;
  return out;
}

SeriesPair contact_series(const Collineation4& a) {
  if (!is_flag_preserving(a.mat()))
    throw DomainError(Err::NotFlagPreserving, "matrix does not preserve the flag (f, F, Phi)");
  Mat4 m = normalize_leading(a.mat());
  // g_j(s) = sum_i monomial_i(s) m(i, j), monomials (s^3, s^2, s, 1).
  std::array<Poly, 4> g;
  for (int j = 0; j < 4; ++j) g[j] = Poly({m(3, j), m(2, j), m(1, j), m(0, j)});
  return SeriesPair{g[0] * g[3] - g[1] * g[2], g[1] * g[3] - g[2] * g[2]};
}

std::string to_string(const ContactOrder& o) {
  return o.infinite ? "infinite" : std::to_string(o.order);
}

ContactOrder contact_order_at_f(const Collineation4& a) {
  SeriesPair sp = contact_series(a);
  if (sp.g1.is_zero() && sp.g2.is_zero()) return ContactOrder::infinity();
  int v1 = sp.g1.is_zero() ? INT32_MAX : sp.g1.order_of_vanishing();
  int v2 = sp.g2.is_zero() ? INT32_MAX : sp.g2.order_of_vanishing();
  return ContactOrder::at(std::min(v1, v2) - 1);
}

const char* to_string(TypeBase b) {
  switch (b) {
    case TypeBase::I: return "I";
    case TypeBase::II: return "II";
    case TypeBase::III: return "III";
    case TypeBase::None: return "none";
  }
  return "?";
}

bool matches_pattern(const Mat4& a, TypeBase base) {
  if (!is_flag_preserving(a)) return false;
  Mat4 m = normalize_leading(a);
  switch (base) {
    case TypeBase::I:
      return m(1, 2).is_zero() && m(2, 2) == m(1, 1);
    case TypeBase::II:
      return m(2, 3).is_zero() && m(3, 3) == m(2, 2);
    case TypeBase::III:
      return m(0, 1).is_zero() && m(1, 1) == Rational(1);
    case TypeBase::None:
      return false;
  }
  return false;
}

namespace {

TypeBase match_base(const Mat4& a) {
  for (TypeBase b : {TypeBase::I, TypeBase::II, TypeBase::III})
    if (matches_pattern(a, b)) return b;
  return TypeBase::None;
}

// Contact-table row conditions per type, on the normalized matrix.
bool table_row(const Mat4& m, TypeBase base, int row) {
  const Rational one(1);
  switch (base) {
    case TypeBase::I:
      if (row == 1) return m(3, 3) == m(1, 1);
      if (row == 2) return m(1, 1) == one && m(2, 3) == -m(0, 1);
      return m(0, 1).is_zero() && m(1, 3) == Rational(2) * m(0, 2);
    case TypeBase::II:
      if (row == 1) return m(2, 2) == m(1, 1);
      if (row == 2) return m(1, 1) == one && m(0, 1) == Rational(2) * m(1, 2);
      return m(1, 2).is_zero() && m(1, 3) == Rational(2) * m(0, 2);
    case TypeBase::III:
      if (row == 1) return m(3, 3) == m(2, 2) * m(2, 2);
      if (row == 2) return m(2, 2) == one && m(2, 3) == Rational(2) * m(1, 2);
      return m(1, 2).is_zero() && m(1, 3) == Rational(2) * m(0, 2);
    case TypeBase::None:
      break;
  }
  return false;
}

}  // namespace

bool table_predicate(const Collineation4& a, int order) {
  if (order < 2 || order > 4)
    throw DomainError(Err::BadInput, "table is stated for contact orders 2, 3, 4");
  TypeBase base = match_base(a.mat());
  if (base == TypeBase::None)
    throw DomainError(Err::NotATypeMatrix, "matrix matches none of the type patterns");
  Mat4 m = normalize_leading(a.mat());
  for (int row = 1; row <= order - 1; ++row)
    if (!table_row(m, base, row)) return false;
  return true;
}

TypeTag classify_type(const Collineation4& a) {
  TypeBase base = match_base(a.mat());
  if (base == TypeBase::None) return TypeTag{TypeBase::None, 0};
  Mat4 m = normalize_leading(a.mat());
  int level = 0;
  while (level < 3 && table_row(m, base, level + 1)) ++level;
  return TypeTag{base, level};
}

TypeIFactors factor_type_I(const Collineation4& a) {
  if (!matches_pattern(a.mat(), TypeBase::I))
    throw DomainError(Err::WrongType, "factorization requires a type I matrix");
  Mat4 m = normalize_leading(a.mat());
  const Rational& a11 = m(1, 1);
  Mat4 affinity = Mat4::Identity();
  affinity(3, 3) = m(3, 3) / a11;
  Mat4 shear = Mat4::Identity();
  shear(1, 3) = m(1, 3) / a11;
  shear(2, 3) = m(2, 3) / a11;
  Mat4 stretching = Mat4::Identity();
  stretching(1, 1) = a11;
  stretching(2, 2) = a11;
  stretching(3, 3) = a11;
  Mat4 translation = Mat4::Identity();
  translation(0, 1) = m(0, 1);
  translation(0, 2) = m(0, 2);
  translation(0, 3) = m(0, 3);
  return TypeIFactors{Collineation4(affinity), Collineation4(shear),
                      Collineation4(stretching), Collineation4(translation)};
}

std::array<Collineation4, 4> factor_I12(const Collineation4& a) {
  TypeTag tag = classify_type(a);
  if (!(tag.base == TypeBase::I && tag.level >= 2))
    throw DomainError(Err::WrongType, "factorization requires a matrix of type I.1.2");
  Mat4 m = normalize_leading(a.mat());
  const Rational& a01 = m(0, 1);
  Mat4 f0 = Mat4::Identity();
  f0(1, 3) = m(1, 3);  // shear with axis x1 = 0
  Mat4 f1 = Mat4::Identity();
  f1(2, 3) = -a01;     // shear with axis x2 = 0
  Mat4 f2 = Mat4::Identity();
  f2(0, 1) = a01;      // translation towards p1, same parameter
  Mat4 f3 = Mat4::Identity();
  f3(0, 2) = m(0, 2);  // translation parallel to x1 = 0
  f3(0, 3) = m(0, 3);
  return {Collineation4(f0), Collineation4(f1), Collineation4(f2), Collineation4(f3)};
}

std::array<Collineation4, 3> factor_I123(const Collineation4& a) {
  TypeTag tag = classify_type(a);
  if (!(tag.base == TypeBase::I && tag.level >= 3))
    throw DomainError(Err::WrongType, "factorization requires a matrix of type I.1.2.3");
  Mat4 m = normalize_leading(a.mat());
  const Rational& a02 = m(0, 2);
  Mat4 f0 = Mat4::Identity();
  f0(1, 3) = Rational(2) * a02;
  Mat4 f1 = Mat4::Identity();
  f1(0, 2) = a02;
  Mat4 f2 = Mat4::Identity();
  f2(0, 3) = m(0, 3);
  return {Collineation4(f0), Collineation4(f1), Collineation4(f2)};
}

Collineation4 unique_collineation(const Collineation4& b, TypeBase want) {
  if (want == TypeBase::None)
    throw DomainError(Err::BadInput, "a concrete type I, II or III is required");
  if (!is_flag_preserving(b.mat()))
    throw DomainError(Err::NotFlagPreserving, "matrix does not preserve the flag (f, F, Phi)");
  Mat4 m = normalize_leading(b.mat());
  const Rational &b01 = m(0, 1), &b11 = m(1, 1), &b12 = m(1, 2), &b22 = m(2, 2),
                 &b23 = m(2, 3), &b33 = m(3, 3);
  // Reparametrizations fixing the parameter (0,1) of f are the upper
  // triangular elements of GL2(R); with the scale fixed the two remaining
  // unknowns are determined by the type's zero pattern, one linearly and one
  // by a single division, so the solution is unique.
  Rational v, x;
  switch (want) {
    case TypeBase::I:
      v = -b12 / (Rational(2) * b22);
      x = b11 / b22;
      break;
    case TypeBase::II:
      v = -b23 / (Rational(3) * b33);
      x = b22 / b33;
      break;
    case TypeBase::III:
      v = -b01 / b11;
      x = Rational(1) / b11;
      break;
    default:
      throw DomainError(Err::NoSolution, "unreachable");
  }
  if (x.is_zero()) throw DomainError(Err::NoSolution, "degenerate reparametrization");
  Mat2 rep;
  rep << Rational(1), v, Rational(0), x;
  Mat4 result = normalize_leading((sym_cube(rep) * b).mat());
  if (!matches_pattern(result, want))
    throw DomainError(Err::NoSolution, "recovered matrix misses the requested pattern");
  return Collineation4(result);
}

std::pair<HPoint3, HPoint3> tangent_line_at(const CubicParam& u) {
  const Rational &s = u.s, &t = u.t;
  if (s.is_zero() && t.is_zero())
    throw DomainError(Err::BothZero, "(0,0) is not a parameter of the cubic");
  // Partial derivatives of (s^3, s^2 t, s t^2, t^3); their span is the
  // tangent line (it contains the point by the Euler relation).
  RowVec4 ds{{Rational(3) * s * s, Rational(2) * s * t, t * t, Rational(0)}};
  RowVec4 dt{{Rational(0), s * s, Rational(2) * s * t, Rational(3) * t * t}};
  return {HPoint3(ds), HPoint3(dt)};
}

namespace {

// Generalized cross product in R^4: the column n with r_i . n = 0.
ColVec4 cross4(const RowVec4& r0, const RowVec4& r1, const RowVec4& r2) {
  Mat3 minor;
  ColVec4 n;
  Rational sign(1);
  for (int k = 0; k < 4; ++k) {
    int cols[3], c = 0;
    for (int j = 0; j < 4; ++j)
      if (j != k) cols[c++] = j;
    for (int i = 0; i < 3; ++i) {
      const RowVec4& r = i == 0 ? r0 : (i == 1 ? r1 : r2);
      for (int j = 0; j < 3; ++j) minor(i, j) = r(cols[j]);
    }
    n(k) = sign * minor.determinant();
    sign = -sign;
  }
  return n;
}

}  // namespace

ColVec4 osculating_plane_at(const CubicParam& u) {
  const Rational &s = u.s, &t = u.t;
  if (s.is_zero() && t.is_zero())
    throw DomainError(Err::BothZero, "(0,0) is not a parameter of the cubic");
  // Second partials span the osculating plane.
  RowVec4 dss{{Rational(6) * s, Rational(2) * t, Rational(0), Rational(0)}};
  RowVec4 dst{{Rational(0), Rational(2) * s, Rational(2) * t, Rational(0)}};
  RowVec4 dtt{{Rational(0), Rational(0), Rational(2) * s, Rational(6) * t}};
  ColVec4 n = cross4(dss, dst, dtt);
  if (n(0).is_zero() && n(1).is_zero() && n(2).is_zero() && n(3).is_zero())
    throw DomainError(Err::InternalInconsistency, "degenerate osculating plane");
  return n;
}

namespace {

HPoint3 line_meet_plane(const std::pair<HPoint3, HPoint3>& line, const ColVec4& n) {
  Rational da = (line.first.h() * n)(0);
  Rational db = (line.second.h() * n)(0);
  if (da.is_zero() && db.is_zero())
    throw DomainError(Err::DegenerateSelection, "tangent line lies in the plane");
  return HPoint3(RowVec4(db * line.first.h() - da * line.second.h()));
}

}  // namespace

Collineation4 frame_from_points(const CubicParam& u0, const CubicParam& u3,
                                const CubicParam& u) {
  if (same_param(u0, u3) || same_param(u0, u) || same_param(u3, u))
    throw DomainError(Err::DegenerateSelection, "the three parameters must be distinct");
  HPoint3 p0 = canonical_cubic(u0);
  HPoint3 p3 = canonical_cubic(u3);
  HPoint3 p = canonical_cubic(u);
  HPoint3 p1 = line_meet_plane(tangent_line_at(u0), osculating_plane_at(u3));
  HPoint3 p2 = line_meet_plane(tangent_line_at(u3), osculating_plane_at(u0));
  Mat4 r;
  r.row(0) = p0.h();
  r.row(1) = p1.h();
  r.row(2) = p2.h();
  r.row(3) = p3.h();
  if (r.determinant().is_zero())
    throw DomainError(Err::DegenerateSelection, "selected points do not span a frame");
  Mat4 rinv = r.inverse();
  RowVec4 lambda = p.h() * rinv;
  Mat4 a = rinv;
  for (int j = 0; j < 4; ++j) {
    if (lambda(j).is_zero())
      throw DomainError(Err::DegenerateSelection, "unit point is not in general position");
    for (int i = 0; i < 4; ++i) a(i, j) /= lambda(j);
  }
  return Collineation4(a);
}

}  // namespace laguerre3
