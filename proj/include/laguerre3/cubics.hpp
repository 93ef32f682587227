#pragma once

#include <Eigen/Dense>

#include <array>
#include <ostream>
#include <string>
#include <utility>

#include "laguerre3/poly.hpp"
#include "laguerre3/rational.hpp"

namespace laguerre3 {

// Point of P3(R) in homogeneous row coordinates (x0, x1, x2, x3); equality is
// up to a nonzero scalar. The affine chart is x0 = 1.
class HPoint3 {
 public:
  explicit HPoint3(const RowVec4& h);
  HPoint3(Rational x0, Rational x1, Rational x2, Rational x3);

  const RowVec4& h() const { return h_; }
  bool at_infinity() const { return h_(0).is_zero(); }
  std::array<Rational, 3> affine() const;  // throws AtInfinity when x0 = 0

  friend bool operator==(const HPoint3& a, const HPoint3& b);
  friend bool operator!=(const HPoint3& a, const HPoint3& b) { return !(a == b); }

 private:
  RowVec4 h_;
};

std::string to_string(const HPoint3& p);
std::ostream& operator<<(std::ostream& os, const HPoint3& p);

// Parameter of the canonical twisted cubic, homogeneous (s, t); the affine
// parameter is t/s where s != 0, and (0, 1) is the parameter of f.
struct CubicParam {
  Rational s, t;
  static CubicParam value(const Rational& q) { return {Rational(1), q}; }
  static CubicParam infinity() { return {Rational(0), Rational(1)}; }
};

inline bool same_param(const CubicParam& a, const CubicParam& b) {
  return (a.s * b.t - a.t * b.s).is_zero();
}

// R(s^3, s^2 t, s t^2, t^3). Throws BothZero on (0,0).
HPoint3 canonical_cubic(const Rational& s, const Rational& t);
inline HPoint3 canonical_cubic(const CubicParam& p) { return canonical_cubic(p.s, p.t); }

// Invertible 4x4 rational matrix acting on row vectors, v -> v * A.
class Collineation4 {
 public:
  explicit Collineation4(const Mat4& m);
  static Collineation4 identity() { return Collineation4(Mat4(Mat4::Identity())); }

  const Mat4& mat() const { return m_; }
  Collineation4 inverse() const { return Collineation4(Mat4(m_.inverse())); }

  HPoint3 apply(const HPoint3& p) const { return HPoint3(RowVec4(p.h() * m_)); }

  friend Collineation4 operator*(const Collineation4& a, const Collineation4& b) {
    return Collineation4(Mat4(a.m_ * b.m_));
  }
  friend bool operator==(const Collineation4& a, const Collineation4& b) {
    return a.m_ == b.m_;
  }

 private:
  Mat4 m_;
};

// Shear group with axis x1 + x2 = 0 in the direction of p3:
// x3 -> x3 + c (x1 + x2).
Collineation4 sigma(const Rational& c);
// One-parameter affine group from the two middle factors of the (I.1.2)
// factorization, linked by the common parameter.
Collineation4 gamma1(const Rational& a);
// One-parameter subgroup from the first two factors of the (I.1.2.3)
// factorization.
Collineation4 gamma2(const Rational& a);

// Induced action of a parameter change on the canonical cubic:
// canonical_cubic((s,t) * m) = canonical_cubic(s,t) * sym_cube(m).
// Multiplicative in m; these matrices stabilize the cubic as a set.
Collineation4 sym_cube(const Mat2& m);

// Fixes f = R(0,0,0,1), the tangent F: x0 = x1 = 0 and the osculating plane
// Phi: x0 = 0 setwise; equivalent to upper triangular with nonzero diagonal.
bool is_flag_preserving(const Mat4& a);
inline bool is_flag_preserving(const Collineation4& a) { return is_flag_preserving(a.mat()); }

// Representative with leading entry 1. Requires a00 != 0.
Mat4 normalize_leading(const Mat4& a);

// The compositions G1(g(s)) and G2(g(s)) with g(s) = (s^3, s^2, s, 1) * A,
// G1 = x0 x3 - x1 x2 (hyperbolic quadric), G2 = x1 x3 - x2^2 (cone).
// For flag-preserving A, G1 vanishes to order >= 3 and G2 to order >= 2.
struct SeriesPair {
  Poly g1, g2;
};
SeriesPair contact_series(const Collineation4& a);  // throws NotFlagPreserving

struct ContactOrder {
  bool infinite = false;
  int order = -1;
  static ContactOrder at(int k) { return {false, k}; }
  static ContactOrder infinity() { return {true, -1}; }
  bool at_least(int k) const { return infinite || order >= k; }
  friend bool operator==(const ContactOrder& a, const ContactOrder& b) {
    return a.infinite == b.infinite && (a.infinite || a.order == b.order);
  }
};
std::string to_string(const ContactOrder& o);

// Largest m such that the coefficients of s^0..s^m vanish in both series;
// infinite when both vanish identically (the image curve equals C).
ContactOrder contact_order_at_f(const Collineation4& a);  // throws NotFlagPreserving

enum class TypeBase { I, II, III, None };
const char* to_string(TypeBase b);

// Zero-pattern match after scaling the leading entry to 1. The patterns
// overlap; classify_type resolves by the fixed priority I > II > III.
bool matches_pattern(const Mat4& a, TypeBase base);

// Contact-table rows for the matched pattern (priority as above): rows
// 1..order-1 are necessary and sufficient for contact of the given order at
// f. order must be 2, 3 or 4. Throws NotATypeMatrix when no pattern fits.
bool table_predicate(const Collineation4& a, int order);

struct TypeTag {
  TypeBase base = TypeBase::None;
  int level = 0;  // number of consecutive satisfied table rows (0..3)
  friend bool operator==(const TypeTag& a, const TypeTag& b) {
    return a.base == b.base && a.level == b.level;
  }
};
TypeTag classify_type(const Collineation4& a);

// Factorization of a type-I matrix (leading entry scaled to 1) into a
// perspective affinity with axis x3 = 0, a shear towards p3, a stretching
// with factor a11 and a translation; the ordered product reproduces the
// normalized input and the decomposition is unique.
struct TypeIFactors {
  Collineation4 affinity, shear, stretching, translation;
  Collineation4 product() const { return affinity * shear * stretching * translation; }
};
TypeIFactors factor_type_I(const Collineation4& a);           // throws WrongType
std::array<Collineation4, 4> factor_I12(const Collineation4& a);   // throws WrongType
std::array<Collineation4, 3> factor_I123(const Collineation4& a);  // throws WrongType

// The unique collineation of the requested type with the same image of the
// canonical cubic as b: A = S(m) b for the unique reparametrization m fixing
// the parameter (0,1) of f that enforces the type's zero pattern.
Collineation4 unique_collineation(const Collineation4& b, TypeBase want);

// Tangent line at a parameter point, spanned by the two returned points.
std::pair<HPoint3, HPoint3> tangent_line_at(const CubicParam& u);
// Osculating plane at a parameter point, as the column of plane coefficients
// n with h * n = 0.
ColVec4 osculating_plane_at(const CubicParam& u);

// Coordinate change carrying the frame built from three distinct parameter
// points (p1 = tangent at u0 meet osculating plane at u3, p2 vice versa, unit
// point at u) to the standard frame; the cubic regains its canonical form.
Collineation4 frame_from_points(const CubicParam& u0, const CubicParam& u3,
                                const CubicParam& u);  // throws DegenerateSelection

}  // namespace laguerre3
