#pragma once

#include <array>
#include <variant>

#include "laguerre3/cubics.hpp"
#include "laguerre3/projline.hpp"

namespace laguerre3 {

// R(1, x1, x2, x3) and x1 + x2 e + x3 e2 are identified.
HPoint3 affine_to_projective(const Ternion& z);
Ternion projective_to_affine(const HPoint3& p);  // throws AtInfinity

enum class LineKind { Regular, Singular, Vertical };
enum class PlaneKind { Regular, Singular };
const char* to_string(LineKind k);
const char* to_string(PlaneKind k);

// The set R*direction + base inside the algebra. Singular when the
// direction lies in N, vertical when it lies in R e2.
struct AffineLine {
  Ternion direction, base;
};
LineKind line_kind(const AffineLine& l);  // throws ZeroDirection

// Plane n1 x1 + n2 x2 + n3 x3 = d. Regular iff it contains a regular line;
// the singular planes are exactly the planes x1 = const.
struct AffinePlane {
  Rational n1, n2, n3, d;
};
PlaneKind plane_kind(const AffinePlane& pl);  // throws ZeroDirection

// Polynomial curve over the algebra: z(t) = z0 + z1 t + z2 t^2 + z3 t^3.
struct TernionCurve {
  std::array<Ternion, 4> z;

  Ternion eval(const Rational& t) const;
  static TernionCurve from_normal_form(const NormalForm& nf);
};

// Coefficient matrix of the homogenized parametrization: the projective
// extension of the curve is the image of the canonical cubic under it
// (rows are the monomial coefficients, leading entry 1).
Mat4 extension_matrix(const TernionCurve& c);

// Image of a polynomial curve under an affine collineation (one fixing the
// plane at infinity; first column proportional to e0).
TernionCurve map_curve(const Collineation4& a, const TernionCurve& c);

// The chain whose proper part contains the given admissible curve.
Chain chain_of_curve(const TernionCurve& c);

struct LineExtension {
  HPoint3 base, infinite_point;
};
struct ConicExtension {
  // (s^2, s t, t^2) * rows parametrizes the conic; plane holds its plane.
  Eigen::Matrix<Rational, 3, 4> rows;
  ColVec4 plane;
};
struct CubicExtension {
  Collineation4 map;  // flag-preserving; canonical cubic maps onto the extension
};
using CurveExtension = std::variant<LineExtension, ConicExtension, CubicExtension>;

// The unique projective line / conic / twisted cubic containing the proper
// part of the chain.
CurveExtension projective_extension(const Chain& c);

// A parabola is admissible exactly when its diameters are vertical lines and
// its plane is regular. Throws NotAParabola unless the input is a genuine
// parabola (degree 2, independent linear and quadratic parts).
bool is_admissible_parabola(const TernionCurve& c);

// Both decision routes for admissibility of a cubic parabola: the normal
// form test (matches the chain parametrization with a33 = a22^2 != 0) and
// second-order contact of the projective extension with the extension of the
// standard cubic parabola at f. They agree; the checked variant exposes both.
struct AdmissibleCubicVerdict {
  bool by_normal_form = false;
  bool by_contact = false;
  bool value() const;  // throws InternalInconsistency if the routes disagree
};
AdmissibleCubicVerdict is_admissible_cubic_checked(const TernionCurve& c);  // throws NotACubic
bool is_admissible_cubic(const TernionCurve& c);

// Dual decision paths for "same improper point". For parabolas the second
// path projects one proper part onto the plane of the other along a
// non-vertical singular direction e + r e2 and tests for a translate; for
// cubic parabolas it tests third-order contact of the extensions at f.
struct ImproperVerdict {
  bool by_improper_point = false;
  bool by_second_path = false;
  bool value() const;  // throws InternalInconsistency if the paths disagree
};
ImproperVerdict same_improper_point_parabolas_checked(const Chain& c1, const Chain& c2,
                                                      const Rational& r = Rational(0));
bool same_improper_point_parabolas(const Chain& c1, const Chain& c2);  // throws NotParabolas
ImproperVerdict same_improper_point_cubics_checked(const Chain& c1, const Chain& c2);
bool same_improper_point_cubics(const Chain& c1, const Chain& c2);  // throws NotCubics

// alpha = [[a, 0], [-b/a, 1]]: takes the improper point L(1, -a e - b e2) to
// L(1, -e); on proper points z -> z a - b/a. Throws ZeroA.
TMat2 normalizing_projectivity(const Rational& a, const Rational& b);

// Touching at a common improper point. Lines: parallel proper parts.
// Parabolas: the projected proper part arises by a translation in the
// direction of e2, for every admissible projection direction. Cubic
// parabolas: fourth-order contact of the extensions at f. Mixed kinds raise
// KindMismatch.
bool chains_touch(const Chain& c1, const Chain& c2);

}  // namespace laguerre3
