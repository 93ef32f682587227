#include <doctest.h>

#include "testutil.hpp"

using namespace lagtest;

namespace {

TernionCurve curve4(Ternion z0, Ternion z1, Ternion z2, Ternion z3) {
  return TernionCurve{{std::move(z0), std::move(z1), std::move(z2), std::move(z3)}};
}

const TernionCurve kStandardCubic =
    curve4(Ternion(0), Ternion(1, 0, 0), Ternion(0, 1, 0), Ternion(0, 0, 1));

Chain gamma1_image_chain(const Rational& a) {
  return chain_of_curve(map_curve(gamma1(a), kStandardCubic));
}

Chain gamma2_image_chain(const Rational& a) {
  return chain_of_curve(map_curve(gamma2(a), kStandardCubic));
}

}  // namespace

TEST_CASE("affine-projective dictionary") {
  CHECK(affine_to_projective(Ternion(0)) == HPoint3(1, 0, 0, 0));
  CHECK(affine_to_projective(Ternion(1, 2, 3)) == HPoint3(1, 1, 2, 3));
  CHECK(projective_to_affine(HPoint3(2, 2, 4, 6)) == Ternion(1, 2, 3));
  CHECK_THROWS_AS(projective_to_affine(HPoint3(0, 0, 0, 1)), DomainError);
}

TEST_CASE("line and plane kinds") {
  CHECK(line_kind({Ternion(1, 1, 0), Ternion(0)}) == LineKind::Regular);
  CHECK(line_kind({eps2(), Ternion(5)}) == LineKind::Vertical);
  CHECK(line_kind({eps(), Ternion(0)}) == LineKind::Singular);
  CHECK_THROWS_AS(line_kind({Ternion(0), Ternion(0)}), DomainError);

  // the maximal ideal N is the plane x1 = 0
  CHECK(plane_kind({Rational(1), Rational(0), Rational(0), Rational(0)}) == PlaneKind::Singular);
  CHECK(plane_kind({Rational(0), Rational(1), Rational(0), Rational(2)}) == PlaneKind::Regular);
  CHECK(plane_kind({Rational(2), Rational(-1), Rational(3), Rational(0)}) == PlaneKind::Regular);
  CHECK_THROWS_AS(plane_kind({Rational(0), Rational(0), Rational(0), Rational(1)}), DomainError);
}

TEST_CASE("projective extensions") {
  Chain d = chain_from_normal_form(NormalForm::cubic_parabola(0, 0, 1, 0, 0, 0, 1));
  auto ext = projective_extension(d);
  auto* cubic = std::get_if<CubicExtension>(&ext);
  REQUIRE(cubic != nullptr);
  CHECK(cubic->map == Collineation4::identity());

  Chain real = Chain::embedded_real();
  auto lext = projective_extension(real);
  auto* line = std::get_if<LineExtension>(&lext);
  REQUIRE(line != nullptr);
  CHECK(line->base == HPoint3(1, 0, 0, 0));
  CHECK(line->infinite_point == HPoint3(0, 1, 0, 0));
  // the infinite point avoids F: x0 = x1 = 0
  CHECK(!line->infinite_point.h()(1).is_zero());

  Chain par = chain_from_normal_form(NormalForm::parabola(0, 0, 0, 0, 1));
  auto cext = projective_extension(par);
  auto* conic = std::get_if<ConicExtension>(&cext);
  REQUIRE(conic != nullptr);
  // plane x2 = 0, through f
  CHECK(conic->plane(0).is_zero());
  CHECK(conic->plane(1).is_zero());
  CHECK(!conic->plane(2).is_zero());
  CHECK((HPoint3(0, 0, 0, 1).h() * conic->plane)(0).is_zero());
  // the parameter (0,1) row reaches f
  CHECK(HPoint3(RowVec4(conic->rows.row(2))) == HPoint3(0, 0, 0, 1));
}

TEST_CASE("admissible parabolas") {
  // x2 = 0, x3 = t^2: diameters vertical, plane regular
  CHECK(is_admissible_parabola(curve4(Ternion(0), Ternion(1, 0, 0), eps2(), Ternion(0))));
  // x2 = t^2, x3 = 0: diameters towards eps
  CHECK(!is_admissible_parabola(curve4(Ternion(0), Ternion(1, 0, 0), eps(), Ternion(0))));
  // inside the singular plane x1 = 0
  CHECK(!is_admissible_parabola(curve4(Ternion(0), eps(), eps2(), Ternion(0))));

  // degenerate inputs are rejected
  CHECK_THROWS_AS(is_admissible_parabola(curve4(Ternion(0), Ternion(1), Ternion(0), Ternion(0))),
                  DomainError);
  CHECK_THROWS_AS(is_admissible_parabola(
                      curve4(Ternion(0), eps2(), eps2() * Ternion(2), Ternion(0))),
                  DomainError);
  CHECK_THROWS_AS(is_admissible_parabola(kStandardCubic), DomainError);
}

TEST_CASE("admissible cubic parabolas") {
  CHECK(is_admissible_cubic(kStandardCubic));
  CHECK(!is_admissible_cubic(
      curve4(Ternion(0), Ternion(1, 0, 0), Ternion(0, 1, 0), Ternion(0, 0, 2))));
  CHECK(is_admissible_cubic(
      curve4(Ternion(0), Ternion(1, 0, 0), Ternion(0, 2, 0), Ternion(0, 0, 4))));

  // an affine reparametrization does not change the curve
  TernionCurve repar = curve4(kStandardCubic.eval(Rational(1)),
                              Ternion(2, 4, 6),    // d/dt of z(2t+1) terms collected:
                              Ternion(0, 4, 12),   // z(2t+1) = (2t+1) + (2t+1)^2 e + (2t+1)^3 e2
                              Ternion(0, 0, 8));
  CHECK(is_admissible_cubic(repar));

  // a cubic with nonlinear real part is not a chain's proper part
  CHECK(!is_admissible_cubic(
      curve4(Ternion(0), Ternion(1, 0, 0), Ternion(1, 1, 0), Ternion(0, 0, 1))));

  CHECK_THROWS_AS(is_admissible_cubic(curve4(Ternion(0), Ternion(1), eps(), eps() * Ternion(2))),
                  DomainError);
}

TEST_CASE("admissibility decision paths agree") {
  Rng rng(157);
  for (int i = 0; i < 120; ++i) {
    // half admissible, half tampered
    NormalForm nf = rng.normal_form(ChainKind::CubicParabola);
    TernionCurve c = TernionCurve::from_normal_form(nf);
    if (i % 2) c.z[3] = Ternion(Rational(0), Rational(0), nf.a33 + rng.nonzero_rat());
    // reparametrize t -> alpha t + beta half of the time
    if (rng.integer(0, 1)) {
      Rational alpha = rng.nonzero_rat(), beta = rng.rat();
      TernionCurve r{{c.eval(beta), Ternion(0), Ternion(0), Ternion(0)}};
      // coefficients of z(alpha t + beta) by explicit expansion
      Ternion a1 = c.z[1] + Ternion(Rational(2) * beta) * c.z[2] +
                   Ternion(Rational(3) * beta * beta) * c.z[3];
      Ternion a2 = c.z[2] + Ternion(Rational(3) * beta) * c.z[3];
      r.z[1] = Ternion(alpha) * a1;
      r.z[2] = Ternion(alpha * alpha) * a2;
      r.z[3] = Ternion(alpha * alpha * alpha) * c.z[3];
      c = r;
    }
    AdmissibleCubicVerdict v;
    try {
      v = is_admissible_cubic_checked(c);
    } catch (const DomainError&) {
      continue;  // tampering degenerated the curve
    }
    CHECK(v.by_normal_form == v.by_contact);
    CHECK(v.value() == (i % 2 == 0));
  }
}

TEST_CASE("same improper point for parabolas") {
  Chain c1 = chain_from_normal_form(NormalForm::parabola(0, 0, 0, 0, 1));
  Chain c2 = chain_from_normal_form(NormalForm::parabola(0, 1, 5, 0, 1));
  Chain c3 = chain_from_normal_form(NormalForm::parabola(0, 0, 0, 0, 2));
  CHECK(same_improper_point_parabolas(c1, c2));
  CHECK(!same_improper_point_parabolas(c1, c3));
  CHECK(same_improper_point_parabolas(c1, c1));
  CHECK_THROWS_AS(same_improper_point_parabolas(c1, Chain::embedded_real()), DomainError);

  Rng rng(163);
  for (int i = 0; i < 120; ++i) {
    Chain a = rng.chain(ChainKind::Parabola);
    NormalForm nf = rng.normal_form(ChainKind::Parabola);
    if (i % 2) nf.a33 = a.normal_form().a33;  // force a shared improper point
    Chain b = chain_from_normal_form(nf);
    ImproperVerdict v = same_improper_point_parabolas_checked(a, b);
    CHECK(v.by_improper_point == v.by_second_path);
    // the projection direction is irrelevant
    ImproperVerdict w = same_improper_point_parabolas_checked(a, b, rng.rat());
    CHECK(w.by_second_path == v.by_second_path);
    if (i % 2) CHECK(v.value());
  }
}

TEST_CASE("same improper point for cubic parabolas") {
  Chain d = chain_from_normal_form(NormalForm::cubic_parabola(0, 0, 1, 0, 0, 0, 1));
  CHECK(same_improper_point_cubics(d, gamma1_image_chain(Rational(1))));
  CHECK(same_improper_point_cubics(d, d));

  Chain other = chain_from_normal_form(NormalForm::cubic_parabola(0, 0, 2, 0, 0, 0, 4));
  CHECK(!same_improper_point_cubics(d, other));
  CHECK_THROWS_AS(same_improper_point_cubics(d, Chain::embedded_real()), DomainError);

  Rng rng(167);
  for (int i = 0; i < 120; ++i) {
    NormalForm nf1 = rng.normal_form(ChainKind::CubicParabola);
    NormalForm nf2 = rng.normal_form(ChainKind::CubicParabola);
    if (i % 2) {
      // construct a partner through the same improper point
      nf2.a22 = nf1.a22;
      nf2.a33 = nf1.a33;
      nf2.a23 = nf1.a23 + Rational(2) * nf1.a22 * (nf2.a12 - nf1.a12);
    }
    Chain a = chain_from_normal_form(nf1), b = chain_from_normal_form(nf2);
    ImproperVerdict v = same_improper_point_cubics_checked(a, b);
    CHECK(v.by_improper_point == v.by_second_path);
    if (i % 2) CHECK(v.value());
  }
}

TEST_CASE("normalizing projectivity") {
  TMat2 id = normalizing_projectivity(Rational(1), Rational(0));
  CHECK(id(0, 0) == Ternion(1));
  CHECK(id(0, 1) == Ternion(0));
  CHECK(id(1, 0) == Ternion(0));
  CHECK(id(1, 1) == Ternion(1));

  CHECK(apply(normalizing_projectivity(Rational(2), Rational(0)),
              ProjPoint::improper(Ternion(0, -2, 0))) ==
        ProjPoint::improper(Ternion(0, -1, 0)));

  CHECK(apply(normalizing_projectivity(Rational(1), Rational(3)),
              ProjPoint::proper(Ternion(5))) == ProjPoint::proper(Ternion(2)));

  CHECK_THROWS_AS(normalizing_projectivity(Rational(0), Rational(1)), DomainError);

  Rng rng(173);
  for (int i = 0; i < 60; ++i) {
    Rational a = rng.nonzero_rat(), b = rng.rat();
    NormalForm nf = rng.normal_form(ChainKind::CubicParabola);
    nf.a22 = a;
    nf.a33 = a * a;
    nf.a23 = b + Rational(2) * nf.a12 * a;  // improper point L(1, -a e - b e2)
    Chain c = chain_from_normal_form(nf);
    CHECK(c.improper_point() == ProjPoint::improper(Ternion(Rational(0), -a, -b)));
    Chain moved = apply_chain(normalizing_projectivity(a, b), c);
    CHECK(moved.improper_point() == ProjPoint::improper(Ternion(0, -1, 0)));
  }
}

TEST_CASE("contact orders survive the normalizing projectivity") {
  Rng rng(179);
  for (int i = 0; i < 40; ++i) {
    Rational a = rng.nonzero_rat(), b = rng.rat();
    NormalForm nf1 = rng.normal_form(ChainKind::CubicParabola);
    NormalForm nf2 = rng.normal_form(ChainKind::CubicParabola);
    Chain c1 = chain_from_normal_form(nf1), c2 = chain_from_normal_form(nf2);
    TMat2 alpha = normalizing_projectivity(a, b);
    Chain m1 = apply_chain(alpha, c1), m2 = apply_chain(alpha, c2);
    ImproperVerdict before = same_improper_point_cubics_checked(c1, c2);
    ImproperVerdict after = same_improper_point_cubics_checked(m1, m2);
    CHECK(before.by_second_path == after.by_second_path);
    CHECK(chains_touch(c1, c2) == chains_touch(m1, m2));
  }
}

TEST_CASE("touching chains") {
  // parallel line chains
  Chain l1 = Chain::embedded_real();
  Chain l2 = chain_from_normal_form(NormalForm::line(0, 0, 1, 0));
  Chain l3 = chain_from_normal_form(NormalForm::line(0, 1, 0, 0));
  CHECK(chains_touch(l1, l2));
  CHECK(!chains_touch(l1, l3));

  // parabolas shifted by eps^2 touch
  Chain p1 = chain_from_normal_form(NormalForm::parabola(0, 0, 0, 0, 1));
  Chain p2 = chain_from_normal_form(NormalForm::parabola(0, 0, 1, 0, 1));
  CHECK(chains_touch(p1, p2));
  // same improper point but different tangent plane at infinity: no touch
  Chain p3 = chain_from_normal_form(NormalForm::parabola(0, 1, 0, 0, 1));
  CHECK(same_improper_point_parabolas(p1, p3));
  CHECK(!chains_touch(p1, p3));
  Chain p4 = chain_from_normal_form(NormalForm::parabola(0, 0, 0, 1, 1));
  CHECK(!chains_touch(p1, p4));

  // third-order contact is not enough for cubic chains
  Chain d = chain_from_normal_form(NormalForm::cubic_parabola(0, 0, 1, 0, 0, 0, 1));
  CHECK(!chains_touch(d, gamma1_image_chain(Rational(1))));
  // fourth-order contact is
  CHECK(chains_touch(d, gamma2_image_chain(Rational(1))));
  CHECK(chains_touch(d, d));

  CHECK_THROWS_AS(chains_touch(l1, p1), DomainError);
}

TEST_CASE("touch is symmetric and reflexive on cubic chains") {
  Rng rng(197);
  for (int i = 0; i < 40; ++i) {
    Chain a = rng.chain(ChainKind::CubicParabola);
    CHECK(chains_touch(a, a));
    Chain b = rng.chain(ChainKind::CubicParabola);
    CHECK(chains_touch(a, b) == chains_touch(b, a));
  }
}

TEST_CASE("parabola touch equals coefficient equality") {
  Rng rng(181);
  for (int i = 0; i < 120; ++i) {
    NormalForm nf1 = rng.normal_form(ChainKind::Parabola);
    NormalForm nf2 = rng.normal_form(ChainKind::Parabola);
    switch (rng.integer(0, 2)) {
      case 0: nf2.a33 = nf1.a33; nf2.a12 = nf1.a12; nf2.a13 = nf1.a13; break;
      case 1: nf2.a33 = nf1.a33; break;
      default: break;
    }
    Chain a = chain_from_normal_form(nf1), b = chain_from_normal_form(nf2);
    bool expected = nf1.a33 == nf2.a33 && nf1.a12 == nf2.a12 && nf1.a13 == nf2.a13;
    CHECK(chains_touch(a, b) == expected);
    CHECK(chains_touch(b, a) == chains_touch(a, b));
  }
}

TEST_CASE("touch via group images of arbitrary cubic chains") {
  Rng rng(191);
  for (int i = 0; i < 30; ++i) {
    NormalForm nf = rng.normal_form(ChainKind::CubicParabola);
    Chain x = chain_from_normal_form(nf);
    Rational a = rng.nonzero_rat();
    // partner with extension gamma(a) * E: fourth-order contact for gamma2,
    // exactly third order for gamma1
    Mat4 e = extension_matrix(TernionCurve::from_normal_form(nf));
    TernionCurve curve2{{Ternion(0), Ternion(0), Ternion(0), Ternion(0)}};
    TernionCurve curve1 = curve2;
    Mat4 e2 = (gamma2(a) * Collineation4(e)).mat();
    Mat4 e1 = (gamma1(a) * Collineation4(e)).mat();
    for (int k = 0; k < 4; ++k) {
      curve2.z[k] = Ternion(e2(k, 1), e2(k, 2), e2(k, 3));
      curve1.z[k] = Ternion(e1(k, 1), e1(k, 2), e1(k, 3));
    }
    CHECK(chains_touch(x, chain_of_curve(curve2)));
    CHECK(!chains_touch(x, chain_of_curve(curve1)));
  }
}

TEST_CASE("mapped curves and their chains") {
  Rng rng(193);
  for (int i = 0; i < 30; ++i) {
    Rational a = rng.nonzero_rat();
    TernionCurve img = map_curve(gamma1(a), kStandardCubic);
    // image points are the mapped points
    for (long t = -2; t <= 2; ++t) {
      HPoint3 expect = gamma1(a).apply(affine_to_projective(kStandardCubic.eval(Rational(t))));
      CHECK(affine_to_projective(img.eval(Rational(t))) == expect);
    }
    Chain c = chain_of_curve(img);
    CHECK(c.normal_form().kind == ChainKind::CubicParabola);
    CHECK(c.improper_point() == ProjPoint::improper(Ternion(0, -1, 0)));
  }
  Mat4 nonaffine = Mat4::Identity();
  nonaffine(3, 0) = Rational(1);
  CHECK_THROWS_AS(map_curve(Collineation4(nonaffine), kStandardCubic), DomainError);
}
