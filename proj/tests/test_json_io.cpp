#include <doctest.h>

#include "laguerre3/json_io.hpp"
#include "testutil.hpp"

using namespace lagtest;

TEST_CASE("values survive a JSON round trip") {
  Rng rng(211);
  for (int i = 0; i < 40; ++i) {
    Rational r = rng.rat(1000, 999);
    CHECK(rational_from_json(to_json(r)) == r);

    Ternion t = rng.ternion();
    CHECK(ternion_from_json(to_json(t)) == t);

    NormalForm nf = rng.any_normal_form();
    CHECK(normal_form_from_json(to_json(nf)) == nf);

    Chain c = chain_from_normal_form(nf);
    CHECK(same_chain(chain_from_json(to_json(c)), c));

    Mat4 m = rng.type_matrix(TypeBase::I);
    CHECK(mat4_from_json(to_json(m)) == m);

    TernionCurve curve = TernionCurve::from_normal_form(nf);
    TernionCurve back = curve_from_json(to_json(curve));
    for (int k = 0; k < 4; ++k) CHECK(back.z[k] == curve.z[k]);
  }
}

TEST_CASE("JSON inputs are validated") {
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), DomainError);
  CHECK_THROWS_AS(ternion_from_json(Json::array({"1", "2", "3", "4"})), DomainError);
  CHECK_THROWS_AS(chain_from_json(Json::object()), DomainError);
  CHECK_THROWS_AS(normal_form_from_json(Json{{"kind", "circle"}}), DomainError);
  // kind invariant is enforced on input
  Json bad{{"kind", "cubic-parabola"}, {"a22", "1"}, {"a33", "2"}};
  CHECK_THROWS_AS(normal_form_from_json(bad), DomainError);
  Json sing{{"matrix", Json::array({Json::array({Json::array({"0", "1"}), Json::array({"1"})}),
                                    Json::array({Json::array({"0"}), Json::array({"1"})})})}};
  CHECK_THROWS_AS(chain_from_json(sing), DomainError);
}

TEST_CASE("accepted chain spellings agree") {
  // a chain given by matrix and by normal form describe the same point set
  Chain by_form = chain_from_json(Json{{"kind", "parabola"}, {"a33", "2"}});
  Chain by_matrix = chain_from_json(to_json(by_form));
  CHECK(same_chain(by_form, by_matrix));
  CHECK(by_matrix.normal_form() == NormalForm::parabola(0, 0, 0, 0, 2));
}
