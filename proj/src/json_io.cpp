#include "laguerre3/json_io.hpp"

#include <fstream>

namespace laguerre3 {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw DomainError(Err::BadInput, "expected a rational as \"p/q\" string or integer");
}

Json to_json(const Ternion& t) {
  return Json::array({to_json(t.c0()), to_json(t.c1()), to_json(t.c2())});
}

Ternion ternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() > 3 || j.empty())
    throw DomainError(Err::BadInput, "expected a ternion as [c0, c1, c2]");
  Rational c[3];
  for (std::size_t i = 0; i < j.size(); ++i) c[i] = rational_from_json(j[i]);
  return Ternion(c[0], c[1], c[2]);
}

Json to_json(const TMat2& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

TMat2 tmat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw DomainError(Err::BadInput, "expected a 2x2 matrix of ternions");
  TMat2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = ternion_from_json(j[r][c]);
  return m;
}

Json to_json(const NormalForm& nf) {
  Json j;
  j["kind"] = to_string(nf.kind);
  j["a02"] = to_json(nf.a02);
  j["a12"] = to_json(nf.a12);
  j["a03"] = to_json(nf.a03);
  j["a13"] = to_json(nf.a13);
  if (nf.kind != ChainKind::Line) j["a33"] = to_json(nf.a33);
  if (nf.kind == ChainKind::CubicParabola) {
    j["a22"] = to_json(nf.a22);
    j["a23"] = to_json(nf.a23);
  }
  return j;
}

NormalForm normal_form_from_json(const Json& j) {
  std::string kind = j.value("kind", "");
  auto get = [&](const char* key) {
    return j.contains(key) ? rational_from_json(j.at(key)) : Rational(0);
  };
  NormalForm nf;
  if (kind == "line") {
    nf = NormalForm::line(get("a02"), get("a12"), get("a03"), get("a13"));
  } else if (kind == "parabola") {
    nf = NormalForm::parabola(get("a02"), get("a12"), get("a03"), get("a13"), get("a33"));
  } else if (kind == "cubic-parabola" || kind == "cubic_parabola") {
    nf = NormalForm::cubic_parabola(get("a02"), get("a12"), get("a22"), get("a03"),
                                    get("a13"), get("a23"), get("a33"));
  } else {
    throw DomainError(Err::BadInput, "unknown chain kind '" + kind + "'");
  }
  if (!nf.valid())
    throw DomainError(Err::InvalidCoefficients, "normal form violates its kind invariant");
  return nf;
}

Json to_json(const Chain& c) {
  Json j;
  j["matrix"] = to_json(c.matrix());
  return j;
}

Chain chain_from_json(const Json& j) {
  if (j.contains("matrix")) return Chain(tmat2_from_json(j.at("matrix")));
  if (j.contains("kind")) return chain_from_normal_form(normal_form_from_json(j));
  throw DomainError(Err::BadInput, "chain description needs \"matrix\" or \"kind\"");
}

Json to_json(const Mat4& m) {
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Mat4 mat4_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array() || rows.size() != 4)
    throw DomainError(Err::BadInput, "expected a 4x4 matrix of rationals");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4)
      throw DomainError(Err::BadInput, "expected a 4x4 matrix of rationals");
    for (int c = 0; c < 4; ++c) m(r, c) = rational_from_json(rows[r][c]);
  }
  return m;
}

Json to_json(const TernionCurve& c) {
  Json coeffs = Json::array();
  for (const Ternion& z : c.z) coeffs.push_back(to_json(z));
  Json j;
  j["curve"] = coeffs;
  return j;
}

TernionCurve curve_from_json(const Json& j) {
  const Json& coeffs = j.is_object() && j.contains("curve") ? j.at("curve") : j;
  if (!coeffs.is_array() || coeffs.empty() || coeffs.size() > 4)
    throw DomainError(Err::BadInput, "curve description needs 1..4 ternion coefficients");
  TernionCurve c{{Ternion(0), Ternion(0), Ternion(0), Ternion(0)}};
  for (std::size_t k = 0; k < coeffs.size(); ++k) c.z[k] = ternion_from_json(coeffs[k]);
  return c;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(Err::BadInput, "malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace laguerre3
