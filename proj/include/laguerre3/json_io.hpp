#pragma once

#include <json.hpp>

#include "laguerre3/bridge.hpp"
#include "laguerre3/cubics.hpp"
#include "laguerre3/projline.hpp"

namespace laguerre3 {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings (plain integers are also accepted).
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Ternions are triples [c0, c1, c2].
Json to_json(const Ternion& t);
Ternion ternion_from_json(const Json& j);

Json to_json(const TMat2& m);
TMat2 tmat2_from_json(const Json& j);

Json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);

// Chains are either {"matrix": [[t, t], [t, t]]} with ternion entries or a
// normal form {"kind": "line"|"parabola"|"cubic-parabola", "a02": ..., ...}.
Json to_json(const Chain& c);
Chain chain_from_json(const Json& j);

// 4x4 matrices are arrays of 4 rows of 4 rationals, optionally wrapped in
// {"matrix": ...}.
Json to_json(const Mat4& m);
Mat4 mat4_from_json(const Json& j);

// Curves over the algebra: {"curve": [z0, z1, z2, z3]} with ternion entries
// (shorter arrays are padded with zeros).
Json to_json(const TernionCurve& c);
TernionCurve curve_from_json(const Json& j);

// Reads and parses a JSON file; unreadable files raise IoError, malformed
// content raises DomainError(BadInput).
Json load_json_file(const std::string& path);

}  // namespace laguerre3
