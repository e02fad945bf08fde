#pragma once

#include "liealg/catalog.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace liealg::io {

using json = nlohmann::ordered_json;

// Malformed or schema-violating input; the CLI maps it to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Rational& q);
json to_json(const Scalar& s);  // "p/q", or {"a","b","d"} outside Q
json to_json(const Mat& m);
json algebra_to_json(const StructureTensor& t);
json label_to_json(const ClassLabel& l);
json label_params(const ClassLabel& l);

Rational rational_from_json(const json& j);
Scalar scalar_from_json(const json& j);
Mat matrix_from_json(const json& j);
StructureTensor algebra_from_json(const json& j);
// Family name plus a params object as written by label_params (extra keys are ignored).
ClassLabel label_from_json(const std::string& family, const json& params, int abelian_ext);

json parse_text(const std::string& text);

}  // namespace liealg::io
