#pragma once

#include <array>
#include <string>

#include "arrcheck/arrangement.hpp"
#include "arrcheck/field.hpp"

namespace arrcheck {

/// Evaluates a coefficient expression (integers, e, t, + - * / ^, parens,
/// implicit multiplication like "2z" or "t(t-1)") in the given field.
/// Symbols the field does not admit are rejected with a positioned error.
FieldScalar parse_scalar(const std::string& text, const FieldPtr& field);

/// Parses an expression in x, y, z that must be homogeneous of degree 1;
/// returns (a, b, c) with the expression equal to a*x + b*y + c*z.
std::array<FieldScalar, 3> parse_linear_form(const std::string& text, const FieldPtr& field);

/// Renders a coefficient triple back into a parseable linear-form string.
std::string linear_form_to_string(const std::array<FieldScalar, 3>& form);

/// Arrangement file: a JSON document with keys
///   "field": "Q" | {"quadratic": [p, q]} | {"rational_function": "t"}
///   "lines": list of linear-form strings or [a, b, c] expression triples.
Arrangement load_arrangement_text(const std::string& json_text);
Arrangement load_arrangement_file(const std::string& path);
std::string save_arrangement(const Arrangement& arr);

}  // namespace arrcheck
