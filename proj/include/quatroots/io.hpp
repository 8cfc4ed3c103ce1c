#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "quatroots/companion.hpp"
#include "quatroots/recovery.hpp"

namespace quatroots::io {

using json = nlohmann::json;

/// JSON numbers, or strings such as "3", "-1/2", "0.25".
template <Scalar S>
S scalar_from_json(const json& j);

template <Scalar S>
json scalar_to_json(const S& x);

/// "[x0, x1, x2, x3]"; entries may be quoted.
template <Scalar S>
Quaternion<S> parse_quaternion(std::string_view literal);

/// A 4-element array, or a string literal accepted by parse_quaternion.
template <Scalar S>
Quaternion<S> quaternion_from_json(const json& j);

template <Scalar S>
json quaternion_to_json(const Quaternion<S>& q);

template <Scalar S>
Algebra<S> algebra_from_json(const json& j);

/// {"algebra": {"a", "b"}, "coefficients": [c_0 .. c_{n-1}], "leading"?}
/// When "leading" is present the coefficients are left-divided by it.
template <Scalar S>
StandardPoly<S> polynomial_from_json(const json& j);

template <Scalar S>
json polynomial_to_json(const StandardPoly<S>& phi);

/// {"algebra": {...}, "matrix": [[q, ...], ...]}, or a bare grid over a = b = -1.
template <Scalar S>
QuatMatrix<S> matrix_from_json(const json& j);

/// {"degree": d, "coefficients": [a_0 .. a_d]}
template <Scalar S>
json central_poly_to_json(const CentralPoly<S>& P);

template <Scalar S>
CentralPoly<S> central_poly_from_json(const json& j);

json report_to_json(const RootReport& report);

/// Array with one object per report.
json solve_result_to_json(const SolveResult& result);

json read_json_file(const std::string& path);

template <Scalar S>
std::string format_quaternion(const Quaternion<S>& q);

/// "z^4 + 2 z^2 + 1"
template <Scalar S>
std::string format_central_poly(const CentralPoly<S>& P);

}  // namespace quatroots::io
