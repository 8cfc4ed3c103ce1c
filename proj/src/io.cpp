#include "quatroots/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace quatroots::io {

template <Scalar S>
S scalar_from_json(const json& j) {
  if (j.is_string()) return ScalarTraits<S>::parse(j.get<std::string>());
  if (j.is_number_integer()) return from_int<S>(j.get<long>());
  // dump() yields the shortest round-trip decimal, which exact mode reads exactly.
  if (j.is_number()) return ScalarTraits<S>::parse(j.dump());
  throw std::invalid_argument("expected a scalar, got " + j.dump());
}

template <Scalar S>
json scalar_to_json(const S& x) {
  if constexpr (ScalarTraits<S>::exact)
    return ScalarTraits<S>::format(x);
  else
    return x;
}

template <Scalar S>
Quaternion<S> parse_quaternion(std::string_view literal) {
  auto open = literal.find('[');
  auto close = literal.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw std::invalid_argument("quaternion literal must be bracketed: '" + std::string(literal) + "'");
  for (char c : literal.substr(0, open))
    if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed quaternion literal '" + std::string(literal) + "'");
  std::string_view body = literal.substr(open + 1, close - open - 1);
  std::vector<S> parts;
  while (true) {
    auto comma = body.find(',');
    std::string item(body.substr(0, comma));
    std::erase(item, '"');
    parts.push_back(ScalarTraits<S>::parse(item));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (parts.size() != 4)
    throw std::invalid_argument("quaternion literal needs 4 coordinates: '" + std::string(literal) + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

template <Scalar S>
Quaternion<S> quaternion_from_json(const json& j) {
  if (j.is_string()) return parse_quaternion<S>(j.get<std::string>());
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("quaternion must be a 4-element array: " + j.dump());
  return {scalar_from_json<S>(j[0]), scalar_from_json<S>(j[1]), scalar_from_json<S>(j[2]), scalar_from_json<S>(j[3])};
}

template <Scalar S>
json quaternion_to_json(const Quaternion<S>& q) {
  return json::array({scalar_to_json<S>(q[0]), scalar_to_json<S>(q[1]), scalar_to_json<S>(q[2]),
                      scalar_to_json<S>(q[3])});
}

template <Scalar S>
Algebra<S> algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw std::invalid_argument("\"algebra\" must be an object with \"a\" and \"b\"");
  return Algebra<S>(scalar_from_json<S>(j.at("a")), scalar_from_json<S>(j.at("b")));
}

template <Scalar S>
StandardPoly<S> polynomial_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial file must hold a JSON object");
  if (!j.contains("algebra")) throw std::invalid_argument("missing \"algebra\"");
  if (!j.contains("coefficients") || !j.at("coefficients").is_array())
    throw std::invalid_argument("missing \"coefficients\" array");
  auto alg = algebra_from_json<S>(j.at("algebra"));
  std::vector<Quaternion<S>> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(quaternion_from_json<S>(c));
  if (coeffs.empty()) throw std::invalid_argument("polynomial must have degree >= 1");
  if (j.contains("leading")) {
    coeffs.push_back(quaternion_from_json<S>(j.at("leading")));
    return monic_normalize(alg, coeffs);
  }
  return StandardPoly<S>(alg, std::move(coeffs));
}

template <Scalar S>
json polynomial_to_json(const StandardPoly<S>& phi) {
  json coeffs = json::array();
  for (const auto& c : phi.coeffs()) coeffs.push_back(quaternion_to_json(c));
  return {{"algebra", {{"a", scalar_to_json<S>(phi.algebra().a())}, {"b", scalar_to_json<S>(phi.algebra().b())}}},
          {"coefficients", coeffs}};
}

template <Scalar S>
QuatMatrix<S> matrix_from_json(const json& j) {
  const json* grid = &j;
  Algebra<S> alg(S(-1), S(-1));
  if (j.is_object()) {
    if (!j.contains("matrix")) throw std::invalid_argument("missing \"matrix\"");
    grid = &j.at("matrix");
    if (j.contains("algebra")) alg = algebra_from_json<S>(j.at("algebra"));
  }
  if (!grid->is_array() || grid->empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t n = grid->size();
  QuatMatrix<S> A(alg, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = (*grid)[r];
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) A(r, c) = quaternion_from_json<S>(row[c]);
  }
  return A;
}

template <Scalar S>
json central_poly_to_json(const CentralPoly<S>& P) {
  json coeffs = json::array();
  for (const auto& c : P.coeffs) coeffs.push_back(scalar_to_json<S>(c));
  return {{"degree", P.degree()}, {"coefficients", coeffs}};
}

template <Scalar S>
CentralPoly<S> central_poly_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("coefficients") : j;
  if (!arr.is_array()) throw std::invalid_argument("central polynomial coefficients must be an array");
  std::vector<S> coeffs;
  for (const auto& c : arr) coeffs.push_back(scalar_from_json<S>(c));
  return CentralPoly<S>(std::move(coeffs));
}

json report_to_json(const RootReport& report) {
  json out = {{"class", {{"t", report.cls.t}, {"n", report.cls.n}, {"multiplicity", report.cls.multiplicity}}},
              {"kind", to_string(report.kind)}};
  const char* key = report.kind == RootKind::Spherical ? "representative" : "root";
  out[key] = quaternion_to_json(report.root);
  out["residual"] = report.residual;
  out["psi_norms"] = json::array({report.psi1_norm, report.psi0_norm});
  if (!report.diagnostics.empty()) out["diagnostics"] = report.diagnostics;
  return out;
}

json solve_result_to_json(const SolveResult& result) {
  json out = json::array();
  for (const auto& r : result.reports) out.push_back(report_to_json(r));
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

template <Scalar S>
std::string format_quaternion(const Quaternion<S>& q) {
  static constexpr const char* units[] = {"", "i", "j", "k"};
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    if (q[k] == 0) continue;
    bool negative = q[k] < 0;
    S mag = negative ? S(-q[k]) : q[k];
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    if (k == 0 || mag != 1) out << ScalarTraits<S>::format(mag);
    out << units[k];
    first = false;
  }
  return first ? "0" : out.str();
}

template <Scalar S>
std::string format_central_poly(const CentralPoly<S>& P) {
  std::ostringstream out;
  bool first = true;
  for (auto k = P.coeffs.size(); k-- > 0;) {
    const S& c = P.coeffs[k];
    if (c == 0) continue;
    bool negative = c < 0;
    S mag = negative ? S(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    if (k == 0 || mag != 1) out << ScalarTraits<S>::format(mag) << (k > 0 ? " " : "");
    if (k >= 1) out << "z";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return first ? "0" : out.str();
}

#define QUATROOTS_INSTANTIATE_IO(S)                                          \
  template S scalar_from_json<S>(const json&);                               \
  template json scalar_to_json<S>(const S&);                                 \
  template Quaternion<S> parse_quaternion<S>(std::string_view);              \
  template Quaternion<S> quaternion_from_json<S>(const json&);               \
  template json quaternion_to_json<S>(const Quaternion<S>&);                 \
  template Algebra<S> algebra_from_json<S>(const json&);                     \
  template StandardPoly<S> polynomial_from_json<S>(const json&);             \
  template json polynomial_to_json<S>(const StandardPoly<S>&);               \
  template QuatMatrix<S> matrix_from_json<S>(const json&);                   \
  template json central_poly_to_json<S>(const CentralPoly<S>&);              \
  template CentralPoly<S> central_poly_from_json<S>(const json&);            \
  template std::string format_quaternion<S>(const Quaternion<S>&);           \
  template std::string format_central_poly<S>(const CentralPoly<S>&);

QUATROOTS_INSTANTIATE_IO(double)
QUATROOTS_INSTANTIATE_IO(Rational)

}  // namespace quatroots::io
