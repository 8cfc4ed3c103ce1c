#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "quatroots/eigen.hpp"
#include "quatroots/io.hpp"
#include "quatroots/recovery.hpp"
#include "quatroots/verify.hpp"

namespace py = pybind11;
namespace qr = quatroots;

namespace {

using Coords = std::array<double, 4>;

qr::Quaternion<double> to_quat(const Coords& c) { return {c[0], c[1], c[2], c[3]}; }
Coords from_quat(const qr::Quaternion<double>& q) { return {q[0], q[1], q[2], q[3]}; }

qr::StandardPoly<double> make_poly(double a, double b, const std::vector<Coords>& coeffs) {
  std::vector<qr::Quaternion<double>> c;
  for (const auto& x : coeffs) c.push_back(to_quat(x));
  return qr::StandardPoly<double>(qr::Algebra<double>(a, b), std::move(c));
}

qr::QuatMatrix<double> make_matrix(double a, double b, const std::vector<std::vector<Coords>>& rows) {
  qr::QuatMatrix<double> A(qr::Algebra<double>(a, b), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) A(r, c) = to_quat(rows[r][c]);
  }
  return A;
}

py::dict report_to_dict(const qr::RootReport& r) {
  py::dict d;
  d["t"] = r.cls.t;
  d["n"] = r.cls.n;
  d["multiplicity"] = r.cls.multiplicity;
  d["central"] = r.cls.central;
  d["kind"] = qr::to_string(r.kind);
  d["root"] = from_quat(r.root);
  d["residual"] = r.residual;
  d["psi_norms"] = py::make_tuple(r.psi1_norm, r.psi0_norm);
  d["diagnostics"] = r.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Roots of standard polynomials over quaternion division algebras (a, b)_R";

  py::register_exception<qr::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<qr::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def(
      "multiply",
      [](const Coords& p, const Coords& q, double a, double b) {
        return from_quat(qr::Algebra<double>(a, b).multiply(to_quat(p), to_quat(q)));
      },
      py::arg("p"), py::arg("q"), py::arg("a") = -1.0, py::arg("b") = -1.0);

  m.def(
      "reduced_invariants",
      [](const Coords& q, double a, double b) {
        auto [t, n] = qr::Algebra<double>(a, b).reduced_invariants(to_quat(q));
        return py::make_tuple(t, n);
      },
      py::arg("q"), py::arg("a") = -1.0, py::arg("b") = -1.0);

  m.def(
      "evaluate",
      [](const std::vector<Coords>& coeffs, const Coords& lambda, double a, double b) {
        return from_quat(qr::evaluate(make_poly(a, b, coeffs), to_quat(lambda)));
      },
      py::arg("coeffs"), py::arg("lam"), py::arg("a") = -1.0, py::arg("b") = -1.0,
      "Evaluate z^n + sum c_k z^k (coefficients low to high, monic implied).");

  m.def(
      "from_left_factors",
      [](const std::vector<Coords>& roots, double a, double b) {
        std::vector<qr::Quaternion<double>> r;
        for (const auto& x : roots) r.push_back(to_quat(x));
        std::vector<Coords> out;
        auto phi = qr::from_left_factors(qr::Algebra<double>(a, b), r);
        for (const auto& c : phi.coeffs()) out.push_back(from_quat(c));
        return out;
      },
      py::arg("roots"), py::arg("a") = -1.0, py::arg("b") = -1.0);

  m.def(
      "reduce",
      [](const std::vector<Coords>& coeffs, double t, double n, double a, double b) {
        auto [psi1, psi0] = qr::reduce_mod_central_quadratic(make_poly(a, b, coeffs), t, n);
        return py::make_tuple(from_quat(psi1), from_quat(psi0));
      },
      py::arg("coeffs"), py::arg("t"), py::arg("n"), py::arg("a") = -1.0, py::arg("b") = -1.0);

  m.def(
      "companion_polynomial",
      [](const std::vector<Coords>& coeffs, double a, double b) {
        return qr::companion_polynomial(make_poly(a, b, coeffs)).coeffs;
      },
      py::arg("coeffs"), py::arg("a") = -1.0, py::arg("b") = -1.0,
      "Coefficients (low to high) of the degree-2n companion polynomial.");

  m.def(
      "companion_polynomial_exact",
      [](const std::vector<std::array<std::string, 4>>& coeffs, const std::string& a, const std::string& b) {
        using R = qr::Rational;
        qr::Algebra<R> alg(qr::ScalarTraits<R>::parse(a), qr::ScalarTraits<R>::parse(b));
        std::vector<qr::Quaternion<R>> c;
        for (const auto& x : coeffs) {
          c.push_back({qr::ScalarTraits<R>::parse(x[0]), qr::ScalarTraits<R>::parse(x[1]),
                       qr::ScalarTraits<R>::parse(x[2]), qr::ScalarTraits<R>::parse(x[3])});
        }
        std::vector<std::string> out;
        for (const auto& v : qr::companion_polynomial(qr::StandardPoly<R>(alg, c)).coeffs)
          out.push_back(qr::ScalarTraits<R>::format(v));
        return out;
      },
      py::arg("coeffs"), py::arg("a") = "-1", py::arg("b") = "-1",
      "Exact companion polynomial; scalars are strings such as \"-3/2\".");

  m.def(
      "solve",
      [](const std::vector<Coords>& coeffs, double a, double b) {
        auto result = qr::solve(make_poly(a, b, coeffs));
        py::list reports;
        for (const auto& r : result.reports) reports.append(report_to_dict(r));
        return reports;
      },
      py::arg("coeffs"), py::arg("a") = -1.0, py::arg("b") = -1.0,
      "One report per conjugacy class of roots of the companion polynomial.");

  m.def(
      "is_right_eigenvalue",
      [](const std::vector<std::vector<Coords>>& rows, const Coords& lambda, double a, double b) {
        return qr::is_right_eigenvalue(make_matrix(a, b, rows), to_quat(lambda));
      },
      py::arg("matrix"), py::arg("lam"), py::arg("a") = -1.0, py::arg("b") = -1.0);

  m.def(
      "right_char_poly",
      [](const std::vector<std::vector<Coords>>& rows, double a, double b) {
        return qr::right_char_poly(make_matrix(a, b, rows)).coeffs;
      },
      py::arg("matrix"), py::arg("a") = -1.0, py::arg("b") = -1.0);

  m.def(
      "verify",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& r : qr::run_verification(seed)) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      py::arg("seed") = 42);
}
