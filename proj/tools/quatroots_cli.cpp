// quatroots: roots of standard polynomials over quaternion division algebras.
//
// Exit codes: 0 success, 1 computation diagnostic, 2 input error, 3 non-convergence.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "quatroots/eigen.hpp"
#include "quatroots/io.hpp"
#include "quatroots/recovery.hpp"
#include "quatroots/verify.hpp"

namespace qr = quatroots;
using qr::io::json;

namespace {

enum ExitCode { kOk = 0, kDiagnostic = 1, kInputError = 2, kNoConvergence = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::string input;
  std::string mode = "approximate";
  std::optional<double> tol;
  bool json = false;
  std::uint64_t seed = 42;
  std::string t, n, lambda;
  bool vector = false;
  int max_iterations = qr::RootFinderOptions{}.max_iterations;
};

qr::Tolerance tolerance(const Config& cfg) {
  qr::Tolerance tol;
  if (cfg.tol) tol.rel = *cfg.tol;
  return tol;
}

template <qr::Scalar S>
qr::StandardPoly<S> load_polynomial(const Config& cfg) {
  try {
    return qr::io::polynomial_from_json<S>(qr::io::read_json_file(cfg.input));
  } catch (const qr::DomainError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_solve(const Config& cfg) {
  auto phi = load_polynomial<double>(cfg);
  qr::RecoveryOptions options;
  options.tol = tolerance(cfg);
  options.root_finder.max_iterations = cfg.max_iterations;
  auto result = qr::solve(phi, options);
  bool inconsistent = false;
  for (const auto& r : result.reports) inconsistent |= r.kind == qr::RootKind::Inconsistent;

  if (cfg.json) {
    print(qr::io::solve_result_to_json(result));
  } else {
    std::cout << "degree " << phi.degree() << " over (" << phi.algebra().a() << ", " << phi.algebra().b() << ")\n";
    std::cout << "companion polynomial: " << qr::io::format_central_poly(result.companion) << '\n';
    for (const auto& r : result.reports) {
      std::cout << "class t=" << r.cls.t << " n=" << r.cls.n << " multiplicity=" << r.cls.multiplicity << ": "
                << qr::to_string(r.kind);
      if (r.kind == qr::RootKind::Spherical)
        std::cout << ", every conjugate of " << qr::io::format_quaternion(r.root) << " is a root";
      else
        std::cout << ", root " << qr::io::format_quaternion(r.root);
      std::cout << " (residual " << r.residual << ")";
      if (!r.diagnostics.empty()) std::cout << " [" << r.diagnostics << "]";
      std::cout << '\n';
    }
  }
  return inconsistent ? kDiagnostic : kOk;
}

template <qr::Scalar S>
int run_charpoly(const Config& cfg) {
  auto phi = load_polynomial<S>(cfg);
  auto P = qr::companion_polynomial(phi, tolerance(cfg));
  if (cfg.json)
    print(qr::io::central_poly_to_json(P));
  else
    std::cout << qr::io::format_central_poly(P) << '\n';
  return kOk;
}

template <qr::Scalar S>
int run_reduce(const Config& cfg) {
  auto phi = load_polynomial<S>(cfg);
  S t, n;
  try {
    t = qr::ScalarTraits<S>::parse(cfg.t);
    n = qr::ScalarTraits<S>::parse(cfg.n);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  auto [psi1, psi0] = qr::reduce_mod_central_quadratic(phi, t, n);
  if (cfg.json) {
    print({{"t", qr::io::scalar_to_json<S>(t)},
           {"n", qr::io::scalar_to_json<S>(n)},
           {"psi1", qr::io::quaternion_to_json(psi1)},
           {"psi0", qr::io::quaternion_to_json(psi0)}});
  } else {
    std::cout << "psi1 = " << qr::io::format_quaternion(psi1) << '\n'
              << "psi0 = " << qr::io::format_quaternion(psi0) << '\n';
  }
  return kOk;
}

int run_eigen_check(const Config& cfg) {
  qr::QuatMatrix<double> A = [&] {
    try {
      return qr::io::matrix_from_json<double>(qr::io::read_json_file(cfg.input));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    } catch (const json::exception& e) {
      throw InputError(e.what());
    }
  }();
  qr::Quaternion<double> lambda;
  try {
    lambda = qr::io::parse_quaternion<double>(cfg.lambda);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto& alg = A.algebra();
  qr::EigenOptions options;
  options.tol = tolerance(cfg);
  auto phi_a = qr::right_char_poly(A, options.tol);
  bool verdict = qr::is_right_eigenvalue(A, lambda, options);

  std::optional<qr::EigenPair> pair;
  if (cfg.vector && verdict) {
    // Extract the eigenvector at the representative in F(i), then move it to lambda.
    auto [t, n] = alg.reduced_invariants(lambda);
    auto rep = qr::class_representative({t, n, 1, false}, alg, options.tol);
    auto at_rep = qr::right_eigenvector(A, {rep[0], rep[1]}, options);
    auto q = qr::conjugating_element(alg, rep, lambda, options.tol);
    auto v = qr::right_scale(alg, at_rep.vector, alg.invert(q));
    pair = qr::EigenPair{lambda, v, qr::Side::Right, qr::right_residual(A, v, lambda)};
  }

  if (cfg.json) {
    json out = {{"char_poly", qr::io::central_poly_to_json(phi_a)},
                {"lambda", qr::io::quaternion_to_json(lambda)},
                {"right_eigenvalue", verdict}};
    if (pair) {
      json v = json::array();
      for (const auto& e : pair->vector) v.push_back(qr::io::quaternion_to_json(e));
      out["eigenvector"] = v;
      out["residual"] = pair->residual;
    }
    print(out);
  } else {
    std::cout << "Phi_A(z) = " << qr::io::format_central_poly(phi_a) << '\n';
    std::cout << qr::io::format_quaternion(lambda) << (verdict ? " is" : " is not") << " a right eigenvalue\n";
    if (pair) {
      std::cout << "eigenvector:";
      for (const auto& e : pair->vector) std::cout << " (" << qr::io::format_quaternion(e) << ")";
      std::cout << " residual " << pair->residual << '\n';
    }
  }
  return kOk;
}

int run_verify(const Config& cfg) {
  auto results = qr::run_verification(cfg.seed);
  bool ok = true;
  json out = json::array();
  for (const auto& r : results) {
    ok &= r.passed;
    if (cfg.json)
      out.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
  }
  if (cfg.json) print(out);
  return ok ? kOk : kDiagnostic;
}

int dispatch(const Config& cfg) {
  const bool exact = cfg.mode == "exact";
  if (exact && (cfg.command == "solve" || cfg.command == "eigen-check"))
    throw InputError(cfg.command + " supports approximate mode only");
  if (cfg.command == "solve") return run_solve(cfg);
  if (cfg.command == "charpoly") return exact ? run_charpoly<qr::Rational>(cfg) : run_charpoly<double>(cfg);
  if (cfg.command == "reduce") return exact ? run_reduce<qr::Rational>(cfg) : run_reduce<double>(cfg);
  if (cfg.command == "eigen-check") return run_eigen_check(cfg);
  return run_verify(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roots of standard polynomials over quaternion division algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_flag("--json", cfg.json, "Print JSON instead of a human-readable report");
  app.add_option("--mode", cfg.mode, "Scalar arithmetic")->check(CLI::IsMember({"approximate", "exact"}));
  app.add_option("--tol", cfg.tol, "Relative tolerance for approximate comparisons")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Find all roots of a polynomial file");
  solve->add_option("file", cfg.input, "Polynomial JSON file")->required();
  solve->add_option("--max-iterations", cfg.max_iterations, "Root finder iteration limit")
      ->check(CLI::PositiveNumber);
  auto* charpoly = app.add_subcommand("charpoly", "Print the companion polynomial");
  charpoly->add_option("file", cfg.input, "Polynomial JSON file")->required();
  auto* reduce = app.add_subcommand("reduce", "Reduce modulo z^2 - t z + n");
  reduce->add_option("file", cfg.input, "Polynomial JSON file")->required();
  reduce->add_option("--t", cfg.t, "Reduced trace")->required();
  reduce->add_option("--n", cfg.n, "Reduced norm")->required();
  auto* eigen = app.add_subcommand("eigen-check", "Test a right eigenvalue of a quaternionic matrix");
  eigen->add_option("file", cfg.input, "Matrix JSON file")->required();
  eigen->add_option("--lambda", cfg.lambda, "Quaternion literal \"[x0, x1, x2, x3]\"")->required();
  eigen->add_flag("--vector", cfg.vector, "Also print a right eigenvector");
  auto* verify = app.add_subcommand("verify", "Run the randomized self-verification suites");
  verify->add_option("--seed", cfg.seed, "Seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: input: " << e.what() << '\n';
    return kInputError;
  } catch (const qr::ConvergenceError& e) {
    std::cerr << "error: convergence: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const qr::DomainError& e) {
    std::cerr << "error: computation: " << e.what() << '\n';
    return kDiagnostic;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: computation: " << e.what() << '\n';
    return kDiagnostic;
  }
}
