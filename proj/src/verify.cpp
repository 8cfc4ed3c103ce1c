#include "quatroots/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "quatroots/eigen.hpp"
#include "quatroots/random.hpp"
#include "quatroots/recovery.hpp"

namespace quatroots {

namespace {

using Q = Quaternion<Rational>;
using QD = Quaternion<double>;

// A failing suite returns a description of the first counterexample.
using Suite = std::function<std::string(RandomSource&)>;

std::string ring_axioms(RandomSource& rng) {
  for (int trial = 0; trial < 100; ++trial) {
    auto alg = rng.algebra<Rational>();
    Q p = rng.quaternion<Rational>(), q = rng.quaternion<Rational>(), r = rng.quaternion<Rational>();
    if (alg.multiply(alg.multiply(p, q), r) != alg.multiply(p, alg.multiply(q, r))) return "associativity";
    if (alg.multiply(p, q + r) != alg.multiply(p, q) + alg.multiply(p, r)) return "left distributivity";
    if (alg.multiply(p + q, r) != alg.multiply(p, r) + alg.multiply(q, r)) return "right distributivity";
    if (alg.norm(alg.multiply(p, q)) != alg.norm(p) * alg.norm(q)) return "norm multiplicativity";
    if (Algebra<Rational>::conjugate(alg.multiply(p, q)) !=
        alg.multiply(Algebra<Rational>::conjugate(q), Algebra<Rational>::conjugate(p)))
      return "conjugation anti-automorphism";
    auto [t, n] = alg.reduced_invariants(p);
    if (!(alg.multiply(p, p) - t * p + Q::scalar(n)).is_zero()) return "characteristic identity";
    auto [u, v] = alg.split(p);
    if (alg.unsplit(u, v) != p) return "split/unsplit";
    if (!p.is_zero() && alg.multiply(p, alg.invert(p)) != Q::one()) return "inverse";
  }
  return {};
}

std::string ring_axioms_approx(RandomSource& rng) {
  Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    auto alg = rng.algebra<double>();
    QD p = rng.quaternion<double>(), q = rng.quaternion<double>(), r = rng.quaternion<double>();
    QD diff = alg.multiply(alg.multiply(p, q), r) - alg.multiply(p, alg.multiply(q, r));
    double scale = 0.0;
    for (const auto& x : {p, q, r}) scale = std::max(scale, max_abs(x));
    if (!tol.negligible(max_abs(diff), 100.0 * scale * scale * scale)) return "associativity";
  }
  return {};
}

std::string polynomial_division(RandomSource& rng) {
  for (int trial = 0; trial < 60; ++trial) {
    auto alg = rng.algebra<Rational>();
    auto phi = rng.polynomial(alg, static_cast<std::size_t>(rng.integer(1, 6)));
    Rational t = rng.rational(), n = rng.rational();
    auto div = divide_by_central_quadratic(phi, t, n);
    // quotient * (z^2 - t z + n) + psi1 z + psi0, compared with phi including its leading 1.
    std::vector<Q> rebuilt(phi.degree() + 1);
    for (std::size_t j = 0; j < div.quotient.size(); ++j) {
      rebuilt[j + 2] += div.quotient[j];
      rebuilt[j + 1] -= t * div.quotient[j];
      rebuilt[j] += n * div.quotient[j];
    }
    rebuilt[1] += div.remainder.psi1;
    rebuilt[0] += div.remainder.psi0;
    for (std::size_t k = 0; k < phi.degree(); ++k)
      if (rebuilt[k] != phi.coeff(k)) return "division identity, coefficient " + std::to_string(k);
    if (rebuilt.back() != Q::one()) return "division identity, leading coefficient";

    Q lambda = rng.quaternion<Rational>();
    auto [lt, ln] = alg.reduced_invariants(lambda);
    auto [psi1, psi0] = reduce_mod_central_quadratic(phi, lt, ln);
    if (evaluate(phi, lambda) != alg.multiply(psi1, lambda) + psi0) return "evaluation compatibility";

    auto roots = rng.quaternions<Rational>(static_cast<std::size_t>(rng.integer(1, 5)));
    auto factored = from_left_factors(alg, roots);
    if (!evaluate(factored, roots.front()).is_zero()) return "rightmost factor root";
  }
  return {};
}

std::string embedding_homomorphism(RandomSource& rng) {
  for (int trial = 0; trial < 30; ++trial) {
    auto alg = rng.algebra<Rational>();
    auto n = static_cast<std::size_t>(rng.integer(1, 3));
    auto A = rng.matrix(alg, n), B = rng.matrix(alg, n);
    if (embed(A * B) != embed(A) * embed(B)) return "embed(AB) != embed(A) embed(B)";
    if (embed(QuatMatrix<Rational>::identity(alg, n)) != KMatrix<Rational>::identity(alg.a(), 2 * n))
      return "embed(I) != I";
    auto v = rng.quaternions<Rational>(n);
    if (vector_embed(alg, apply_matrix(A, v)) != embed(A) * vector_embed(alg, v)) return "commutative diagram";
    KElem<Rational> mu = rng.k_elem<Rational>();
    auto scaled = vector_embed(alg, right_scale(alg, v, alg.from_k(mu)));
    auto expected = vector_embed(alg, v);
    for (auto& e : expected) e = alg.k_multiply(e, mu);
    if (scaled != expected) return "right K-semilinearity";
    if (vector_unembed(alg, vector_embed(alg, v)) != v) return "vector_embed inverse";
  }
  return {};
}

std::string companion_centrality(RandomSource& rng) {
  for (int trial = 0; trial < 40; ++trial) {
    auto alg = rng.algebra<Rational>();
    auto phi = rng.polynomial(alg, static_cast<std::size_t>(rng.integer(1, 4)));
    auto ck = char_poly_k(embed(companion_matrix(phi)));
    for (const auto& c : ck)
      if (sgn(c.im) != 0) return "nonzero i-part";
    auto P = companion_polynomial(phi);
    if (P.degree() != static_cast<int>(2 * phi.degree()) || P.leading() != 1) return "degree or monicity";
    if (P.coeffs[P.coeffs.size() - 2] != alg.trace(phi.coeffs().back())) return "z^{2n-1} coefficient";
  }
  return {};
}

std::string root_reconstruction(RandomSource& rng) {
  for (int trial = 0; trial < 50; ++trial) {
    // Product of random real quadratics and linears with known classes.
    std::vector<double> P{1.0};
    auto multiply_by = [&](std::vector<double> f) {
      std::vector<double> out(P.size() + f.size() - 1, 0.0);
      for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += P[i] * f[j];
      P = std::move(out);
    };
    std::vector<std::pair<double, double>> expected;
    auto count = rng.integer(1, 4);
    for (long k = 0; k < count; ++k) {
      double re = rng.uniform(-3, 3), im = rng.uniform(0.5, 3);
      expected.emplace_back(2 * re, re * re + im * im);
      multiply_by({re * re + im * im, -2 * re, 1.0});
    }
    auto roots = complex_roots(CentralPoly<double>(P));
    auto classes = cluster_classes(roots);
    int mult = 0;
    for (const auto& c : classes) mult += c.multiplicity;
    if (mult != count) return "class multiplicities do not add up";
    for (const auto& [t, n] : expected) {
      bool found = false;
      for (const auto& c : classes)
        found |= std::abs(c.t - t) <= 1e-6 * std::max(1.0, std::abs(t)) && std::abs(c.n - n) <= 1e-6 * std::max(1.0, n);
      if (!found) return "class not recovered";
    }
  }
  return {};
}

std::string solve_soundness(RandomSource& rng) {
  Algebra<double> H(-1.0, -1.0);
  for (int trial = 0; trial < 40; ++trial) {
    auto roots = rng.quaternions<double>(static_cast<std::size_t>(rng.integer(1, 5)));
    auto phi = from_left_factors(H, roots);
    auto result = solve(phi);
    auto [t, n] = H.reduced_invariants(roots.front());
    bool found = false;
    int usable = 0;
    for (const auto& r : result.reports) {
      if (std::abs(r.cls.t - t) <= 1e-6 && std::abs(r.cls.n - n) <= 1e-6 && r.kind != RootKind::Inconsistent)
        found = true;
      if (r.kind == RootKind::Inconsistent) continue;
      ++usable;
      if (r.kind == RootKind::Isolated || r.kind == RootKind::Central) {
        if (H.magnitude(evaluate(phi, r.root)) > 1e-7 * coefficient_scale(phi)) return "isolated root residual";
        if (H.magnitude(evaluate_central(H, result.companion, r.root)) > 1e-6 * result.companion.scale())
          return "root is not a root of the companion polynomial";
        left_companion_eigenvector(phi, r.root);
      } else {
        for (int k = 0; k < 20; ++k) {
          auto q = rng.nonzero_quaternion<double>();
          auto conj = H.multiply(H.multiply(q, r.root), H.invert(q));
          if (H.magnitude(evaluate(phi, conj)) > 1e-7 * coefficient_scale(phi)) return "spherical conjugate residual";
        }
      }
    }
    if (!found) return "class of the rightmost factor root missing";
    if (usable == 0) return "no usable report";
  }
  return {};
}

std::string eigen_properties(RandomSource& rng) {
  Algebra<double> H(-1.0, -1.0);
  for (int trial = 0; trial < 30; ++trial) {
    auto n = static_cast<std::size_t>(rng.integer(1, 3));
    auto A = rng.matrix(H, n);
    double norm_a = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) norm_a = std::max(norm_a, H.magnitude(A(r, c)));
    for (const auto& cls : right_eigenvalue_classes(A)) {
      auto rep = class_representative(cls, H);
      if (!is_right_eigenvalue(A, rep)) return "class representative is not a right eigenvalue";
      auto q = rng.nonzero_quaternion<double>();
      if (!is_right_eigenvalue(A, H.multiply(H.multiply(q, rep), H.invert(q)))) return "conjugation invariance";
      auto pair = right_eigenvector(A, {rep[0], rep[1]});
      if (pair.residual > 1e-9 * std::max(1.0, norm_a) * std::max(1.0, H.magnitude(rep)))
        return "right eigenvector residual";
    }
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed) {
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"quaternion ring axioms (exact)", ring_axioms},
      {"quaternion associativity (approximate)", ring_axioms_approx},
      {"central quadratic division identity", polynomial_division},
      {"embedding homomorphism and diagram", embedding_homomorphism},
      {"companion polynomial centrality", companion_centrality},
      {"root clustering reconstruction", root_reconstruction},
      {"solve soundness and completeness", solve_soundness},
      {"right eigenvalue properties", eigen_properties},
  };
  std::vector<CheckResult> results;
  std::uint64_t index = 0;
  for (const auto& [name, suite] : suites) {
    RandomSource rng(seed * 0x9E3779B97F4A7C15ULL + ++index);
    CheckResult r{name, false, {}};
    try {
      r.detail = suite(rng);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace quatroots
