#include "quatroots/eigen.hpp"

#include <algorithm>
#include <cmath>

namespace quatroots {

namespace {

double evaluation_scale(const CentralPoly<double>& P, double magnitude) {
  double s = 0.0;
  for (auto k = P.coeffs.size(); k-- > 0;) s = s * magnitude + std::abs(P.coeffs[k]);
  return s;
}

double vector_max_norm(const Algebra<double>& alg, const QuatVector<double>& v) {
  double m = 0.0;
  for (const auto& e : v) m = std::max(m, alg.magnitude(e));
  return m;
}

}  // namespace

CentralPoly<double> right_char_poly(const QuatMatrix<double>& A, const Tolerance& tol) {
  return char_poly(embed(A), tol);
}

bool is_right_eigenvalue(const QuatMatrix<double>& A, const Quaternion<double>& lambda, const EigenOptions& options) {
  const auto& alg = A.algebra();
  auto phi_a = right_char_poly(A, options.tol);
  double value = alg.magnitude(evaluate_central(alg, phi_a, lambda));
  return value <= options.eigen_rel * evaluation_scale(phi_a, alg.magnitude(lambda));
}

std::vector<ConjClass> right_eigenvalue_classes(const QuatMatrix<double>& A, const EigenOptions& options,
                                                const RootFinderOptions& root_options) {
  auto roots = complex_roots(right_char_poly(A, options.tol), root_options);
  return cluster_classes(roots, options.tol);
}

double right_residual(const QuatMatrix<double>& A, const QuatVector<double>& v, const Quaternion<double>& lambda) {
  const auto& alg = A.algebra();
  auto Av = apply_matrix(A, v);
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, alg.magnitude(Av[i] - alg.multiply(v[i], lambda)));
  return r;
}

double left_residual(const QuatMatrix<double>& A, const QuatVector<double>& v, const Quaternion<double>& lambda) {
  const auto& alg = A.algebra();
  auto Av = apply_matrix(A, v);
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, alg.magnitude(Av[i] - alg.multiply(lambda, v[i])));
  return r;
}

EigenPair right_eigenvector(const QuatMatrix<double>& A, const KElem<double>& lambda, const EigenOptions& options) {
  const auto& alg = A.algebra();
  KMatrix<double> M = embed(A);
  const std::size_t m = M.size();
  for (std::size_t i = 0; i < m; ++i) M(i, i) = M(i, i) - lambda;

  auto knorm = [&](const KElem<double>& x) { return std::sqrt(std::max(0.0, alg.k_norm(x))); };
  double scale = 0.0;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) scale = std::max(scale, knorm(M(r, c)));
  const double threshold = options.null_rel * std::max(scale, 1e-300);

  // Reduced row echelon form with partial pivoting; small pivots mark free columns.
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(m, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < m; ++r)
      if (knorm(M(r, col)) > knorm(M(best, col))) best = r;
    if (knorm(M(best, col)) <= threshold) continue;
    for (std::size_t c = 0; c < m; ++c) std::swap(M(row, c), M(best, c));
    auto inv = alg.k_invert(M(row, col));
    for (std::size_t c = 0; c < m; ++c) M(row, c) = alg.k_multiply(inv, M(row, c));
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row) continue;
      auto factor = M(r, col);
      if (factor.re == 0.0 && factor.im == 0.0) continue;
      for (std::size_t c = 0; c < m; ++c) M(r, c) = M(r, c) - alg.k_multiply(factor, M(row, c));
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }

  auto free_it = std::find(is_pivot.begin(), is_pivot.end(), false);
  if (free_it == is_pivot.end()) throw DomainError("not an eigenvalue at working precision");
  const auto free_col = static_cast<std::size_t>(free_it - is_pivot.begin());

  KVector<double> w(m);
  w[free_col] = {1.0, 0.0};
  for (std::size_t r = 0; r < pivot_col.size(); ++r) w[pivot_col[r]] = -M(r, free_col);

  auto v = vector_unembed(alg, w);
  const double vmax = vector_max_norm(alg, v);
  for (const auto& e : v) {
    if (alg.magnitude(e) <= 1e-8 * vmax) continue;
    auto [u, vv] = alg.split(e);
    KElem<double> mu = knorm(u) > 1e-8 * alg.magnitude(e) ? alg.k_invert(u) : alg.k_invert(vv);
    v = right_scale(alg, v, alg.from_k(mu));
    break;
  }

  EigenPair pair{alg.from_k(lambda), std::move(v), Side::Right, 0.0};
  pair.residual = right_residual(A, pair.vector, pair.value);
  return pair;
}

EigenPair left_companion_eigenvector(const StandardPoly<double>& phi, const Quaternion<double>& lambda,
                                     const EigenOptions& options) {
  const auto& alg = phi.algebra();
  const std::size_t n = phi.degree();
  QuatVector<double> v;
  v.reserve(n);
  Quaternion<double> power = Quaternion<double>::one();
  for (std::size_t k = 0; k < n; ++k) {
    v.push_back(power);
    power = alg.multiply(power, lambda);
  }
  EigenPair pair{lambda, std::move(v), Side::Left, 0.0};
  pair.residual = left_residual(companion_matrix(phi), pair.vector, lambda);
  const double scale = coefficient_scale(phi) * std::pow(std::max(1.0, alg.magnitude(lambda)), static_cast<double>(n));
  if (pair.residual > options.residual_rel * scale) throw DomainError("not a root");
  return pair;
}

Quaternion<double> conjugating_element(const Algebra<double>& alg, const Quaternion<double>& from,
                                       const Quaternion<double>& to, const Tolerance& tol) {
  auto [t_from, n_from] = alg.reduced_invariants(from);
  auto [t_to, n_to] = alg.reduced_invariants(to);
  const double scale = std::max({1.0, std::abs(n_from), std::abs(t_from)});
  if (!tol.close(t_from, t_to, scale) || !tol.close(n_from, n_to, scale))
    throw DomainError("elements are not conjugate");

  // Pure parts u, w with u^2 = w^2 = -N; then (N - w u) u = w (N - w u).
  const Quaternion<double> u{0.0, from[1], from[2], from[3]};
  const Quaternion<double> w{0.0, to[1], to[2], to[3]};
  const double N = alg.norm(u);
  if (!(std::sqrt(N) > tol.rel * std::sqrt(scale) + tol.abs)) return Quaternion<double>::one();
  Quaternion<double> q = Quaternion<double>::scalar(N) - alg.multiply(w, u);
  if (alg.magnitude(q) > 1e-6 * N) return q;
  // w = -u: any pure element anticommuting with u works, e.g. a commutator [u, e].
  for (std::size_t basis = 1; basis < 4; ++basis) {
    Quaternion<double> e;
    e[basis] = 1.0;
    q = alg.multiply(u, e) - alg.multiply(e, u);
    if (alg.magnitude(q) > 1e-6 * std::sqrt(N)) return q;
  }
  throw DomainError("failed to construct a conjugating element");
}

Quaternion<double> root_from_right_pair(const Algebra<double>& alg, const EigenPair& pair, const Tolerance& tol) {
  if (pair.vector.empty()) throw std::invalid_argument("empty eigenvector");
  const auto& v1 = pair.vector.front();
  const double vmax = vector_max_norm(alg, pair.vector);
  if (!(alg.magnitude(v1) > tol.rel * vmax + tol.abs)) throw DomainError("degenerate eigenvector leading entry");
  return alg.multiply(alg.multiply(v1, pair.value), alg.invert(v1, tol));
}

}  // namespace quatroots
