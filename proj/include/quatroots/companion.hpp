#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatroots/polynomial.hpp"

namespace quatroots {

/// Square matrix over (a, b)_F, row-major.
template <Scalar S>
class QuatMatrix {
 public:
  QuatMatrix(Algebra<S> algebra, std::size_t n)
      : algebra_(std::move(algebra)), n_(n), entries_(n * n) {
    if (n == 0) throw std::invalid_argument("matrix size must be positive");
  }

  static QuatMatrix identity(const Algebra<S>& algebra, std::size_t n) {
    QuatMatrix m(algebra, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion<S>::one();
    return m;
  }

  const Algebra<S>& algebra() const { return algebra_; }
  std::size_t size() const { return n_; }

  Quaternion<S>& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const Quaternion<S>& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  friend QuatMatrix operator*(const QuatMatrix& A, const QuatMatrix& B) {
    if (A.n_ != B.n_) throw std::invalid_argument("matrix size mismatch");
    QuatMatrix C(A.algebra_, A.n_);
    for (std::size_t i = 0; i < A.n_; ++i)
      for (std::size_t k = 0; k < A.n_; ++k)
        for (std::size_t j = 0; j < A.n_; ++j) C(i, j) += A.algebra_.multiply(A(i, k), B(k, j));
    return C;
  }

  friend bool operator==(const QuatMatrix& A, const QuatMatrix& B) {
    return A.algebra_ == B.algebra_ && A.n_ == B.n_ && A.entries_ == B.entries_;
  }

 private:
  Algebra<S> algebra_;
  std::size_t n_;
  std::vector<Quaternion<S>> entries_;
};

template <Scalar S>
using QuatVector = std::vector<Quaternion<S>>;

template <Scalar S>
using KVector = std::vector<KElem<S>>;

/// Square matrix over K = F(i), i^2 = a, row-major.
template <Scalar S>
class KMatrix {
 public:
  KMatrix(S a, std::size_t m) : a_(std::move(a)), m_(m), entries_(m * m) {}

  static KMatrix identity(S a, std::size_t m) {
    KMatrix r(std::move(a), m);
    for (std::size_t i = 0; i < m; ++i) r(i, i) = {S(1), S(0)};
    return r;
  }

  const S& a() const { return a_; }
  std::size_t size() const { return m_; }

  KElem<S>& operator()(std::size_t r, std::size_t c) { return entries_[r * m_ + c]; }
  const KElem<S>& operator()(std::size_t r, std::size_t c) const { return entries_[r * m_ + c]; }

  KElem<S> mul(const KElem<S>& x, const KElem<S>& y) const {
    return {x.re * y.re + a_ * x.im * y.im, x.re * y.im + x.im * y.re};
  }

  friend KMatrix operator*(const KMatrix& A, const KMatrix& B) {
    if (A.m_ != B.m_) throw std::invalid_argument("matrix size mismatch");
    KMatrix C(A.a_, A.m_);
    for (std::size_t i = 0; i < A.m_; ++i)
      for (std::size_t k = 0; k < A.m_; ++k)
        for (std::size_t j = 0; j < A.m_; ++j) C(i, j) = C(i, j) + A.mul(A(i, k), B(k, j));
    return C;
  }

  friend KVector<S> operator*(const KMatrix& A, const KVector<S>& w) {
    if (w.size() != A.m_) throw std::invalid_argument("vector size mismatch");
    KVector<S> r(A.m_);
    for (std::size_t i = 0; i < A.m_; ++i)
      for (std::size_t k = 0; k < A.m_; ++k) r[i] = r[i] + A.mul(A(i, k), w[k]);
    return r;
  }

  friend bool operator==(const KMatrix& A, const KMatrix& B) {
    return A.a_ == B.a_ && A.m_ == B.m_ && A.entries_ == B.entries_;
  }

 private:
  S a_;
  std::size_t m_;
  std::vector<KElem<S>> entries_;
};

template <Scalar S>
QuatVector<S> apply_matrix(const QuatMatrix<S>& A, const QuatVector<S>& v) {
  if (v.size() != A.size()) throw std::invalid_argument("vector size mismatch");
  const auto& alg = A.algebra();
  QuatVector<S> r(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < A.size(); ++k) r[i] += alg.multiply(A(i, k), v[k]);
  return r;
}

/// v * mu (scalar on the right).
template <Scalar S>
QuatVector<S> right_scale(const Algebra<S>& alg, const QuatVector<S>& v, const Quaternion<S>& mu) {
  QuatVector<S> r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(alg.multiply(e, mu));
  return r;
}

/// mu * v (scalar on the left).
template <Scalar S>
QuatVector<S> left_scale(const Algebra<S>& alg, const Quaternion<S>& mu, const QuatVector<S>& v) {
  QuatVector<S> r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(alg.multiply(mu, e));
  return r;
}

/// Superdiagonal ones, last row -c_0 ... -c_{n-1}.
template <Scalar S>
QuatMatrix<S> companion_matrix(const StandardPoly<S>& phi) {
  const std::size_t n = phi.degree();
  QuatMatrix<S> C(phi.algebra(), n);
  for (std::size_t i = 0; i + 1 < n; ++i) C(i, i + 1) = Quaternion<S>::one();
  for (std::size_t k = 0; k < n; ++k) C(n - 1, k) = -phi.coeff(k);
  return C;
}

/// The embedding M_n(D) -> M_2n(K). Writing A = A_u + j A_v entrywise,
/// the image is [[A_u, b conj(A_v)], [A_v, conj(A_u)]], which acts on the
/// coordinates produced by vector_embed.
template <Scalar S>
KMatrix<S> embed(const QuatMatrix<S>& A) {
  const auto& alg = A.algebra();
  const std::size_t n = A.size();
  KMatrix<S> M(alg.a(), 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      auto [u, v] = alg.split(A(r, c));
      auto v_bar = Algebra<S>::k_conjugate(v);
      M(r, c) = u;
      M(r, n + c) = alg.b() * v_bar;
      M(n + r, c) = v;
      M(n + r, n + c) = Algebra<S>::k_conjugate(u);
    }
  }
  return M;
}

/// g: D^n -> K^2n, all u-parts first, then all v-parts.
template <Scalar S>
KVector<S> vector_embed(const Algebra<S>& alg, const QuatVector<S>& v) {
  const std::size_t n = v.size();
  KVector<S> w(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [u, vv] = alg.split(v[i]);
    w[i] = u;
    w[n + i] = vv;
  }
  return w;
}

template <Scalar S>
QuatVector<S> vector_unembed(const Algebra<S>& alg, const KVector<S>& w) {
  if (w.size() % 2 != 0) throw std::invalid_argument("embedded vector must have even length");
  const std::size_t n = w.size() / 2;
  QuatVector<S> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(alg.unsplit(w[i], w[n + i]));
  return v;
}

/// Coefficients (low to high, monic) of det(zI - M) over K by the
/// Faddeev-LeVerrier recursion
///   N_k = M N_{k-1} + c_{m-k+1} I,  c_{m-k} = -tr(M N_k) / k.
template <Scalar S>
std::vector<KElem<S>> char_poly_k(const KMatrix<S>& M) {
  const std::size_t m = M.size();
  std::vector<KElem<S>> c(m + 1);
  c[m] = {S(1), S(0)};
  KMatrix<S> N(M.a(), m);  // N_0 = 0
  for (std::size_t k = 1; k <= m; ++k) {
    KMatrix<S> next = M * N;
    for (std::size_t i = 0; i < m; ++i) next(i, i) = next(i, i) + c[m - k + 1];
    N = std::move(next);
    KMatrix<S> MN = M * N;
    KElem<S> tr;
    for (std::size_t i = 0; i < m; ++i) tr = tr + MN(i, i);
    S kk = from_int<S>(static_cast<long>(k));
    c[m - k] = {-tr.re / kk, -tr.im / kk};
  }
  return c;
}

/// Faddeev-LeVerrier evaluated exactly on the (dyadic rational) entries of
/// a floating-point matrix; each coefficient is rounded once at the end.
std::vector<KElem<double>> char_poly_k_exact(const KMatrix<double>& M);

/// det(M - zI) over K, which has central coefficients for embedded
/// quaternionic matrices. For odd sizes the global sign is flipped so the
/// result is monic. Throws if any coefficient has a nonzero i-part.
template <Scalar S>
CentralPoly<S> char_poly(const KMatrix<S>& M, const Tolerance& tol = {}) {
  std::vector<KElem<S>> ck;
  if constexpr (ScalarTraits<S>::exact)
    ck = char_poly_k(M);
  else
    ck = char_poly_k_exact(M);
  double scale = 0.0;
  for (const auto& c : ck) scale = std::max({scale, std::abs(to_double(c.re)), std::abs(to_double(c.im))});
  std::vector<S> coeffs;
  coeffs.reserve(ck.size());
  for (const auto& c : ck) {
    if (!is_zero(c.im, scale, tol)) throw DomainError("non-central characteristic coefficients");
    coeffs.push_back(c.re);
  }
  return CentralPoly<S>(std::move(coeffs));
}

/// Phi(z) = det(f(C_phi) - zI): degree 2n, monic, coefficients in F.
template <Scalar S>
CentralPoly<S> companion_polynomial(const StandardPoly<S>& phi, const Tolerance& tol = {}) {
  return char_poly(embed(companion_matrix(phi)), tol);
}

}  // namespace quatroots
