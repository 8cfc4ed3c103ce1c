#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "quatroots/scalar.hpp"

namespace quatroots {

/// x0 + x1 i + x2 j + x3 k in the (1, i, j, k) basis.
template <Scalar S>
struct Quaternion {
  std::array<S, 4> x{S(0), S(0), S(0), S(0)};

  Quaternion() = default;
  Quaternion(S x0, S x1, S x2, S x3) : x{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

  static Quaternion scalar(S r) { return {std::move(r), S(0), S(0), S(0)}; }
  static Quaternion one() { return scalar(S(1)); }

  const S& operator[](std::size_t k) const { return x[k]; }
  S& operator[](std::size_t k) { return x[k]; }

  Quaternion& operator+=(const Quaternion& o) {
    for (std::size_t k = 0; k < 4; ++k) x[k] += o.x[k];
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    for (std::size_t k = 0; k < 4; ++k) x[k] -= o.x[k];
    return *this;
  }
  /// Scaling by a central element.
  Quaternion& operator*=(const S& s) {
    for (auto& c : x) c *= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend Quaternion operator-(Quaternion p) {
    for (auto& c : p.x) c = -c;
    return p;
  }
  friend Quaternion operator*(const S& s, Quaternion q) { return q *= s; }
  friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.x == q.x; }

  bool is_zero() const {
    for (const auto& c : x)
      if (c != 0) return false;
    return true;
  }
};

/// Element re + im i of the maximal subfield K = F(i), i^2 = a.
template <Scalar S>
struct KElem {
  S re{0};
  S im{0};

  friend KElem operator+(const KElem& p, const KElem& q) { return {p.re + q.re, p.im + q.im}; }
  friend KElem operator-(const KElem& p, const KElem& q) { return {p.re - q.re, p.im - q.im}; }
  friend KElem operator-(const KElem& p) { return {-p.re, -p.im}; }
  friend KElem operator*(const S& s, const KElem& p) { return {s * p.re, s * p.im}; }
  friend bool operator==(const KElem& p, const KElem& q) { return p.re == q.re && p.im == q.im; }
};

template <Scalar S>
struct ReducedInvariants {
  S trace;
  S norm;
};

/// q = u + j v with u, v in K.
template <Scalar S>
struct SplitForm {
  KElem<S> u;
  KElem<S> v;
};

/// The generalized quaternion algebra (a, b)_F with i^2 = a, j^2 = b, ij = -ji = k.
///
/// Only a < 0 and b < 0 are accepted, which makes the norm form positive
/// definite and the algebra a division algebra over both Q and R.
template <Scalar S>
class Algebra {
 public:
  Algebra(S a, S b) : a_(std::move(a)), b_(std::move(b)) {
    if (!(a_ < 0) || !(b_ < 0))
      throw std::invalid_argument("algebra parameters must satisfy a < 0 and b < 0");
    ab_ = a_ * b_;
  }

  const S& a() const { return a_; }
  const S& b() const { return b_; }

  Quaternion<S> multiply(const Quaternion<S>& p, const Quaternion<S>& q) const {
    return {p[0] * q[0] + a_ * p[1] * q[1] + b_ * p[2] * q[2] - ab_ * p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] - b_ * p[2] * q[3] + b_ * p[3] * q[2],
            p[0] * q[2] + p[2] * q[0] + a_ * p[1] * q[3] - a_ * p[3] * q[1],
            p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
  }

  static Quaternion<S> conjugate(const Quaternion<S>& q) { return {q[0], -q[1], -q[2], -q[3]}; }

  S trace(const Quaternion<S>& q) const { return 2 * q[0]; }

  S norm(const Quaternion<S>& q) const {
    return q[0] * q[0] - a_ * q[1] * q[1] - b_ * q[2] * q[2] + ab_ * q[3] * q[3];
  }

  /// (t, n) such that q^2 - t q + n = 0.
  ReducedInvariants<S> reduced_invariants(const Quaternion<S>& q) const { return {trace(q), norm(q)}; }

  /// sqrt(nrd), the positive-definite magnitude used for thresholds.
  double magnitude(const Quaternion<S>& q) const
    requires std::same_as<S, double>
  {
    return std::sqrt(std::max(0.0, norm(q)));
  }

  Quaternion<S> invert(const Quaternion<S>& q, const Tolerance& tol = {}) const {
    if (q.is_zero()) throw DomainError("division by zero");
    S n = norm(q);
    if constexpr (!ScalarTraits<S>::exact) {
      if (!(std::sqrt(n) > tol.abs) || !std::isfinite(1.0 / n)) throw DomainError("ill-conditioned inversion");
    }
    Quaternion<S> r = conjugate(q);
    for (auto& c : r.x) c /= n;
    return r;
  }

  SplitForm<S> split(const Quaternion<S>& q) const { return {{q[0], q[1]}, {q[2], -q[3]}}; }

  Quaternion<S> unsplit(const KElem<S>& u, const KElem<S>& v) const { return {u.re, u.im, v.re, -v.im}; }

  Quaternion<S> from_k(const KElem<S>& u) const { return {u.re, u.im, S(0), S(0)}; }

  KElem<S> k_multiply(const KElem<S>& x, const KElem<S>& y) const {
    return {x.re * y.re + a_ * x.im * y.im, x.re * y.im + x.im * y.re};
  }

  static KElem<S> k_conjugate(const KElem<S>& x) { return {x.re, -x.im}; }

  S k_norm(const KElem<S>& x) const { return x.re * x.re - a_ * x.im * x.im; }

  KElem<S> k_invert(const KElem<S>& x) const {
    S n = k_norm(x);
    if (n == 0) throw DomainError("division by zero");
    return {x.re / n, -x.im / n};
  }

  friend bool operator==(const Algebra& p, const Algebra& q) { return p.a_ == q.a_ && p.b_ == q.b_; }

 private:
  S a_;
  S b_;
  S ab_;
};

/// Largest coordinate magnitude; cheap scale for tolerances.
template <Scalar S>
double max_abs(const Quaternion<S>& q) {
  double m = 0.0;
  for (const auto& c : q.x) m = std::max(m, std::abs(to_double(c)));
  return m;
}

}  // namespace quatroots
