#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatroots/quaternion.hpp"

namespace quatroots {

/// Monic standard polynomial z^n + c_{n-1} z^{n-1} + ... + c_0 over (a, b)_F.
///
/// Coefficients sit to the left of the powers of z and are stored low to high;
/// the leading 1 is implicit, so degree() == coeffs.size() >= 1.
template <Scalar S>
class StandardPoly {
 public:
  StandardPoly(Algebra<S> algebra, std::vector<Quaternion<S>> coeffs)
      : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("standard polynomial must have degree >= 1");
  }

  const Algebra<S>& algebra() const { return algebra_; }
  const std::vector<Quaternion<S>>& coeffs() const { return coeffs_; }
  const Quaternion<S>& coeff(std::size_t k) const { return coeffs_.at(k); }
  std::size_t degree() const { return coeffs_.size(); }

  friend bool operator==(const StandardPoly& p, const StandardPoly& q) {
    return p.algebra_ == q.algebra_ && p.coeffs_ == q.coeffs_;
  }

 private:
  Algebra<S> algebra_;
  std::vector<Quaternion<S>> coeffs_;
};

/// Polynomial with central coefficients, stored low to high with an explicit leading term.
template <Scalar S>
struct CentralPoly {
  std::vector<S> coeffs;

  CentralPoly() = default;
  explicit CentralPoly(std::vector<S> c) : coeffs(std::move(c)) { trim(); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const S& leading() const { return coeffs.back(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  /// Largest coefficient magnitude.
  double scale() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(to_double(c)));
    return m;
  }

  friend bool operator==(const CentralPoly& p, const CentralPoly& q) { return p.coeffs == q.coeffs; }
};

/// Remainder psi1 z + psi0 of a standard polynomial modulo a central quadratic.
template <Scalar S>
struct ReducedPair {
  Quaternion<S> psi1;
  Quaternion<S> psi0;
};

/// Quotient and remainder of division by z^2 - t z + n.
template <Scalar S>
struct CentralQuadraticDivision {
  std::vector<Quaternion<S>> quotient;  // low to high, left coefficients
  ReducedPair<S> remainder;
};

/// phi(lambda) = lambda^n + sum c_k lambda^k, coefficients multiplied on the left.
template <Scalar S>
Quaternion<S> evaluate(const StandardPoly<S>& phi, const Quaternion<S>& lambda) {
  const auto& alg = phi.algebra();
  Quaternion<S> power = Quaternion<S>::one();
  Quaternion<S> sum;
  for (const auto& c : phi.coeffs()) {
    sum += alg.multiply(c, power);
    power = alg.multiply(power, lambda);
  }
  return sum + power;
}

/// Left-divides c_0..c_n by the leading coefficient c_n (given last).
template <Scalar S>
StandardPoly<S> monic_normalize(const Algebra<S>& alg, const std::vector<Quaternion<S>>& with_leading,
                                const Tolerance& tol = {}) {
  if (with_leading.size() < 2) throw std::invalid_argument("need a leading coefficient and degree >= 1");
  const auto& lead = with_leading.back();
  if (lead.is_zero()) throw DomainError("degenerate leading coefficient");
  Quaternion<S> inv;
  try {
    inv = alg.invert(lead, tol);
  } catch (const DomainError&) {
    throw DomainError("degenerate leading coefficient");
  }
  std::vector<Quaternion<S>> coeffs;
  coeffs.reserve(with_leading.size() - 1);
  for (std::size_t k = 0; k + 1 < with_leading.size(); ++k) coeffs.push_back(alg.multiply(inv, with_leading[k]));
  return StandardPoly<S>(alg, std::move(coeffs));
}

/// Expands (z - r_m) ... (z - r_2)(z - r_1) with z central; r_1 = roots.front()
/// is the rightmost factor and therefore always a root of the result.
template <Scalar S>
StandardPoly<S> from_left_factors(const Algebra<S>& alg, const std::vector<Quaternion<S>>& roots) {
  if (roots.empty()) throw std::invalid_argument("from_left_factors needs at least one root");
  // Full coefficient list including the leading 1, low to high.
  std::vector<Quaternion<S>> poly{-roots.front(), Quaternion<S>::one()};
  for (std::size_t f = 1; f < roots.size(); ++f) {
    // (z - r) * P(z) = z P(z) - r P(z)
    std::vector<Quaternion<S>> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= alg.multiply(roots[f], poly[k]);
    }
    poly = std::move(next);
  }
  poly.pop_back();
  return StandardPoly<S>(alg, std::move(poly));
}

/// Division of phi by the central quadratic z^2 - t z + n via the power recurrence
/// z^k = Q_k(z) (z^2 - t z + n) + p_k z + q_k.
template <Scalar S>
CentralQuadraticDivision<S> divide_by_central_quadratic(const StandardPoly<S>& phi, const S& t, const S& n) {
  const std::size_t deg = phi.degree();
  CentralQuadraticDivision<S> out;
  out.quotient.assign(deg >= 2 ? deg - 1 : 0, Quaternion<S>{});

  S p(0), q(1);          // z^0 = 0 z + 1
  std::vector<S> Q;      // quotient of z^k, low to high
  auto accumulate = [&](const Quaternion<S>& c) {
    out.remainder.psi1 += p * c;
    out.remainder.psi0 += q * c;
    // Q_k has a zero top entry (p_0 = 0), so it fits in deg - 1 slots.
    for (std::size_t j = 0; j < std::min(Q.size(), out.quotient.size()); ++j) out.quotient[j] += Q[j] * c;
  };
  for (std::size_t k = 0; k <= deg; ++k) {
    accumulate(k < deg ? phi.coeff(k) : Quaternion<S>::one());
    // Q_{k+1} = z Q_k + p_k; p_{k+1} = t p_k + q_k; q_{k+1} = -n p_k
    Q.insert(Q.begin(), p);
    S p_next = t * p + q;
    S q_next = -n * p;
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return out;
}

template <Scalar S>
ReducedPair<S> reduce_mod_central_quadratic(const StandardPoly<S>& phi, const S& t, const S& n) {
  return divide_by_central_quadratic(phi, t, n).remainder;
}

/// Sum a_k x^k with central coefficients.
template <Scalar S>
Quaternion<S> evaluate_central(const Algebra<S>& alg, const CentralPoly<S>& P, const Quaternion<S>& x) {
  Quaternion<S> sum;
  for (auto k = P.coeffs.size(); k-- > 0;) sum = alg.multiply(sum, x) + Quaternion<S>::scalar(P.coeffs[k]);
  return sum;
}

/// 1 + sum ||c_k||, the coefficient scale used by residual bounds.
inline double coefficient_scale(const StandardPoly<double>& phi) {
  double s = 1.0;
  for (const auto& c : phi.coeffs()) s += phi.algebra().magnitude(c);
  return s;
}

inline double max_coefficient_norm(const StandardPoly<double>& phi) {
  double m = 0.0;
  for (const auto& c : phi.coeffs()) m = std::max(m, phi.algebra().magnitude(c));
  return m;
}

}  // namespace quatroots
