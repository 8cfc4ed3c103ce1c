#pragma once

#include <random>
#include <vector>

#include "quatroots/companion.hpp"

namespace quatroots {

/// Deterministic generators for randomized property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  /// Small rational p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 9, long max_den = 5) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  template <Scalar S>
  S scalar(double lo = -5.0, double hi = 5.0) {
    if constexpr (ScalarTraits<S>::exact)
      return rational();
    else
      return uniform(lo, hi);
  }

  template <Scalar S>
  Quaternion<S> quaternion(double lo = -5.0, double hi = 5.0) {
    return {scalar<S>(lo, hi), scalar<S>(lo, hi), scalar<S>(lo, hi), scalar<S>(lo, hi)};
  }

  template <Scalar S>
  Quaternion<S> nonzero_quaternion(double lo = -5.0, double hi = 5.0) {
    while (true) {
      auto q = quaternion<S>(lo, hi);
      if (!q.is_zero()) return q;
    }
  }

  template <Scalar S>
  KElem<S> k_elem(double lo = -5.0, double hi = 5.0) {
    return {scalar<S>(lo, hi), scalar<S>(lo, hi)};
  }

  /// a, b drawn from {-1, -2, -3, -5}.
  template <Scalar S>
  Algebra<S> algebra() {
    static constexpr long choices[] = {-1, -2, -3, -5};
    return Algebra<S>(from_int<S>(choices[integer(0, 3)]), from_int<S>(choices[integer(0, 3)]));
  }

  template <Scalar S>
  StandardPoly<S> polynomial(const Algebra<S>& alg, std::size_t degree, double lo = -5.0, double hi = 5.0) {
    std::vector<Quaternion<S>> coeffs;
    for (std::size_t k = 0; k < degree; ++k) coeffs.push_back(quaternion<S>(lo, hi));
    return StandardPoly<S>(alg, std::move(coeffs));
  }

  template <Scalar S>
  QuatMatrix<S> matrix(const Algebra<S>& alg, std::size_t n, double lo = -5.0, double hi = 5.0) {
    QuatMatrix<S> A(alg, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) A(r, c) = quaternion<S>(lo, hi);
    return A;
  }

  template <Scalar S>
  std::vector<Quaternion<S>> quaternions(std::size_t count, double lo = -5.0, double hi = 5.0) {
    std::vector<Quaternion<S>> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(quaternion<S>(lo, hi));
    return out;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace quatroots
