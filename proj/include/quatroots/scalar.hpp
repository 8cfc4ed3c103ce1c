#pragma once

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quatroots {

/// Exact rational scalar (arbitrary precision).
using Rational = mpq_class;

/// The two scalar realizations every algebraic routine is generic over.
template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Rational>;

/// Comparison policy for approximate arithmetic: |x - y| <= rel * scale + abs.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-12;

  bool negligible(double x, double scale) const {
    return std::abs(x) <= rel * scale + abs;
  }
  bool close(double x, double y, double scale) const {
    return negligible(x - y, scale);
  }
};

/// Raised for mathematically invalid operations (zero inversion, non-roots, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "approximate";

  static double from_int(long v) { return static_cast<double>(v); }
  static double to_double(double x) { return x; }
  static bool is_zero(double x, double scale, const Tolerance& tol) {
    return tol.negligible(x, scale);
  }
  static double parse(std::string_view text);
  static std::string format(double x);
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static Rational from_int(long v) { return Rational(v); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool is_zero(const Rational& x, double, const Tolerance&) {
    return sgn(x) == 0;
  }
  /// Accepts "p", "p/q" and finite decimals such as "-1.25" (converted exactly).
  static Rational parse(std::string_view text);
  static std::string format(const Rational& x);
};

template <Scalar S>
S from_int(long v) {
  return ScalarTraits<S>::from_int(v);
}

template <Scalar S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

template <Scalar S>
bool is_zero(const S& x, double scale = 1.0, const Tolerance& tol = {}) {
  return ScalarTraits<S>::is_zero(x, scale, tol);
}

}  // namespace quatroots
