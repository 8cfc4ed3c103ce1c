#include "quatroots/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>

namespace quatroots {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Signed integer literal as a Rational; throws on anything else.
Rational parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits))
    throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'");
  std::string str(s.front() == '+' ? s.substr(1) : s);
  return Rational(mpz_class(str, 10));
}

}  // namespace

double ScalarTraits<double>::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    double num = parse(s.substr(0, slash));
    double den = parse(s.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  return value;
}

std::string ScalarTraits<double>::format(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational ScalarTraits<Rational>::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(trim(s.substr(0, slash)), text);
    Rational den = parse_integer(trim(s.substr(slash + 1)), text);
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }

  // Decimal with optional fraction and exponent, converted exactly.
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_part.data() + (exp_part.size() && exp_part.front() == '+'),
                                     exp_part.data() + exp_part.size(), exponent);
    if (exp_part.empty() || ec != std::errc() || ptr != exp_part.data() + exp_part.size())
      throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot), frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    digits = std::string(s);
  }
  if (exponent > 4096 || exponent < -4096)
    throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
  Rational r(mpz_class(digits.empty() ? std::string("0") : digits, 10));
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0)
    r *= ten_pow;
  else
    r /= ten_pow;
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string ScalarTraits<Rational>::format(const Rational& x) {
  return x.get_str(10);
}

}  // namespace quatroots
