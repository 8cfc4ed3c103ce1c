#include "quatroots/companion.hpp"

#include <climits>
#include <cmath>

namespace quatroots {

namespace {

// re + im sqrt(a) with integer parts.
struct ZElem {
  mpz_class re;
  mpz_class im;
};

// Smallest E with x * 2^E integral for every finite x.
long dyadic_shift(const KMatrix<double>& M) {
  long shift = 0;
  for (std::size_t r = 0; r < M.size(); ++r)
    for (std::size_t c = 0; c < M.size(); ++c)
      for (double x : {M(r, c).re, M(r, c).im}) {
        if (x == 0.0) continue;
        if (!std::isfinite(x)) throw std::invalid_argument("matrix has non-finite entries");
        int e = 0;
        std::frexp(x, &e);
        shift = std::max(shift, static_cast<long>(std::numeric_limits<double>::digits) - e);
      }
  return shift;
}

mpz_class to_integer(double x, long shift) {
  mpz_class z;
  mpz_set_d(z.get_mpz_t(), std::ldexp(x, static_cast<int>(shift)));
  return z;
}

double ratio_to_double(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q.get_d();
}

// Faddeev-LeVerrier over Z[sqrt(a)] for an integer-valued a; all divisions exact.
std::vector<KElem<double>> char_poly_integral(const KMatrix<double>& M, long a) {
  const std::size_t m = M.size();
  const long shift = dyadic_shift(M);
  if (shift > 4 * 1074) throw std::invalid_argument("matrix entries span too many binary orders");
  const bool negative_shift = shift < 0;
  const long abs_shift = negative_shift ? -shift : shift;

  std::vector<ZElem> B(m * m);
  for (std::size_t k = 0; k < m * m; ++k) {
    const auto& e = M(k / m, k % m);
    B[k] = {to_integer(e.re, shift), to_integer(e.im, shift)};
  }
  const mpz_class az(a);
  auto mul_add = [&](ZElem& acc, const ZElem& x, const ZElem& y) {
    acc.re += x.re * y.re + az * x.im * y.im;
    acc.im += x.re * y.im + x.im * y.re;
  };
  auto product = [&](const std::vector<ZElem>& X, const std::vector<ZElem>& Y) {
    std::vector<ZElem> Z(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        const auto& x = X[i * m + k];
        if (sgn(x.re) == 0 && sgn(x.im) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) mul_add(Z[i * m + j], x, Y[k * m + j]);
      }
    return Z;
  };

  // d_k = c_k s^{m-k} for s = 2^shift; d is the characteristic polynomial of B.
  std::vector<ZElem> d(m + 1);
  d[m] = {1, 0};
  std::vector<ZElem> N(m * m);
  for (std::size_t k = 1; k <= m; ++k) {
    N = product(B, N);
    for (std::size_t i = 0; i < m; ++i) {
      N[i * m + i].re += d[m - k + 1].re;
      N[i * m + i].im += d[m - k + 1].im;
    }
    auto BN = product(B, N);
    ZElem tr;
    for (std::size_t i = 0; i < m; ++i) {
      tr.re += BN[i * m + i].re;
      tr.im += BN[i * m + i].im;
    }
    const mpz_class kk(static_cast<unsigned long>(k));
    mpz_divexact(d[m - k].re.get_mpz_t(), tr.re.get_mpz_t(), kk.get_mpz_t());
    mpz_divexact(d[m - k].im.get_mpz_t(), tr.im.get_mpz_t(), kk.get_mpz_t());
    d[m - k].re = -d[m - k].re;
    d[m - k].im = -d[m - k].im;
  }

  std::vector<KElem<double>> c(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(abs_shift) * (m - k));
    if (negative_shift) {
      c[k] = {mpz_class(d[k].re * scale).get_d(), mpz_class(d[k].im * scale).get_d()};
    } else {
      c[k] = {ratio_to_double(d[k].re, scale), ratio_to_double(d[k].im, scale)};
    }
  }
  return c;
}

std::vector<KElem<double>> char_poly_rational(const KMatrix<double>& M) {
  KMatrix<Rational> R(Rational(M.a()), M.size());
  for (std::size_t r = 0; r < M.size(); ++r)
    for (std::size_t c = 0; c < M.size(); ++c) R(r, c) = {Rational(M(r, c).re), Rational(M(r, c).im)};
  auto exact = char_poly_k(R);
  std::vector<KElem<double>> out;
  out.reserve(exact.size());
  for (const auto& e : exact) out.push_back({e.re.get_d(), e.im.get_d()});
  return out;
}

}  // namespace

std::vector<KElem<double>> char_poly_k_exact(const KMatrix<double>& M) {
  const double a = M.a();
  if (a == std::trunc(a) && std::abs(a) < 0x1p52) return char_poly_integral(M, static_cast<long>(a));
  return char_poly_rational(M);
}

}  // namespace quatroots
