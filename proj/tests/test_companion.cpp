#include "doctest.h"

#include "quatroots/companion.hpp"
#include "quatroots/random.hpp"

using namespace quatroots;

namespace {

using Q = Quaternion<Rational>;
using K = KElem<Rational>;

Algebra<Rational> hamilton() { return {Rational(-1), Rational(-1)}; }

// Polynomials over K as coefficient vectors, low to high.
using KPoly = std::vector<K>;

KPoly poly_mul(const Rational& a, const KPoly& p, const KPoly& q) {
  KPoly r(p.size() + q.size() - 1);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      r[x + y] = r[x + y] + K{p[x].re * q[y].re + a * p[x].im * q[y].im, p[x].re * q[y].im + p[x].im * q[y].re};
  return r;
}

KPoly poly_add(KPoly p, const KPoly& q, bool subtract) {
  if (p.size() < q.size()) p.resize(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) p[x] = subtract ? p[x] - q[x] : p[x] + q[x];
  return p;
}

// det(zI - M) by cofactor expansion along the first row, entries z delta_ij - M_ij.
KPoly cofactor_det(const Rational& a, const std::vector<std::vector<KPoly>>& entries) {
  const std::size_t m = entries.size();
  if (m == 1) return entries[0][0];
  KPoly total{K{}};
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<std::vector<KPoly>> minor;
    for (std::size_t r = 1; r < m; ++r) {
      std::vector<KPoly> row;
      for (std::size_t cc = 0; cc < m; ++cc)
        if (cc != c) row.push_back(entries[r][cc]);
      minor.push_back(row);
    }
    total = poly_add(total, poly_mul(a, entries[0][c], cofactor_det(a, minor)), c % 2 == 1);
  }
  return total;
}

KPoly oracle_char_poly(const KMatrix<Rational>& M) {
  const std::size_t m = M.size();
  std::vector<std::vector<KPoly>> entries(m, std::vector<KPoly>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      entries[r][c] = {-M(r, c)};
      if (r == c) entries[r][c].push_back(K{1, 0});
    }
  return cofactor_det(M.a(), entries);
}

QuatMatrix<Rational> random_matrix(RandomSource& rng, const Algebra<Rational>& alg, std::size_t n) {
  return rng.matrix<Rational>(alg, n);
}

}  // namespace

TEST_CASE("companion matrix layout") {
  auto H = hamilton();
  Q c0{1, 2, 3, 4}, c1{0, 1, 0, 0};
  auto C = companion_matrix(StandardPoly<Rational>(H, {c0, c1}));
  CHECK(C(0, 0) == Q{});
  CHECK(C(0, 1) == Q::one());
  CHECK(C(1, 0) == -c0);
  CHECK(C(1, 1) == -c1);

  Q lambda{1, 1, 0, 2};
  auto C1 = companion_matrix(StandardPoly<Rational>(H, {-lambda}));
  CHECK(C1.size() == 1);
  CHECK(C1(0, 0) == lambda);

  auto C2 = companion_matrix(StandardPoly<Rational>(H, {Q::one(), Q{}}));
  CHECK(C2(1, 0) == Q::scalar(-1));
  CHECK(C2(1, 1) == Q{});

  auto C4 = companion_matrix(StandardPoly<Rational>(H, {c0, c1, c0, c1}));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(C4(r, c) == (c == r + 1 ? Q::one() : Q{}));
}

TEST_CASE("embedding examples") {
  Algebra<Rational> alg(Rational(-2), Rational(-7));
  QuatMatrix<Rational> real(alg, 2);
  real(0, 0) = Q::scalar(1);
  real(0, 1) = Q::scalar(2);
  real(1, 0) = Q::scalar(3);
  real(1, 1) = Q::scalar(4);
  auto F = embed(real);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(F(r, c) == K{real(r, c)[0], 0});
      CHECK(F(r + 2, c + 2) == K{real(r, c)[0], 0});
      CHECK(F(r, c + 2) == K{});
      CHECK(F(r + 2, c) == K{});
    }

  QuatMatrix<Rational> J(alg, 1);
  J(0, 0) = Q{0, 0, 1, 0};
  auto FJ = embed(J);
  CHECK(FJ(0, 0) == K{});
  CHECK(FJ(0, 1) == K{-7, 0});
  CHECK(FJ(1, 0) == K{1, 0});
  CHECK(FJ(1, 1) == K{});

  QuatMatrix<Rational> I1(hamilton(), 1);
  I1(0, 0) = Q{0, 1, 0, 0};
  auto FI = embed(I1);
  CHECK(FI(0, 0) == K{0, 1});
  CHECK(FI(1, 1) == K{0, -1});
  CHECK(FI(0, 1) == K{});
  CHECK(FI(1, 0) == K{});

  CHECK(embed(QuatMatrix<Rational>::identity(alg, 3)) == KMatrix<Rational>::identity(alg.a(), 6));
}

TEST_CASE("vector embedding examples") {
  auto H = hamilton();
  CHECK(vector_embed(H, {Q::one()}) == KVector<Rational>{K{1, 0}, K{}});
  CHECK(vector_embed(H, {Q{0, 0, 1, 0}}) == KVector<Rational>{K{}, K{1, 0}});
  CHECK(vector_embed(H, {Q{1, 2, 3, 4}}) == KVector<Rational>{K{1, 2}, K{3, -4}});
  CHECK_THROWS_AS(vector_unembed(H, KVector<Rational>(3)), std::invalid_argument);
}

TEST_CASE("char_poly examples") {
  auto H = hamilton();
  QuatMatrix<Rational> J(H, 1);
  J(0, 0) = Q{0, 0, 1, 0};
  CHECK(char_poly(embed(J)).coeffs == std::vector<Rational>{1, 0, 1});
  CHECK(char_poly(KMatrix<Rational>(Rational(-1), 2)).coeffs == std::vector<Rational>{0, 0, 1});

  StandardPoly<Rational> z2p1(H, {Q::one(), Q{}});
  CHECK(companion_polynomial(z2p1).coeffs == std::vector<Rational>{1, 0, 2, 0, 1});

  Algebra<double> HD(-1.0, -1.0);
  StandardPoly<double> z2p1d(HD, {Quaternion<double>::one(), Quaternion<double>{}});
  CHECK(companion_polynomial(z2p1d).coeffs == std::vector<double>{1, 0, 2, 0, 1});

  // phi = z - c with c central: (z - c)^2
  StandardPoly<Rational> lin(H, {Q::scalar(-3)});
  CHECK(companion_polynomial(lin).coeffs == std::vector<Rational>{9, -6, 1});

  // An odd-size matrix still yields a monic polynomial.
  KMatrix<Rational> M3(Rational(-1), 3);
  M3(0, 0) = K{2, 0};
  M3(1, 1) = K{3, 0};
  M3(2, 2) = K{5, 0};
  CHECK(char_poly(M3).coeffs == std::vector<Rational>{-30, 31, -10, 1});
}

TEST_CASE("non-central characteristic coefficients are rejected") {
  KMatrix<Rational> M(Rational(-1), 1);
  M(0, 0) = K{0, 1};
  CHECK_THROWS_WITH_AS(char_poly(M), "non-central characteristic coefficients", DomainError);
  KMatrix<double> MD(-1.0, 1);
  MD(0, 0) = KElem<double>{0.0, 1.0};
  CHECK_THROWS_WITH_AS(char_poly(MD), "non-central characteristic coefficients", DomainError);
}

TEST_CASE("Faddeev-LeVerrier agrees with cofactor expansion") {
  RandomSource rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = static_cast<std::size_t>(rng.integer(1, 4));
    Rational a(static_cast<long>(-rng.integer(1, 5)));
    KMatrix<Rational> M(a, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) M(r, c) = rng.k_elem<Rational>();
    CHECK(char_poly_k(M) == oracle_char_poly(M));

    // The double route, exact on dyadic data, reproduces integer cases bit for bit.
    KMatrix<double> MD(a.get_d(), m);
    KMatrix<Rational> MI(a, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        K e{Rational(rng.integer(-9, 9)), Rational(rng.integer(-9, 9))};
        MI(r, c) = e;
        MD(r, c) = KElem<double>{e.re.get_d(), e.im.get_d()};
      }
    auto exact = oracle_char_poly(MI);
    auto approx = char_poly_k_exact(MD);
    REQUIRE(approx.size() == exact.size());
    for (std::size_t x = 0; x < exact.size(); ++x) {
      CHECK(approx[x].re == exact[x].re.get_d());
      CHECK(approx[x].im == exact[x].im.get_d());
    }
  }
}

TEST_CASE("embedding is a unital ring homomorphism") {
  RandomSource rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    auto alg = rng.algebra<Rational>();
    const auto n = static_cast<std::size_t>(rng.integer(1, 3));
    auto A = random_matrix(rng, alg, n), B = random_matrix(rng, alg, n);
    CHECK(embed(A * B) == embed(A) * embed(B));
    auto v = rng.quaternions<Rational>(n);
    CHECK(vector_embed(alg, apply_matrix(A, v)) == embed(A) * vector_embed(alg, v));
    CHECK(vector_unembed(alg, vector_embed(alg, v)) == v);

    // Right K-scaling passes through g.
    auto mu = rng.k_elem<Rational>();
    auto scaled = vector_embed(alg, right_scale(alg, v, alg.from_k(mu)));
    auto w = vector_embed(alg, v);
    for (std::size_t x = 0; x < w.size(); ++x) CHECK(scaled[x] == alg.k_multiply(w[x], mu));
  }

  Algebra<double> HD(-1.0, -1.0);
  RandomSource drng(43);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = drng.matrix<double>(HD, 3), B = drng.matrix<double>(HD, 3);
    auto lhs = embed(A * B), rhs = embed(A) * embed(B);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) {
        CHECK(std::abs(lhs(r, c).re - rhs(r, c).re) < 1e-10);
        CHECK(std::abs(lhs(r, c).im - rhs(r, c).im) < 1e-10);
      }
  }
}

TEST_CASE("companion polynomial is central, monic and carries the trace") {
  RandomSource rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    auto alg = rng.algebra<Rational>();
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    auto phi = rng.polynomial<Rational>(alg, n);
    auto ck = char_poly_k(embed(companion_matrix(phi)));
    for (const auto& c : ck) CHECK(c.im == 0);
    auto Phi = companion_polynomial(phi);
    CHECK(Phi.degree() == static_cast<int>(2 * n));
    CHECK(Phi.leading() == 1);
    CHECK(Phi.coeffs[2 * n - 1] == alg.trace(phi.coeff(n - 1)));
  }

  Algebra<double> HD(-1.0, -1.0);
  RandomSource drng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(drng.integer(1, 6));
    auto phi = drng.polynomial<double>(HD, n);
    auto Phi = companion_polynomial(phi);
    const double expected = HD.trace(phi.coeff(n - 1));
    CHECK(std::abs(Phi.coeffs[2 * n - 1] - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("roots of phi are roots of the companion polynomial") {
  RandomSource rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    auto alg = rng.algebra<Rational>();
    auto roots = rng.quaternions<Rational>(static_cast<std::size_t>(rng.integer(1, 4)));
    auto Phi = companion_polynomial(from_left_factors(alg, roots));
    CHECK(evaluate_central(alg, Phi, roots.front()).is_zero());
  }
}
