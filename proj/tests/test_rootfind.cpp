#include "doctest.h"

#include <algorithm>
#include <complex>
#include <random>

#include "quatroots/rootfind.hpp"

using namespace quatroots;

namespace {

std::vector<double> expand(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  std::vector<double> out;
  for (const auto& x : c) out.push_back(x.real());
  return out;
}

int total_multiplicity(const std::vector<ComplexRoot>& roots) {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

}  // namespace

TEST_CASE("simple examples") {
  auto r = complex_roots(CentralPoly<double>({1.0, 0.0, 1.0}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].re == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r[0].im == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r[1].im == doctest::Approx(1.0).epsilon(1e-12));

  auto s = complex_roots(CentralPoly<double>({2.0, -3.0, 1.0}));
  REQUIRE(s.size() == 2);
  CHECK(s[0].re == doctest::Approx(1.0));
  CHECK(s[1].re == doctest::Approx(2.0));
  CHECK(s[0].im == 0.0);
  CHECK(s[1].im == 0.0);

  auto lin = complex_roots(CentralPoly<double>({-5.0, 2.0}));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].re == 2.5);
}

TEST_CASE("double roots are clustered") {
  auto r = complex_roots(CentralPoly<double>({1.0, 0.0, 2.0, 0.0, 1.0}));
  REQUIRE(r.size() == 2);
  for (const auto& x : r) {
    CHECK(x.multiplicity == 2);
    CHECK(std::abs(x.re) < 1e-9);
    CHECK(std::abs(std::abs(x.im) - 1.0) < 1e-9);
  }
  CHECK(r[0].im == -r[1].im);

  // (z - 1)^3
  auto c = complex_roots(CentralPoly<double>({-1.0, 3.0, -3.0, 1.0}));
  REQUIRE(c.size() == 1);
  CHECK(c[0].multiplicity == 3);
  CHECK(c[0].re == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("zero roots are split off exactly") {
  auto r = complex_roots(CentralPoly<double>({0.0, 0.0, 0.0, 1.0}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].re == 0.0);
  CHECK(r[0].multiplicity == 3);

  auto s = complex_roots(CentralPoly<double>({0.0, 0.0, 1.0, 0.0, 1.0}));
  CHECK(total_multiplicity(s) == 4);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(complex_roots(CentralPoly<double>({3.0})), std::invalid_argument);
  CHECK_THROWS_AS(complex_roots(CentralPoly<double>({1.0, std::nan(""), 1.0})), std::invalid_argument);
}

TEST_CASE("non-convergence reports iterates") {
  RootFinderOptions opts;
  opts.max_iterations = 1;
  try {
    complex_roots(CentralPoly<double>({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0}), opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).starts_with("root finder failed to converge"));
    CHECK(e.iterates().size() == 6);
    CHECK(e.residuals().size() == 6);
  }
}

TEST_CASE("random polynomials: residuals, symmetry, multiplicities") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 12);
    std::vector<double> c;
    for (int k = 0; k < deg; ++k) c.push_back(coord(rng));
    c.push_back(1.0);
    CentralPoly<double> P(c);
    auto roots = complex_roots(P);
    CHECK(total_multiplicity(roots) == deg);
    double bound_scale = 0.0;
    for (double x : c) bound_scale = std::max(bound_scale, std::abs(x));
    for (const auto& r : roots) {
      const double mag = std::max(1.0, std::abs(r.value()));
      CHECK(complex_residual(P, r.value()) <= 1e-9 * bound_scale * std::pow(mag, deg));
      if (r.im != 0.0) {
        auto partner = std::find_if(roots.begin(), roots.end(), [&](const ComplexRoot& x) {
          return x.re == r.re && x.im == -r.im && x.multiplicity == r.multiplicity;
        });
        CHECK(partner != roots.end());
      }
    }
  }
}

TEST_CASE("prescribed roots are recovered") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::complex<double>> truth;
    const int pairs = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < pairs; ++k) {
      std::complex<double> z(coord(rng), coord(rng));
      truth.push_back(z);
      truth.push_back(std::conj(z));
      if (rng() % 3 == 0) {  // repeated pair, as produced by spherical classes
        truth.push_back(z);
        truth.push_back(std::conj(z));
      }
    }
    truth.push_back(coord(rng));
    auto roots = complex_roots(CentralPoly<double>(expand(truth)));
    CHECK(total_multiplicity(roots) == static_cast<int>(truth.size()));
    for (const auto& z : truth) {
      double best = 1e300;
      for (const auto& r : roots) best = std::min(best, std::abs(r.value() - z));
      CHECK(best < 1e-6);
    }
  }
}

TEST_CASE("cluster_classes") {
  std::vector<ComplexRoot> pair{{0, -1, 1}, {0, 1, 1}};
  auto c = cluster_classes(pair);
  REQUIRE(c.size() == 1);
  CHECK(c[0].t == 0.0);
  CHECK(c[0].n == 1.0);
  CHECK(c[0].multiplicity == 1);
  CHECK_FALSE(c[0].central);

  std::vector<ComplexRoot> reals{{1, 0, 1}, {2, 0, 1}};
  auto d = cluster_classes(reals);
  REQUIRE(d.size() == 2);
  CHECK(d[0].t == 2.0);
  CHECK(d[0].n == 1.0);
  CHECK(d[0].central);
  CHECK(d[1].t == 4.0);
  CHECK(d[1].n == 4.0);
  CHECK(d[1].central);

  std::vector<ComplexRoot> dbl{{3, -4, 2}, {3, 4, 2}};
  auto e = cluster_classes(dbl);
  REQUIRE(e.size() == 1);
  CHECK(e[0].t == 6.0);
  CHECK(e[0].n == 25.0);
  CHECK(e[0].multiplicity == 2);

  // Nearly equal classes merge.
  std::vector<ComplexRoot> near{{1, -2, 1}, {1, 2, 1}, {1 + 1e-13, -2, 1}, {1 + 1e-13, 2, 1}};
  auto f = cluster_classes(near);
  REQUIRE(f.size() == 1);
  CHECK(f[0].multiplicity == 2);

  // Classes reconstruct the polynomial they came from.
  CentralPoly<double> P({10.0, -6.0, 6.0, -2.0, 1.0});  // (z^2 + 2)(z^2 - 2 z + 5)
  auto roots = complex_roots(P);
  std::vector<std::complex<double>> all;
  for (const auto& cls : cluster_classes(roots)) {
    const double disc = cls.n - 0.25 * cls.t * cls.t;
    std::complex<double> z(0.5 * cls.t, std::sqrt(std::max(0.0, disc)));
    for (int m = 0; m < cls.multiplicity; ++m) {
      all.push_back(z);
      all.push_back(std::conj(z));
    }
  }
  auto rebuilt = expand(all);
  REQUIRE(rebuilt.size() == P.coeffs.size());
  for (std::size_t k = 0; k < rebuilt.size(); ++k) CHECK(rebuilt[k] == doctest::Approx(P.coeffs[k]).epsilon(1e-9));
}
