#include "doctest.h"

#include "quatroots/eigen.hpp"
#include "quatroots/random.hpp"
#include "quatroots/recovery.hpp"

using namespace quatroots;

namespace {

using QD = Quaternion<double>;

const Algebra<double> H(-1.0, -1.0);
const QD one = QD::one();
const QD i{0, 1, 0, 0};
const QD j{0, 0, 1, 0};
const QD k{0, 0, 0, 1};

QuatMatrix<double> single(const QD& q) {
  QuatMatrix<double> A(H, 1);
  A(0, 0) = q;
  return A;
}

double dist(const QD& p, const QD& q) { return max_abs(p - q); }

}  // namespace

TEST_CASE("is_right_eigenvalue examples") {
  auto A = single(j);
  CHECK(right_char_poly(A).coeffs == std::vector<double>{1, 0, 1});
  CHECK(is_right_eigenvalue(A, j));
  CHECK(is_right_eigenvalue(A, i));
  CHECK_FALSE(is_right_eigenvalue(A, QD::scalar(1)));

  RandomSource rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    auto q = rng.nonzero_quaternion<double>();
    CHECK(is_right_eigenvalue(A, H.multiply(H.multiply(q, j), H.invert(q))));
  }

  auto I2 = QuatMatrix<double>::identity(H, 2);
  CHECK(right_char_poly(I2).coeffs == std::vector<double>{1, -4, 6, -4, 1});
  CHECK_FALSE(is_right_eigenvalue(I2, i));
  CHECK(is_right_eigenvalue(I2, one));
}

TEST_CASE("right_eigenvector examples") {
  auto pair = right_eigenvector(single(j), KElem<double>{0, 1});
  REQUIRE(pair.vector.size() == 1);
  CHECK(dist(pair.vector[0], one + k) < 1e-12);
  CHECK(pair.side == Side::Right);
  CHECK(pair.residual < 1e-12);
  CHECK(dist(H.multiply(j, pair.vector[0]), H.multiply(pair.vector[0], i)) < 1e-12);

  QuatMatrix<double> D(H, 3);
  for (std::size_t x = 0; x < 3; ++x) D(x, x) = QD::scalar(x == 0 ? 2.0 : 5.0);
  auto e = right_eigenvector(D, KElem<double>{2, 0});
  CHECK(dist(e.vector[0], one) < 1e-12);
  CHECK(max_abs(e.vector[1]) < 1e-12);
  CHECK(max_abs(e.vector[2]) < 1e-12);

  auto C = companion_matrix(StandardPoly<double>(H, {one, QD{}}));
  auto c = right_eigenvector(C, KElem<double>{0, 1});
  CHECK(right_residual(C, c.vector, i) < 1e-12);

  CHECK_THROWS_WITH_AS(right_eigenvector(single(j), KElem<double>{1, 0}), "not an eigenvalue at working precision",
                       DomainError);
}

TEST_CASE("left companion eigenvectors") {
  auto z2p1 = StandardPoly<double>(H, {one, QD{}});
  auto p = left_companion_eigenvector(z2p1, i);
  REQUIRE(p.vector.size() == 2);
  CHECK(p.vector[0] == one);
  CHECK(p.vector[1] == i);
  CHECK(p.side == Side::Left);
  CHECK(p.residual == 0.0);

  QD c{1, 2, 3, 4};
  auto lin = left_companion_eigenvector(StandardPoly<double>(H, {-c}), c);
  CHECK(lin.vector == QuatVector<double>{one});

  auto quad = StandardPoly<double>(H, {-k, -(i + j)});
  auto q = left_companion_eigenvector(quad, i);
  CHECK(q.residual < 1e-12);
  // The same vector also satisfies C v = v lambda, so it certifies a right pair.
  CHECK(right_residual(companion_matrix(quad), q.vector, i) < 1e-12);
  CHECK(dist(root_from_right_pair(H, {i, q.vector, Side::Right, 0.0}), i) < 1e-12);

  CHECK_THROWS_WITH_AS(left_companion_eigenvector(z2p1, QD::scalar(1)), "not a root", DomainError);
}

TEST_CASE("root_from_right_pair") {
  QD lambda{1, 2, -1, 0.5};
  EigenPair unit{lambda, {one, QD{3, 0, 0, 0}}, Side::Right, 0.0};
  CHECK(dist(root_from_right_pair(H, unit), lambda) < 1e-15);
  EigenPair bad{lambda, {QD{}, one}, Side::Right, 0.0};
  CHECK_THROWS_WITH_AS(root_from_right_pair(H, bad), "degenerate eigenvector leading entry", DomainError);

  RandomSource rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    auto roots = rng.quaternions<double>(2);
    auto phi = from_left_factors(H, roots);
    auto C = companion_matrix(phi);
    for (const auto& cls : right_eigenvalue_classes(C)) {
      auto rep = class_representative(cls, H);
      auto pair = right_eigenvector(C, KElem<double>{rep[0], rep[1]});
      CHECK(pair.residual <= 1e-8 * coefficient_scale(phi));
      auto root = root_from_right_pair(H, pair);
      CHECK(H.magnitude(evaluate(phi, root)) <= 1e-7 * coefficient_scale(phi));
    }
  }
}

TEST_CASE("conjugating_element") {
  RandomSource rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    auto alg = rng.algebra<double>();
    auto from = rng.quaternion<double>();
    auto q = rng.nonzero_quaternion<double>();
    auto to = alg.multiply(alg.multiply(q, from), alg.invert(q));
    auto r = conjugating_element(alg, from, to);
    CHECK(max_abs(alg.multiply(alg.multiply(r, from), alg.invert(r)) - to) < 1e-9 * (1.0 + max_abs(to)));
  }
  // Antipodal pure parts need a different construction.
  auto r = conjugating_element(H, i, -i);
  CHECK(dist(H.multiply(H.multiply(r, i), H.invert(r)), -i) < 1e-12);
  CHECK(dist(conjugating_element(H, QD::scalar(3), QD::scalar(3)), one) < 1e-12);
  CHECK_THROWS_WITH_AS(conjugating_element(H, i, QD{0, 2, 0, 0}), "elements are not conjugate", DomainError);
}

TEST_CASE("right eigenvalues of random matrices") {
  RandomSource rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    auto alg = rng.algebra<double>();
    const auto n = static_cast<std::size_t>(rng.integer(1, 3));
    auto A = rng.matrix<double>(alg, n);
    auto Phi = right_char_poly(A);
    CHECK(Phi.degree() == static_cast<int>(2 * n));
    for (const auto& cls : right_eigenvalue_classes(A)) {
      auto rep = class_representative(cls, alg);
      CHECK(is_right_eigenvalue(A, rep));
      auto pair = right_eigenvector(A, KElem<double>{rep[0], rep[1]});
      double vmax = 0.0;
      for (const auto& e : pair.vector) vmax = std::max(vmax, alg.magnitude(e));
      CHECK(vmax > 0.0);
      CHECK(right_residual(A, pair.vector, rep) <= 1e-8 * (1.0 + Phi.scale()) * vmax);
    }
  }
}
