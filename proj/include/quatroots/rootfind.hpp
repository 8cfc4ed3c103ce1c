#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatroots/polynomial.hpp"

namespace quatroots {

struct ComplexRoot {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;

  std::complex<double> value() const { return {re, im}; }
};

/// Conjugacy class of (a, b)_R with a, b < 0, parametrized by the
/// characteristic polynomial z^2 - t z + n of its members.
struct ConjClass {
  double t = 0.0;
  double n = 0.0;
  int multiplicity = 1;
  bool central = false;
};

struct RootFinderOptions {
  int max_iterations = 200;
  /// A root is converged once its Aberth step is below step_tol * radius.
  double step_tol = 1e-13;
  /// Single-linkage clustering radius, relative to max(1, max |root|).
  double cluster_radius = 1e-6;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::complex<double>> iterates,
                   std::vector<double> residuals)
      : std::runtime_error(what), iterates_(std::move(iterates)), residuals_(std::move(residuals)) {}

  const std::vector<std::complex<double>>& iterates() const { return iterates_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<std::complex<double>> iterates_;
  std::vector<double> residuals_;
};

/// All roots of a real polynomial by Aberth-Ehrlich simultaneous iteration,
/// clustered into multiple roots and made exactly conjugate-symmetric.
/// The multiplicities sum to deg(P).
std::vector<ComplexRoot> complex_roots(const CentralPoly<double>& P, const RootFinderOptions& options = {});

/// Groups roots of a real polynomial into conjugacy classes: a conjugate
/// pair gives (2 re, re^2 + im^2), a real root r gives the central class (2r, r^2).
std::vector<ConjClass> cluster_classes(std::span<const ComplexRoot> roots, const Tolerance& tol = {});

/// |P(z)|, evaluated by Horner in complex arithmetic.
double complex_residual(const CentralPoly<double>& P, std::complex<double> z);

}  // namespace quatroots
