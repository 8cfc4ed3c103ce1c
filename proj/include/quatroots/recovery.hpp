#pragma once

#include <string>
#include <vector>

#include "quatroots/companion.hpp"
#include "quatroots/rootfind.hpp"

namespace quatroots {

enum class RootKind { Isolated, Spherical, Central, Inconsistent };

const char* to_string(RootKind kind);

/// Outcome of the recovery step for one conjugacy class of roots of Phi.
struct RootReport {
  ConjClass cls;
  RootKind kind = RootKind::Inconsistent;
  /// The root (Isolated, Central) or a class representative (Spherical,
  /// and the best candidate for Inconsistent).
  Quaternion<double> root;
  /// |phi(root)| measured with sqrt(nrd).
  double residual = 0.0;
  double psi1_norm = 0.0;
  double psi0_norm = 0.0;
  std::string diagnostics;
};

struct SolveResult {
  std::vector<RootReport> reports;
  CentralPoly<double> companion;
  double max_residual = 0.0;
};

struct RecoveryOptions {
  /// psi1 is treated as zero below psi_rel * (1 + max ||c_k||) * rho^{n-1} and
  /// psi0 below the same times rho, where rho = max(1, sqrt(class norm)).
  double psi_rel = 1e-8;
  /// Isolated and central roots must satisfy |phi(root)| <= residual_rel * (1 + sum ||c_k||) * rho^n.
  double residual_rel = 1e-7;
  /// Relative agreement required between reduced invariants of a root and its class.
  double invariant_rel = 1e-6;
  Tolerance tol;
  RootFinderOptions root_finder;
};

/// t/2 + sqrt((n - t^2/4) / (-a)) i, an element of F(i) with invariants (t, n).
Quaternion<double> class_representative(const ConjClass& cls, const Algebra<double>& alg, const Tolerance& tol = {});

/// Decides whether phi has a single root in the class (Psi linear) or the
/// whole class consists of roots (Psi identically zero).
RootReport classify_class(const StandardPoly<double>& phi, const ConjClass& cls, const RecoveryOptions& options = {});

/// companion_polynomial -> complex_roots -> cluster_classes -> classify_class,
/// one report per class, sorted by (t, n).
SolveResult solve(const StandardPoly<double>& phi, const RecoveryOptions& options = {});

}  // namespace quatroots
