#include "quatroots/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quatroots {

const char* to_string(RootKind kind) {
  switch (kind) {
    case RootKind::Isolated: return "isolated";
    case RootKind::Spherical: return "spherical";
    case RootKind::Central: return "central";
    case RootKind::Inconsistent: return "inconsistent";
  }
  return "unknown";
}

Quaternion<double> class_representative(const ConjClass& cls, const Algebra<double>& alg, const Tolerance& tol) {
  const double half = 0.5 * cls.t;
  double gap = cls.n - half * half;
  if (gap < 0.0) {
    if (!tol.negligible(gap, std::max({1.0, std::abs(cls.t), std::abs(cls.n)})))
      throw DomainError("class not realized in D");
    gap = 0.0;
  }
  return {half, std::sqrt(gap / -alg.a()), 0.0, 0.0};
}

RootReport classify_class(const StandardPoly<double>& phi, const ConjClass& cls, const RecoveryOptions& options) {
  const auto& alg = phi.algebra();
  RootReport report;
  report.cls = cls;

  auto [psi1, psi0] = reduce_mod_central_quadratic(phi, cls.t, cls.n);
  report.psi1_norm = alg.magnitude(psi1);
  report.psi0_norm = alg.magnitude(psi0);
  // Members of the class have magnitude sqrt(n); psi1 grows like rho^{deg-1}
  // and psi0, phi(lambda) like rho^deg, so thresholds follow that growth.
  const double rho = std::max(1.0, std::sqrt(std::max(0.0, cls.n)));
  const double deg = static_cast<double>(phi.degree());
  const double tau1 = options.psi_rel * (1.0 + max_coefficient_norm(phi)) * std::pow(rho, deg - 1.0);
  const double tau0 = tau1 * rho;
  const double residual_bound = options.residual_rel * coefficient_scale(phi) * std::pow(rho, deg);

  auto invariants_match = [&](const Quaternion<double>& q) {
    auto [t, n] = alg.reduced_invariants(q);
    return std::abs(t - cls.t) <= options.invariant_rel * std::max(1.0, std::abs(cls.t)) &&
           std::abs(n - cls.n) <= options.invariant_rel * std::max(1.0, std::abs(cls.n));
  };

  if (report.psi1_norm > tau1) {
    Quaternion<double> root;
    try {
      root = -alg.multiply(alg.invert(psi1, options.tol), psi0);
    } catch (const DomainError& e) {
      report.kind = RootKind::Inconsistent;
      report.diagnostics = std::string("psi1 inversion failed: ") + e.what();
      return report;
    }
    report.root = root;
    report.residual = alg.magnitude(evaluate(phi, root));
    const bool matches = invariants_match(root);
    if (matches && report.residual <= residual_bound) {
      report.kind = cls.central ? RootKind::Central : RootKind::Isolated;
    } else {
      report.kind = RootKind::Inconsistent;
      std::ostringstream msg;
      msg << "linear psi root failed verification:";
      if (!matches) msg << " invariants do not match class;";
      if (report.residual > residual_bound) msg << " residual " << report.residual << " > " << residual_bound << ";";
      report.diagnostics = msg.str();
    }
    return report;
  }

  try {
    report.root = class_representative(cls, alg, options.tol);
  } catch (const DomainError& e) {
    report.kind = RootKind::Inconsistent;
    report.diagnostics = e.what();
    return report;
  }
  report.residual = alg.magnitude(evaluate(phi, report.root));
  if (report.psi0_norm <= tau0) {
    // A central class has a single element, so "every conjugate is a root" names one root.
    report.kind = cls.central ? RootKind::Central : RootKind::Spherical;
  } else {
    report.kind = RootKind::Inconsistent;
    std::ostringstream msg;
    msg << "psi is a nonzero constant: |psi1| = " << report.psi1_norm << ", |psi0| = " << report.psi0_norm
        << ", thresholds " << tau1 << ", " << tau0;
    report.diagnostics = msg.str();
  }
  return report;
}

SolveResult solve(const StandardPoly<double>& phi, const RecoveryOptions& options) {
  SolveResult result;
  result.companion = companion_polynomial(phi, options.tol);
  auto roots = complex_roots(result.companion, options.root_finder);
  auto classes = cluster_classes(roots, options.tol);
  result.reports.reserve(classes.size());
  for (const auto& cls : classes) result.reports.push_back(classify_class(phi, cls, options));
  std::sort(result.reports.begin(), result.reports.end(), [](const RootReport& x, const RootReport& y) {
    return x.cls.t != y.cls.t ? x.cls.t < y.cls.t : x.cls.n < y.cls.n;
  });
  for (const auto& r : result.reports)
    if (r.kind == RootKind::Isolated || r.kind == RootKind::Central)
      result.max_residual = std::max(result.max_residual, r.residual);
  return result;
}

}  // namespace quatroots
