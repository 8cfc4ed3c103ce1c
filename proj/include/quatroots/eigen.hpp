#pragma once

#include <vector>

#include "quatroots/companion.hpp"
#include "quatroots/rootfind.hpp"

namespace quatroots {

enum class Side { Left, Right };

/// A v = v lambda (Right) or A v = lambda v (Left).
struct EigenPair {
  Quaternion<double> value;
  QuatVector<double> vector;
  Side side = Side::Right;
  /// max_i ||(A v)_i - (v lambda)_i|| (or lambda v_i for Left).
  double residual = 0.0;
};

struct EigenOptions {
  /// |Phi_A(lambda)| must be below eigen_rel * sum |a_k| |lambda|^k.
  double eigen_rel = 1e-8;
  /// Pivots below null_rel * max entry norm count as zero during elimination.
  double null_rel = 1e-10;
  /// Companion left-eigenvector check: residual_rel * (1 + sum ||c_k||) * max(1, |lambda|)^n.
  double residual_rel = 1e-8;
  Tolerance tol;
};

/// Phi_A = det(f(A) - zI).
CentralPoly<double> right_char_poly(const QuatMatrix<double>& A, const Tolerance& tol = {});

/// Right eigenvalues are exactly the roots of Phi_A in D.
bool is_right_eigenvalue(const QuatMatrix<double>& A, const Quaternion<double>& lambda,
                         const EigenOptions& options = {});

/// Conjugacy classes of right eigenvalues, from the roots of Phi_A.
std::vector<ConjClass> right_eigenvalue_classes(const QuatMatrix<double>& A, const EigenOptions& options = {},
                                                const RootFinderOptions& root_options = {});

/// A right eigenvector for lambda in the fixed subfield F(i): a null vector
/// of f(A) - lambda I pulled back through vector_embed. The vector is scaled
/// on the right by an element of F(i) so that its first nonzero entry has
/// the form 1 + j w (or j when that entry has no F(i) part).
EigenPair right_eigenvector(const QuatMatrix<double>& A, const KElem<double>& lambda,
                            const EigenOptions& options = {});

/// (1, lambda, ..., lambda^{n-1}) as a left eigenvector of the companion
/// matrix; throws "not a root" when C v != lambda v at working precision.
EigenPair left_companion_eigenvector(const StandardPoly<double>& phi, const Quaternion<double>& lambda,
                                     const EigenOptions& options = {});

/// v_1 lambda v_1^{-1}, a root of phi whenever (lambda, v) is a right eigenpair of C_phi.
Quaternion<double> root_from_right_pair(const Algebra<double>& alg, const EigenPair& pair,
                                        const Tolerance& tol = {});

/// Some q with q from q^{-1} = to, for two elements with equal reduced
/// invariants. Throws DomainError when the invariants differ.
Quaternion<double> conjugating_element(const Algebra<double>& alg, const Quaternion<double>& from,
                                       const Quaternion<double>& to, const Tolerance& tol = {});

/// max_i ||(A v)_i - (v lambda)_i||.
double right_residual(const QuatMatrix<double>& A, const QuatVector<double>& v, const Quaternion<double>& lambda);

/// max_i ||(A v)_i - (lambda v)_i||.
double left_residual(const QuatMatrix<double>& A, const QuatVector<double>& v, const Quaternion<double>& lambda);

}  // namespace quatroots
