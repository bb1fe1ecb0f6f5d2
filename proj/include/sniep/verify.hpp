#pragma once

#include <array>

#include "sniep/matrix.hpp"
#include "sniep/spectrum.hpp"

namespace sniep {

// Verification never reuses the construction formulas: eigenvalues come from
// Jacobi rotations on the matrix, the characteristic polynomial from trace
// recurrences on its powers.

/// Coefficients {1, q4, q3, q2, q1, q0} of det(zI - M), computed with the
/// Faddeev-LeVerrier recurrence.
std::array<double, kOrder + 1> char_poly_coeffs(const SymMatrix5& m);

inline constexpr int kDefaultJacobiSweeps = 30;

/// Eigenvalues of a symmetric matrix by row-cyclic Jacobi rotations.
/// Converged once the off-diagonal Frobenius norm is at most
/// 1e-13 * (1 + ||M||_F); throws NoConvergence after `max_sweeps` sweeps.
SortedSpectrum sym_eigenvalues(const SymMatrix5& m, int max_sweeps = kDefaultJacobiSweeps);

struct VerificationReport {
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;  // absolute: rel_tol * max(1, |lambda1|)
  Values eigenvalues{};
  Values target{};
};

/// Passes iff max_i |eig_i - lambda_i| <= rel_tol * max(1, |lambda1|), both
/// lists sorted descending. Throws std::invalid_argument unless rel_tol > 0.
VerificationReport verify_spectrum(const SymMatrix5& m, const SortedSpectrum& target,
                                   double rel_tol);

/// Every entry lies in [0, rho] up to a slack of 1e-12 * (1 + rho), where
/// rho is the largest eigenvalue magnitude. Holds for any symmetric
/// nonnegative matrix.
bool entry_bound_check(const SymMatrix5& m);

}  // namespace sniep
