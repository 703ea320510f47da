#pragma once

#include <castelnuovo/integer.hpp>
#include <castelnuovo/polytope.hpp>

#include <cstddef>
#include <vector>

namespace castelnuovo {

/// Coefficients h*_0..h*_n of (1-t)^{n+1} times the Ehrhart series.
struct HStarVector {
  std::size_t dim = 0;
  std::vector<Integer> coeffs;

  const Integer& operator[](std::size_t i) const { return coeffs.at(i); }
  /// Largest index with a nonzero coefficient.
  std::size_t degree() const;
  /// Sum of the coefficients.
  Integer volume() const;

  friend bool operator==(const HStarVector& a, const HStarVector& b) {
    return a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

/// Lattice point counts L(0), ..., L(K) of the dilates, with L(0) = 1.
struct EhrhartProfile {
  std::vector<Integer> counts;
};

EhrhartProfile ehrhart_profile(const Polytope& p, unsigned max_k, const CountOptions& options = {});

/// h*_i = sum_{j<=i} (-1)^j C(n+1, j) L(i-j), from the counts L(0..n).
/// Verifies h*_0 = 1, nonnegativity, h*_1 = |P∩Z^n| - (n+1), h*_n = |int(P)∩Z^n| and
/// that the coefficient sum matches an independent pulling-triangulation volume;
/// a failure throws InvariantViolation.
HStarVector hstar(const Polytope& p, const CountOptions& options = {});

/// h*_i from an explicit profile L(0..n); no geometric checks.
HStarVector hstar_from_profile(std::size_t dim, const EhrhartProfile& profile);

/// n + 1 - min{k >= 1 : int(kP) ∩ Z^n nonempty}.
std::size_t degree_from_interior_dilates(const Polytope& p, const CountOptions& options = {});

/// deg of the h*-polynomial, cross-checked against the interior-dilate formula
/// (CrossCheckMismatch on disagreement).
std::size_t degree(const Polytope& p, const CountOptions& options = {});

/// Sum of h*-coefficients.
Integer normalized_volume(const Polytope& p, const CountOptions& options = {});

/// L(k) = sum_i h*_i C(n+k-i, n).
Integer ehrhart_eval(const HStarVector& h, unsigned k);

}  // namespace castelnuovo
