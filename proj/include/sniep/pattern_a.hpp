#pragma once

#include <string>
#include <vector>

#include "sniep/matrix.hpp"
#include "sniep/spectrum.hpp"

namespace sniep {

/// Scalar invariants of a sorted spectrum that parametrize the A-pattern.
///
///   u = -e2 - l2^2 - l5^2
///   v = -(l3+l5)(l4+l5)(l2+l4)(l2+l3)(l1+l2)(l1+l5)
///   w = l2 l5 e1 - l1 l3 l4
///   r = e3 + e1 (l2^2 + l5^2)
///
/// u, w, r are homogeneous of degree 2, 3, 3 and v of degree 6.
struct PatternAScalars {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double r = 0.0;
};

PatternAScalars pattern_a_scalars(const SortedSpectrum& s);

/// Hypotheses under which the A-pattern is entrywise nonnegative. All
/// comparisons are exact; the strict ones stay strict because the boundary
/// lambda5 = -lambda1 is genuinely unrealizable.
struct PatternAConditions {
  bool trace_nonnegative = false;    // e1 >= 0
  bool above_antipode = false;       // lambda5 > -lambda1
  bool third_exceeds_trace = false;  // lambda3 > e1
  bool r_nonnegative = false;        // r >= 0

  bool pass() const {
    return trace_nonnegative && above_antipode && third_exceeds_trace && r_nonnegative;
  }
  std::vector<std::string> failures() const;
};

PatternAConditions pattern_a_conditions(const SortedSpectrum& s);

/// The A-pattern for any sorted spectrum with u > 0 and v >= 0, whether or
/// not its entries come out nonnegative. Its characteristic polynomial is
/// prod (z - lambda_i) whenever u != 0.
///
/// Throws DegenerateU when u == 0 and NegativeRadicand when u < 0 or v < 0.
/// The returned matrix is tagged Provenance::External.
SymMatrix5 formal_pattern_a(const SortedSpectrum& s);

/// Entrywise-nonnegative symmetric matrix with spectrum `s`.
///
/// Nonzero entries (1-based): (1,1) = e1; (1,3) = (1,5) = sqrt(u/2);
/// (2,4) = w/u; (2,5) = (3,4) = sqrt(v)/u; (3,5) = r/u.
///
/// Throws DegenerateU if u == 0, otherwise PreconditionViolated listing the
/// failed conditions if pattern_a_conditions(s) does not pass.
SymMatrix5 build_pattern_a(const SortedSpectrum& s);

}  // namespace sniep
