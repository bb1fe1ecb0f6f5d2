#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sniep/matrix.hpp"
#include "sniep/spectrum.hpp"

namespace sniep {

/// Real cubic c3 z^3 + c2 z^2 + c1 z + c0.
struct Cubic {
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double z) const { return ((c3 * z + c2) * z + c1) * z + c0; }
  double derivative(double z) const { return (3.0 * c3 * z + 2.0 * c2) * z + c1; }
  double max_abs_coefficient() const;

  /// |Q(z)| <= 1e-9 * max|c_k| * max(1, |z|)^3, the residual bound that
  /// every reported root satisfies.
  bool is_root(double z) const;
};

/// The cubic whose roots in [0, e1/2] parametrize the B-pattern:
///   2 z^3 - 2 (l3 + l5) z^2 - (e2 + (l3 - l5)^2) z + e3 + e1 (l3^2 + l5^2).
Cubic pattern_b_cubic(const SortedSpectrum& s);

/// All real roots, ascending, with roots closer than 1e-7 * (1 + |root|)
/// merged. Closed-form (trigonometric or Cardano) location followed by
/// Newton polishing on the original coefficients.
///
/// Throws DegenerateLeadingCoefficient when c3 == 0.
std::vector<double> cubic_real_roots(const Cubic& q);

/// The largest real root of pattern_b_cubic(s) in [0, e1/2], if any. An
/// endpoint of the range is eligible when a computed root sits within
/// 1e-9 * (1 + |endpoint|) of it and the cubic passes is_root() there.
std::optional<double> find_pattern_b_parameter(const SortedSpectrum& s);

/// Scalars of the B-pattern for a given parameter g:
///   k = g - l3 - l5
///   l = (g - l3)(l5 - g)
///   m = -g^2 + e1 g - (e2 + l3^2 + l5^2) / 2
struct PatternBScalars {
  double g = 0.0;
  double k = 0.0;
  double l = 0.0;
  double m = 0.0;
};

PatternBScalars pattern_b_scalars(const SortedSpectrum& s, double g);

struct PatternBConditions {
  bool antipode_bounded = false;     // lambda5 >= -lambda1
  bool trace_nonnegative = false;    // e1 >= 0
  bool third_exceeds_trace = false;  // lambda3 > e1
  std::optional<double> parameter;   // root of the cubic in [0, e1/2]

  bool pass() const {
    return antipode_bounded && trace_nonnegative && third_exceeds_trace && parameter.has_value();
  }
  std::vector<std::string> failures() const;
};

PatternBConditions pattern_b_conditions(const SortedSpectrum& s);

/// The B-pattern for arbitrary g, as long as its square-root entries are
/// real. Negative m above -1e-9 * max(1, e1^2) is treated as root-polishing
/// noise and clamped to 0. Tagged Provenance::External.
///
/// Throws NegativeRadicand if l < 0 or m is below the clamp window.
SymMatrix5 formal_pattern_b(const SortedSpectrum& s, double g);

/// Entrywise-nonnegative symmetric matrix with spectrum `s`.
///
/// Diagonal (g, 0, e1 - 2g, g, 0); (1,2) = (4,5) = sqrt(l);
/// (1,3) = (3,4) = sqrt(m); (2,5) = k; all other entries 0.
///
/// Throws NegativeRadicand as formal_pattern_b does, then
/// PreconditionViolated if `s` fails the B-pattern hypotheses, g lies
/// outside [0, e1/2], or g is not a root of the cubic.
SymMatrix5 build_pattern_b(const SortedSpectrum& s, double g);

}  // namespace sniep
