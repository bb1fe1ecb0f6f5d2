#pragma once

#include <optional>
#include <string_view>

#include "sniep/matrix.hpp"
#include "sniep/spectrum.hpp"

namespace sniep {

enum class Verdict { Realizable, NotRealizable, Unknown };

/// Why a spectrum is realizable. Only the two pattern certificates carry an
/// explicit matrix; the others rest on known characterizations.
enum class Certificate {
  PatternA,
  PatternB,
  DirectSumKnownRegion,         // drop lambda3, realize the remaining 4-list
  Suleimanova,                  // lambda1 >= 0 >= lambda2 >= ... and trace >= 0
  TwoPositiveCharacterization,  // lambda2 > 0 >= lambda3 with PF, trace, MN
  TraceZeroCharacterization,
  GuoClosure,                   // closure under Guo perturbation, no matrix
};

/// Why a spectrum is not realizable.
enum class Reason {
  PFViolated,
  TraceViolated,
  MNViolated,
  AntipodalBoundary,  // lambda5 == -lambda1 with lambda3 > e1
  TraceZeroConditionViolated,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Certificate c);
std::string_view to_string(Reason r);

struct DecisionDetails {
  double e1 = 0.0;
  double r = 0.0;
  double u = 0.0;
  double mn_sum = 0.0;  // lambda1 + lambda3 + lambda4
};

/// Realizable carries a certificate, NotRealizable a reason, Unknown
/// neither; the factories are the only way to build one.
class RealizabilityDecision {
 public:
  static RealizabilityDecision realizable(Certificate c, const DecisionDetails& details,
                                          std::optional<double> parameter = std::nullopt);
  static RealizabilityDecision not_realizable(Reason r, const DecisionDetails& details);
  static RealizabilityDecision unknown(const DecisionDetails& details);

  Verdict verdict() const noexcept { return verdict_; }
  const std::optional<Certificate>& certificate() const noexcept { return certificate_; }
  const std::optional<Reason>& reason() const noexcept { return reason_; }
  /// The cubic root g behind a PatternB certificate.
  const std::optional<double>& parameter() const noexcept { return parameter_; }
  const DecisionDetails& details() const noexcept { return details_; }

  /// Set when |lambda5 + lambda1| <= 1e-12 * lambda1 in the lambda3 > e1
  /// region, where realizability flips on the exact equality.
  bool near_antipodal_boundary() const noexcept { return near_boundary_; }
  void flag_near_antipodal_boundary() noexcept { near_boundary_ = true; }

  /// Name of the certificate or reason; empty for Unknown.
  std::string_view tag() const;

 private:
  RealizabilityDecision() = default;

  Verdict verdict_ = Verdict::Unknown;
  std::optional<Certificate> certificate_;
  std::optional<Reason> reason_;
  std::optional<double> parameter_;
  DecisionDetails details_;
  bool near_boundary_ = false;
};

DecisionDetails decision_details(const SortedSpectrum& s);

/// Decides realizability by the first matching rule:
///   1. PF or trace condition fails                  -> NotRealizable
///   2. MN condition fails                           -> NotRealizable
///   3. lambda2 <= 0                                 -> Suleimanova
///   4. lambda2 > 0 >= lambda3                       -> TwoPositiveCharacterization
///   5. 0 < lambda3 <= e1                            -> DirectSumKnownRegion
///   6. lambda3 > e1 and lambda5 == -lambda1         -> NotRealizable (antipodal)
///   7. lambda3 > e1: A-pattern, else B-pattern, else Unknown
RealizabilityDecision classify(const SortedSpectrum& s);

/// |sum| <= 1e-12 * max|lambda_i|.
bool is_trace_zero(const SortedSpectrum& s);

/// Realizability by a trace-zero symmetric nonnegative matrix: sum = 0,
/// sum of cubes >= 0 and lambda2 + lambda5 <= 0. Throws NotTraceZero when
/// the sum is not zero. Lists with lambda5 < -lambda1 are NotRealizable
/// (PFViolated).
RealizabilityDecision classify_trace_zero(const SortedSpectrum& s);

/// The A or B matrix behind a pattern certificate; nullopt for every other
/// decision.
std::optional<SymMatrix5> construct_certificate(const SortedSpectrum& s,
                                                const RealizabilityDecision& decision);

}  // namespace sniep
