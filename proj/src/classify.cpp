#include "sniep/classify.hpp"

#include <algorithm>
#include <cmath>

#include "sniep/error.hpp"
#include "sniep/pattern_a.hpp"
#include "sniep/pattern_b.hpp"

namespace sniep {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Realizable: return "Realizable";
    case Verdict::NotRealizable: return "NotRealizable";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::PatternA: return "PatternA";
    case Certificate::PatternB: return "PatternB";
    case Certificate::DirectSumKnownRegion: return "DirectSumKnownRegion";
    case Certificate::Suleimanova: return "Suleimanova";
    case Certificate::TwoPositiveCharacterization: return "TwoPositiveCharacterization";
    case Certificate::TraceZeroCharacterization: return "TraceZeroCharacterization";
    case Certificate::GuoClosure: return "GuoClosure";
  }
  return "";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::PFViolated: return "PFViolated";
    case Reason::TraceViolated: return "TraceViolated";
    case Reason::MNViolated: return "MNViolated";
    case Reason::AntipodalBoundary: return "AntipodalBoundary";
    case Reason::TraceZeroConditionViolated: return "TraceZeroConditionViolated";
  }
  return "";
}

RealizabilityDecision RealizabilityDecision::realizable(Certificate c,
                                                        const DecisionDetails& details,
                                                        std::optional<double> parameter) {
  RealizabilityDecision d;
  d.verdict_ = Verdict::Realizable;
  d.certificate_ = c;
  d.details_ = details;
  if (c == Certificate::PatternB) d.parameter_ = parameter;
  return d;
}

RealizabilityDecision RealizabilityDecision::not_realizable(Reason r,
                                                            const DecisionDetails& details) {
  RealizabilityDecision d;
  d.verdict_ = Verdict::NotRealizable;
  d.reason_ = r;
  d.details_ = details;
  return d;
}

RealizabilityDecision RealizabilityDecision::unknown(const DecisionDetails& details) {
  RealizabilityDecision d;
  d.details_ = details;
  return d;
}

std::string_view RealizabilityDecision::tag() const {
  if (certificate_) return to_string(*certificate_);
  if (reason_) return to_string(*reason_);
  return "";
}

DecisionDetails decision_details(const SortedSpectrum& s) {
  const PatternAScalars scalars = pattern_a_scalars(s);
  return DecisionDetails{elem_syms(s).e1, scalars.r, scalars.u, s[0] + s[2] + s[3]};
}

RealizabilityDecision classify(const SortedSpectrum& s) {
  using D = RealizabilityDecision;
  const DecisionDetails details = decision_details(s);
  const double e1 = details.e1;

  if (!check_pf(s)) return D::not_realizable(Reason::PFViolated, details);
  if (!check_trace(s)) return D::not_realizable(Reason::TraceViolated, details);
  if (!check_mn(s)) return D::not_realizable(Reason::MNViolated, details);
  if (s[1] <= 0.0) return D::realizable(Certificate::Suleimanova, details);
  if (s[2] <= 0.0) return D::realizable(Certificate::TwoPositiveCharacterization, details);
  if (s[2] <= e1) return D::realizable(Certificate::DirectSumKnownRegion, details);

  // From here on lambda3 > e1: the region the patterns address.
  const bool near_boundary = std::abs(s[4] + s[0]) <= 1e-12 * s[0];
  auto flagged = [near_boundary](D d) {
    if (near_boundary) d.flag_near_antipodal_boundary();
    return d;
  };

  if (s[4] == -s[0]) return flagged(D::not_realizable(Reason::AntipodalBoundary, details));
  if (pattern_a_conditions(s).pass()) return flagged(D::realizable(Certificate::PatternA, details));
  if (const PatternBConditions b = pattern_b_conditions(s); b.pass()) {
    return flagged(D::realizable(Certificate::PatternB, details, b.parameter));
  }
  return flagged(D::unknown(details));
}

bool is_trace_zero(const SortedSpectrum& s) {
  const double scale = std::max(std::abs(s.largest()), std::abs(s.smallest()));
  return std::abs(trace(s.values())) <= 1e-12 * scale;
}

RealizabilityDecision classify_trace_zero(const SortedSpectrum& s) {
  if (!is_trace_zero(s)) {
    throw NotTraceZero("spectrum does not sum to zero");
  }
  const DecisionDetails details = decision_details(s);
  if (!check_pf(s)) return RealizabilityDecision::not_realizable(Reason::PFViolated, details);

  double cubes = 0.0;
  for (double v : s.values()) cubes += v * v * v;
  if (cubes >= 0.0 && s[1] + s[4] <= 0.0) {
    return RealizabilityDecision::realizable(Certificate::TraceZeroCharacterization, details);
  }
  return RealizabilityDecision::not_realizable(Reason::TraceZeroConditionViolated, details);
}

std::optional<SymMatrix5> construct_certificate(const SortedSpectrum& s,
                                                const RealizabilityDecision& decision) {
  if (!decision.certificate()) return std::nullopt;
  switch (*decision.certificate()) {
    case Certificate::PatternA: return build_pattern_a(s);
    case Certificate::PatternB: return build_pattern_b(s, decision.parameter().value());
    default: return std::nullopt;
  }
}

}  // namespace sniep
