#include "sniep/guo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "sniep/pattern_a.hpp"
#include "sniep/pattern_b.hpp"

namespace sniep {

namespace {

constexpr int kMaxHalvings = 80;

std::optional<SymMatrix5> pattern_matrix(const SortedSpectrum& s, std::optional<double>& g) {
  if (pattern_a_conditions(s).pass()) return build_pattern_a(s);
  if (const PatternBConditions b = pattern_b_conditions(s); b.pass()) {
    g = b.parameter;
    return build_pattern_b(s, *b.parameter);
  }
  return std::nullopt;
}

bool in_family(const SortedSpectrum& s, ClosureFamily family) {
  switch (family) {
    case ClosureFamily::PatternA: return pattern_a_conditions(s).pass();
    case ClosureFamily::PatternB:
      return pattern_a_scalars(s).r < 0.0 && pattern_b_conditions(s).pass();
  }
  return false;
}

ClosureRule select_rule(const SortedSpectrum& s, Shift shift) {
  const bool minus = shift == Shift::Minus;
  if (minus && is_trace_zero(s) && classify_trace_zero(s).verdict() == Verdict::Realizable) {
    return ClosureRule::TraceZero;
  }
  if (s[2] <= elem_syms(s).e1 && classify(s).verdict() == Verdict::Realizable) {
    return ClosureRule::KnownRegion;
  }
  if (minus && pattern_a_conditions(s).pass()) return ClosureRule::PatternA;
  if (minus && pattern_a_scalars(s).r < 0.0 && pattern_b_conditions(s).pass()) {
    return ClosureRule::PatternB;
  }
  return ClosureRule::Direct;
}

}  // namespace

std::string_view to_string(Shift s) { return s == Shift::Plus ? "plus" : "minus"; }

std::string_view to_string(ClosureRule rule) {
  switch (rule) {
    case ClosureRule::TraceZero: return "thm6";
    case ClosureRule::KnownRegion: return "thm7";
    case ClosureRule::PatternA: return "thm10";
    case ClosureRule::PatternB: return "thm11";
    case ClosureRule::Direct: return "direct";
  }
  return "direct";
}

Perturbation::Perturbation(int index, Shift shift, double magnitude)
    : index_(index), shift_(shift), magnitude_(magnitude) {
  if (index < 2 || index > 5) {
    throw std::invalid_argument("perturbation index must be in {2, 3, 4, 5}");
  }
  if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
    throw std::invalid_argument("perturbation magnitude must be positive and finite");
  }
}

SortedSpectrum apply_perturbation(const SortedSpectrum& s, const Perturbation& p) {
  Values values = s.values();
  const double delta = p.shift() == Shift::Plus ? p.magnitude() : -p.magnitude();
  values[0] += p.magnitude();
  values[static_cast<std::size_t>(p.index() - 1)] += delta;
  return sort_descending(Spectrum(values));
}

PerturbedDecision decide_perturbed(const SortedSpectrum& s, const Perturbation& p) {
  const SortedSpectrum perturbed = apply_perturbation(s, p);
  const ClosureRule rule = select_rule(s, p.shift());
  const RealizabilityDecision direct = classify(perturbed);

  if (rule == ClosureRule::Direct) {
    return PerturbedDecision{direct, rule, perturbed, construct_certificate(perturbed, direct)};
  }

  const DecisionDetails details = decision_details(perturbed);
  std::optional<double> g;
  std::optional<SymMatrix5> matrix = pattern_matrix(perturbed, g);
  if (matrix) {
    const Certificate cert = matrix->provenance() == Provenance::PatternA ? Certificate::PatternA
                                                                          : Certificate::PatternB;
    return PerturbedDecision{RealizabilityDecision::realizable(cert, details, g), rule, perturbed,
                             std::move(matrix)};
  }
  if (rule == ClosureRule::TraceZero) {
    return PerturbedDecision{
        RealizabilityDecision::realizable(Certificate::TraceZeroCharacterization, details), rule,
        perturbed, std::nullopt};
  }
  if (direct.verdict() == Verdict::Realizable) {
    return PerturbedDecision{direct, rule, perturbed, std::nullopt};
  }
  return PerturbedDecision{RealizabilityDecision::realizable(Certificate::GuoClosure, details),
                           rule, perturbed, std::nullopt};
}

bool minus_shifts_stay_in_family(const SortedSpectrum& s, ClosureFamily family,
                                 double magnitude) {
  for (int i = 2; i <= 5; ++i) {
    if (!in_family(apply_perturbation(s, Perturbation(i, Shift::Minus, magnitude)), family)) {
      return false;
    }
  }
  return true;
}

std::optional<double> small_shift_threshold(const SortedSpectrum& s, ClosureFamily family) {
  double start = std::numeric_limits<double>::infinity();
  auto consider = [&start](double gap) {
    if (gap > 0.0) start = std::min(start, gap);
  };
  for (std::size_t i = 0; i + 1 < kOrder; ++i) consider(s[i] - s[i + 1]);
  consider(s[0] + s[4]);
  consider(s[2] - elem_syms(s).e1);
  if (!std::isfinite(start)) start = std::max(1.0, std::abs(s[0]));

  for (int n = 0; n < kMaxHalvings; ++n, start *= 0.5) {
    if (minus_shifts_stay_in_family(s, family, start)) return start;
  }
  return std::nullopt;
}

}  // namespace sniep
