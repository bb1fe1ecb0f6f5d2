#pragma once

#include <optional>
#include <string_view>

#include "sniep/classify.hpp"
#include "sniep/matrix.hpp"
#include "sniep/spectrum.hpp"

namespace sniep {

enum class Shift { Plus, Minus };

std::string_view to_string(Shift s);

/// Guo perturbation: lambda1 -> lambda1 + s and lambda_i -> lambda_i +/- s,
/// with i in {2, 3, 4, 5} counted in descending order and s > 0.
class Perturbation {
 public:
  /// Throws std::invalid_argument for an index outside 2..5 or a magnitude
  /// that is not a positive finite number.
  Perturbation(int index, Shift shift, double magnitude);

  int index() const noexcept { return index_; }
  Shift shift() const noexcept { return shift_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  int index_;
  Shift shift_;
  double magnitude_;
};

/// Applies the perturbation and re-sorts.
SortedSpectrum apply_perturbation(const SortedSpectrum& s, const Perturbation& p);

/// Which closure result decided a perturbed spectrum.
enum class ClosureRule {
  TraceZero,    // minus-shifts of trace-zero realizable lists
  KnownRegion,  // either shift of realizable lists with lambda3 <= e1
  PatternA,     // minus-shifts of A-pattern lists, any magnitude
  PatternB,     // minus-shifts of B-pattern lists with r < 0, any magnitude
  Direct,       // no closure result applies: classify the perturbed list
};

/// Wire tag: thm6, thm7, thm10, thm11 or direct.
std::string_view to_string(ClosureRule rule);

struct PerturbedDecision {
  RealizabilityDecision decision;
  ClosureRule rule;
  SortedSpectrum perturbed;
  /// Present when the perturbed list itself meets the A- or B-pattern
  /// hypotheses.
  std::optional<SymMatrix5> matrix;
};

/// Decides realizability of the perturbed list, preferring closure results
/// that hold for every magnitude over direct re-classification. A closure
/// verdict with no pattern matrix for the concrete list is reported with
/// certificate GuoClosure (or TraceZeroCharacterization for trace-zero
/// lists) rather than demoted.
PerturbedDecision decide_perturbed(const SortedSpectrum& s, const Perturbation& p);

enum class ClosureFamily {
  PatternA,  // perturbed list passes pattern_a_conditions
  PatternB,  // perturbed list passes pattern_b_conditions and has r < 0
};

/// True when every minus-shift of magnitude `magnitude` (all four indices)
/// keeps `s` inside `family`.
bool minus_shifts_stay_in_family(const SortedSpectrum& s, ClosureFamily family,
                                 double magnitude);

/// A positive magnitude s* for which every minus-shift stays in `family`,
/// found by halving from the smallest positive spacing of the list (its
/// gaps, lambda1 + lambda5 and lambda3 - e1). nullopt if 80 halvings do not
/// get there.
std::optional<double> small_shift_threshold(const SortedSpectrum& s, ClosureFamily family);

}  // namespace sniep
