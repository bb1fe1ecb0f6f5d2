#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "sniep/classify.hpp"
#include "sniep/guo.hpp"
#include "sniep/pattern_a.hpp"
#include "sniep/pattern_b.hpp"
#include "sniep/verify.hpp"
#include "support/oracles.hpp"

using namespace sniep;
using namespace sniep::testing;

namespace {

const SortedSpectrum kExample1 = SortedSpectrum::from_descending({1000, 381, 360, -641, -750});
const SortedSpectrum kExample2 = SortedSpectrum::from_descending({1000, 370, 367, -637, -750});

double max_abs(const SortedSpectrum& s) { return std::max(std::abs(s[0]), std::abs(s[4])); }

}  // namespace

TEST_CASE("apply_perturbation") {
  CHECK(apply_perturbation(kExample1, Perturbation(2, Shift::Minus, 10)).values() ==
        Values{1010, 371, 360, -641, -750});
  CHECK(apply_perturbation(kExample1, Perturbation(5, Shift::Plus, 1500)).values() ==
        Values{2500, 750, 381, 360, -641});
  const SortedSpectrum p = apply_perturbation(kExample1, Perturbation(4, Shift::Minus, 37.5));
  CHECK(trace(p.values()) == trace(kExample1.values()));
}

TEST_CASE("perturbation validation") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Perturbation(1, Shift::Plus, 1), std::invalid_argument);
  CHECK_THROWS_AS(Perturbation(6, Shift::Plus, 1), std::invalid_argument);
  CHECK_THROWS_AS(Perturbation(2, Shift::Plus, 0), std::invalid_argument);
  CHECK_THROWS_AS(Perturbation(2, Shift::Plus, -1), std::invalid_argument);
  CHECK_THROWS_AS(Perturbation(2, Shift::Plus, nan), std::invalid_argument);
  CHECK_THROWS_AS(Perturbation(2, Shift::Plus, inf), std::invalid_argument);
  CHECK_NOTHROW(Perturbation(5, Shift::Minus, 1e-300));
}

TEST_CASE("rule tags") {
  CHECK(to_string(ClosureRule::TraceZero) == "thm6");
  CHECK(to_string(ClosureRule::KnownRegion) == "thm7");
  CHECK(to_string(ClosureRule::PatternA) == "thm10");
  CHECK(to_string(ClosureRule::PatternB) == "thm11");
  CHECK(to_string(ClosureRule::Direct) == "direct");
  CHECK(to_string(Shift::Plus) == "plus");
  CHECK(to_string(Shift::Minus) == "minus");
}

TEST_CASE("A-pattern lists stay realizable under minus shifts") {
  const PerturbedDecision d = decide_perturbed(kExample1, Perturbation(2, Shift::Minus, 10));
  CHECK(d.rule == ClosureRule::PatternA);
  CHECK(d.decision.verdict() == Verdict::Realizable);
  CHECK(d.perturbed.values() == Values{1010, 371, 360, -641, -750});
  // r of the perturbed list is 4159530 >= 0, so it is an A-pattern list too.
  CHECK(pattern_a_scalars(d.perturbed).r == 4159530.0);
  REQUIRE(d.matrix.has_value());
  CHECK(d.matrix->provenance() == Provenance::PatternA);
  CHECK(verify_spectrum(*d.matrix, d.perturbed, 1e-9).pass);

  // The rule holds for any magnitude, with or without a matrix for the
  // concrete list.
  const PerturbedDecision far = decide_perturbed(kExample1, Perturbation(3, Shift::Minus, 1e5));
  CHECK(far.rule == ClosureRule::PatternA);
  CHECK(far.decision.verdict() == Verdict::Realizable);
  CHECK(far.decision.certificate().has_value());
}

TEST_CASE("B-pattern lists with r < 0 stay realizable under minus shifts") {
  for (double s : {1e-3, 1.0, 100.0, 1e4, 1e7}) {
    const PerturbedDecision d = decide_perturbed(kExample2, Perturbation(4, Shift::Minus, s));
    CHECK(d.rule == ClosureRule::PatternB);
    CHECK(d.decision.verdict() == Verdict::Realizable);
    if (d.matrix) CHECK(verify_spectrum(*d.matrix, d.perturbed, 1e-8).pass);
  }
}

TEST_CASE("trace-zero lists stay realizable under minus shifts") {
  const SortedSpectrum s = SortedSpectrum::from_descending({4, 0, 0, -2, -2});
  const PerturbedDecision d = decide_perturbed(s, Perturbation(3, Shift::Minus, 7));
  CHECK(d.rule == ClosureRule::TraceZero);
  CHECK(d.decision.verdict() == Verdict::Realizable);
  CHECK(d.perturbed.values() == Values{11, 0, -2, -2, -7});
  // 1331 - 8 - 8 - 343 >= 0 and 0 - 7 <= 0.
  CHECK(classify_trace_zero(d.perturbed).verdict() == Verdict::Realizable);
}

TEST_CASE("known-region lists stay realizable under either shift") {
  const SortedSpectrum s = SortedSpectrum::from_descending({3, 1, 0.5, -1, -1});
  for (Shift sign : {Shift::Plus, Shift::Minus}) {
    for (int i = 2; i <= 5; ++i) {
      const PerturbedDecision d = decide_perturbed(s, Perturbation(i, sign, 2.5));
      CHECK(d.rule == ClosureRule::KnownRegion);
      CHECK(d.decision.verdict() == Verdict::Realizable);
    }
  }
}

TEST_CASE("other cases are re-classified directly") {
  const PerturbedDecision plus = decide_perturbed(kExample1, Perturbation(2, Shift::Plus, 10));
  CHECK(plus.rule == ClosureRule::Direct);
  CHECK(plus.decision.tag() == classify(plus.perturbed).tag());

  const SortedSpectrum unknown = SortedSpectrum::from_descending({100, 40, 30, -75, -85});
  const PerturbedDecision d = decide_perturbed(unknown, Perturbation(5, Shift::Minus, 1));
  CHECK(d.rule == ClosureRule::Direct);
  CHECK(d.decision.verdict() == classify(d.perturbed).verdict());
}

TEST_CASE("trace-zero closure keeps all three conditions") {
  Rng rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const SortedSpectrum s = trace_zero_sample(rng);
    const int i = 2 + static_cast<int>(rng() % 4);
    const double shift = std::pow(10.0, uniform(rng, -3.0, 2.0));
    const PerturbedDecision d = decide_perturbed(s, Perturbation(i, Shift::Minus, shift));
    CHECK(d.rule == ClosureRule::TraceZero);
    CHECK(d.decision.verdict() == Verdict::Realizable);

    const SortedSpectrum& p = d.perturbed;
    const double scale = max_abs(p);
    CHECK(std::abs(trace(p.values())) <= 1e-12 * scale * 5);
    double cubes = 0.0;
    for (double x : p.values()) cubes += x * x * x;
    CHECK(cubes >= -1e-12 * scale * scale * scale);
    CHECK(p[1] + p[4] <= 1e-12 * scale);

    // The cube gain of the two moved entries is nonnegative.
    const double l1 = s[0];
    const double li = s[static_cast<std::size_t>(i - 1)];
    const double gain = std::pow(l1 + shift, 3) + std::pow(li - shift, 3) - std::pow(l1, 3) -
                        std::pow(li, 3);
    CHECK(gain >= -1e-12 * std::pow(l1 + shift, 3));
  }
}

TEST_CASE("small minus shifts keep A-pattern lists in the family") {
  Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const SortedSpectrum s = pattern_a_sample(rng);
    const auto threshold = small_shift_threshold(s, ClosureFamily::PatternA);
    REQUIRE(threshold.has_value());
    CHECK(*threshold > 0.0);
    for (int i = 2; i <= 5; ++i) {
      const SortedSpectrum p = apply_perturbation(s, Perturbation(i, Shift::Minus, *threshold / 2));
      CHECK(pattern_a_conditions(p).pass());
    }
  }
}

TEST_CASE("small minus shifts keep B-pattern lists with r < 0 in the family") {
  Rng rng(63);
  for (int trial = 0; trial < 300; ++trial) {
    const SortedSpectrum s = pattern_b_negative_r_sample(rng);
    const auto threshold = small_shift_threshold(s, ClosureFamily::PatternB);
    REQUIRE(threshold.has_value());
    CHECK(*threshold > 0.0);
    for (int i = 2; i <= 5; ++i) {
      const SortedSpectrum p = apply_perturbation(s, Perturbation(i, Shift::Minus, *threshold / 2));
      CHECK(pattern_b_conditions(p).pass());
      CHECK(pattern_a_scalars(p).r < 0.0);
    }
  }
}

TEST_CASE("minus shifts preserve e1 and closure decisions preserve the Perron condition") {
  Rng rng(64);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto box = box_point(rng);
    const SortedSpectrum s = box ? *box : random_sorted(rng);
    const int i = 2 + static_cast<int>(rng() % 4);
    const Shift sign = rng() % 2 ? Shift::Plus : Shift::Minus;
    const double shift = std::pow(10.0, uniform(rng, -4.0, 1.0));
    const PerturbedDecision d = decide_perturbed(s, Perturbation(i, sign, shift));

    if (sign == Shift::Minus) {
      CHECK(std::abs(trace(d.perturbed.values()) - trace(s.values())) <=
            1e-12 * std::max(max_abs(s), max_abs(d.perturbed)) * 5);
    }
    if (d.rule != ClosureRule::Direct) CHECK(check_pf(d.perturbed));
    if (d.matrix) {
      CHECK(d.matrix->min_entry() >= 0.0);
      CHECK(verify_spectrum(*d.matrix, d.perturbed, 1e-8).pass);
    }
  }
}
