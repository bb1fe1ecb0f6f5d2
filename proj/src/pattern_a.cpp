#include "sniep/pattern_a.hpp"

#include <cassert>
#include <cmath>

#include "sniep/error.hpp"

namespace sniep {

PatternAScalars pattern_a_scalars(const SortedSpectrum& s) {
  const auto [lam1, lam2, lam3, lam4, lam5] = s.values();
  const ElemSyms e = elem_syms(s);
  PatternAScalars out;
  out.u = -e.e2 - lam2 * lam2 - lam5 * lam5;
  out.v = -(lam3 + lam5) * (lam4 + lam5) * (lam2 + lam4) * (lam2 + lam3) * (lam1 + lam2) *
          (lam1 + lam5);
  out.w = lam2 * lam5 * e.e1 - lam1 * lam3 * lam4;
  out.r = e.e3 + e.e1 * (lam2 * lam2 + lam5 * lam5);
  return out;
}

std::vector<std::string> PatternAConditions::failures() const {
  std::vector<std::string> out;
  if (!trace_nonnegative) out.emplace_back("trace e1 >= 0");
  if (!above_antipode) out.emplace_back("lambda5 > -lambda1");
  if (!third_exceeds_trace) out.emplace_back("lambda3 > e1");
  if (!r_nonnegative) out.emplace_back("r >= 0");
  return out;
}

PatternAConditions pattern_a_conditions(const SortedSpectrum& s) {
  const double e1 = elem_syms(s).e1;
  PatternAConditions c;
  c.trace_nonnegative = e1 >= 0.0;
  c.above_antipode = s[4] > -s[0];
  c.third_exceeds_trace = s[2] > e1;
  c.r_nonnegative = pattern_a_scalars(s).r >= 0.0;
  return c;
}

SymMatrix5 formal_pattern_a(const SortedSpectrum& s) {
  const PatternAScalars k = pattern_a_scalars(s);
  if (k.u == 0.0) {
    throw DegenerateU("u(sigma) = 0: the A-pattern is undefined");
  }
  if (k.u < 0.0 || k.v < 0.0) {
    throw NegativeRadicand("A-pattern needs u > 0 and v >= 0 for real entries");
  }
  const double corner = std::sqrt(k.u / 2.0);
  const double coupling = std::sqrt(k.v) / k.u;

  SymMatrix5 m(Provenance::External);
  m.set(0, 0, elem_syms(s).e1);
  m.set(0, 2, corner);
  m.set(0, 4, corner);
  m.set(1, 3, k.w / k.u);
  m.set(1, 4, coupling);
  m.set(2, 3, coupling);
  m.set(2, 4, k.r / k.u);
  return m;
}

SymMatrix5 build_pattern_a(const SortedSpectrum& s) {
  if (pattern_a_scalars(s).u == 0.0) {
    throw DegenerateU("u(sigma) = 0: the A-pattern is undefined");
  }
  const PatternAConditions conditions = pattern_a_conditions(s);
  if (!conditions.pass()) {
    throw PreconditionViolated(conditions.failures());
  }
  SymMatrix5 m = formal_pattern_a(s);
  m.set_provenance(Provenance::PatternA);
  assert(m.min_entry() >= 0.0 && "A-pattern conditions hold but an entry is negative");
  return m;
}

}  // namespace sniep
