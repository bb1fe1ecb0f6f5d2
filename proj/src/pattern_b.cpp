#include "sniep/pattern_b.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "sniep/error.hpp"

namespace sniep {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double kMergeTol = 1e-7;
constexpr double kMClampTol = 1e-9;
// Relative size of the discriminant below which the three-real-root branch
// is taken, so near-double roots are not lost to rounding.
constexpr double kDiscriminantTol = 1e-12;

double polish(const Cubic& q, double z) {
  double best = z;
  double best_res = std::abs(q(z));
  for (int it = 0; it < 8 && best_res > 0.0; ++it) {
    const double slope = q.derivative(best);
    if (slope == 0.0) break;
    const double next = best - q(best) / slope;
    const double res = std::abs(q(next));
    if (!(res < best_res)) break;
    best = next;
    best_res = res;
  }
  return best;
}

// Roots of the depressed cubic t^3 + p t + q = 0.
std::vector<double> depressed_roots(double p, double q) {
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  const double magnitude = half_q * half_q + std::abs(third_p * third_p * third_p);

  if (p == 0.0 && q == 0.0) return {0.0};

  if (p < 0.0 && disc <= kDiscriminantTol * magnitude) {
    const double radius = 2.0 * std::sqrt(-third_p);
    const double cos_arg = std::clamp(3.0 * q / (p * radius), -1.0, 1.0);
    const double theta = std::acos(cos_arg) / 3.0;
    const double step = 2.0 * std::numbers::pi / 3.0;
    return {radius * std::cos(theta), radius * std::cos(theta - step),
            radius * std::cos(theta - 2.0 * step)};
  }

  // One real root. Pick the cube-root branch that avoids cancellation.
  const double big = -std::copysign(std::cbrt(std::abs(half_q) + std::sqrt(std::max(disc, 0.0))), q);
  const double small = big != 0.0 ? -third_p / big : 0.0;
  return {big + small};
}

}  // namespace

double Cubic::max_abs_coefficient() const {
  return std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
}

bool Cubic::is_root(double z) const {
  const double growth = std::max(1.0, std::abs(z));
  return std::abs((*this)(z)) <= kResidualTol * max_abs_coefficient() * growth * growth * growth;
}

Cubic pattern_b_cubic(const SortedSpectrum& s) {
  const double lam3 = s[2];
  const double lam5 = s[4];
  const ElemSyms e = elem_syms(s);
  const double gap = lam3 - lam5;
  return Cubic{2.0, -2.0 * (lam3 + lam5), -(e.e2 + gap * gap),
               e.e3 + e.e1 * (lam3 * lam3 + lam5 * lam5)};
}

std::vector<double> cubic_real_roots(const Cubic& q) {
  if (q.c3 == 0.0) {
    throw DegenerateLeadingCoefficient("cubic has zero leading coefficient");
  }
  const double a = q.c2 / q.c3;
  const double b = q.c1 / q.c3;
  const double c = q.c0 / q.c3;
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double r = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

  std::vector<double> roots;
  for (double t : depressed_roots(p, r)) roots.push_back(polish(q, t - shift));
  std::sort(roots.begin(), roots.end());

  std::vector<double> merged;
  for (double z : roots) {
    if (!merged.empty() && std::abs(z - merged.back()) <= kMergeTol * (1.0 + std::abs(z))) {
      if (std::abs(q(z)) < std::abs(q(merged.back()))) merged.back() = z;
      continue;
    }
    merged.push_back(z);
  }
  return merged;
}

std::optional<double> find_pattern_b_parameter(const SortedSpectrum& s) {
  const double upper = 0.5 * elem_syms(s).e1;
  if (upper < 0.0) return std::nullopt;
  const Cubic q = pattern_b_cubic(s);

  std::optional<double> best;
  auto offer = [&](double g) {
    if (!best || g > *best) best = g;
  };
  for (double root : cubic_real_roots(q)) {
    if (root >= 0.0 && root <= upper) {
      offer(root);
      continue;
    }
    for (double end : {0.0, upper}) {
      if (std::abs(root - end) <= kResidualTol * (1.0 + std::abs(end)) && q.is_root(end)) {
        offer(end);
      }
    }
  }
  return best;
}

PatternBScalars pattern_b_scalars(const SortedSpectrum& s, double g) {
  const double lam3 = s[2];
  const double lam5 = s[4];
  const ElemSyms e = elem_syms(s);
  PatternBScalars out;
  out.g = g;
  out.k = g - lam3 - lam5;
  out.l = (g - lam3) * (lam5 - g);
  out.m = -g * g + e.e1 * g - 0.5 * (e.e2 + lam3 * lam3 + lam5 * lam5);
  return out;
}

std::vector<std::string> PatternBConditions::failures() const {
  std::vector<std::string> out;
  if (!antipode_bounded) out.emplace_back("lambda5 >= -lambda1");
  if (!trace_nonnegative) out.emplace_back("trace e1 >= 0");
  if (!third_exceeds_trace) out.emplace_back("lambda3 > e1");
  if (!parameter) out.emplace_back("cubic root g in [0, e1/2]");
  return out;
}

PatternBConditions pattern_b_conditions(const SortedSpectrum& s) {
  const double e1 = elem_syms(s).e1;
  PatternBConditions c;
  c.antipode_bounded = s[4] >= -s[0];
  c.trace_nonnegative = e1 >= 0.0;
  c.third_exceeds_trace = s[2] > e1;
  c.parameter = find_pattern_b_parameter(s);
  return c;
}

SymMatrix5 formal_pattern_b(const SortedSpectrum& s, double g) {
  PatternBScalars k = pattern_b_scalars(s, g);
  const double e1 = elem_syms(s).e1;
  if (k.l < 0.0) {
    throw NegativeRadicand("B-pattern needs l = (g - lambda3)(lambda5 - g) >= 0");
  }
  if (k.m < 0.0) {
    if (k.m < -kMClampTol * std::max(1.0, e1 * e1)) {
      throw NegativeRadicand("B-pattern needs m >= 0");
    }
    k.m = 0.0;
  }
  const double root_l = std::sqrt(k.l);
  const double root_m = std::sqrt(k.m);

  SymMatrix5 b(Provenance::External);
  b.set(0, 0, g);
  b.set(2, 2, e1 - 2.0 * g);
  b.set(3, 3, g);
  b.set(0, 1, root_l);
  b.set(3, 4, root_l);
  b.set(0, 2, root_m);
  b.set(2, 3, root_m);
  b.set(1, 4, k.k);
  return b;
}

SymMatrix5 build_pattern_b(const SortedSpectrum& s, double g) {
  SymMatrix5 b = formal_pattern_b(s, g);

  const double e1 = elem_syms(s).e1;
  std::vector<std::string> failed;
  if (!(s[4] >= -s[0])) failed.emplace_back("lambda5 >= -lambda1");
  if (!(e1 >= 0.0)) failed.emplace_back("trace e1 >= 0");
  if (!(s[2] > e1)) failed.emplace_back("lambda3 > e1");
  if (!(g >= 0.0 && g <= 0.5 * e1)) failed.emplace_back("g in [0, e1/2]");
  if (!pattern_b_cubic(s).is_root(g)) failed.emplace_back("g is a root of the cubic");
  if (!failed.empty()) throw PreconditionViolated(std::move(failed));

  b.set_provenance(Provenance::PatternB);
  assert(b.min_entry() >= 0.0 && "B-pattern conditions hold but an entry is negative");
  return b;
}

}  // namespace sniep
