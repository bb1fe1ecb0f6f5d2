#pragma once

// Reference computations that share no code with the library, plus seeded
// generators for the property tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>

#include "sniep/pattern_a.hpp"
#include "sniep/pattern_b.hpp"
#include "sniep/spectrum.hpp"

namespace sniep::testing {

using Rng = std::mt19937_64;

/// Running sum that also tracks the magnitude of its terms, the natural
/// scale for a relative comparison of a cancelling expression.
struct Sum {
  double value = 0.0;
  double magnitude = 0.0;

  Sum& operator+=(double term) {
    value += term;
    magnitude += std::abs(term);
    return *this;
  }
};

/// e_1..e_5 as sums of products over all subsets of each size.
inline std::array<Sum, 5> subset_esyms(const Values& v) {
  std::array<Sum, 5> e{};
  for (unsigned mask = 1; mask < (1u << kOrder); ++mask) {
    double product = 1.0;
    int size = 0;
    for (std::size_t i = 0; i < kOrder; ++i) {
      if (mask & (1u << i)) {
        product *= v[i];
        ++size;
      }
    }
    e[static_cast<std::size_t>(size - 1)] += product;
  }
  return e;
}

/// |a - b| <= rel * scale, with scale floored so exact zeros compare.
inline bool close(double a, double b, double rel, double scale) {
  return std::abs(a - b) <= rel * std::max(scale, 1e-300);
}

/// Coefficients q3..q0 of the characteristic polynomial
/// z^5 + q4 z^4 + q3 z^3 + q2 z^2 + q1 z + q0 of a pattern matrix, written
/// out from the pattern's scalars.
struct ClosedForm {
  Sum q3, q2, q1, q0;
};

inline ClosedForm pattern_a_closed_form(double u, double v, double w, double r, double e1) {
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double u4 = u2 * u2;
  ClosedForm c;
  c.q3 += -u3 / u2;
  c.q3 += -2.0 * v / u2;
  c.q3 += -r * r / u2;
  c.q3 += -w * w / u2;
  c.q2 += -r;
  c.q2 += 2.0 * e1 * v / u2;
  c.q2 += e1 * r * r / u2;
  c.q2 += e1 * w * w / u2;
  c.q1 += -2.0 * v * w * r / u4;
  c.q1 += w * w * u3 / u4;
  c.q1 += u3 * v / u4;
  c.q1 += v * v / u4;
  c.q1 += r * r * w * w / u4;
  c.q0 += 2.0 * e1 * v * w * r / u4;
  c.q0 += -u2 * v * w / u4;
  c.q0 += u2 * w * w * r / u4;
  c.q0 += -e1 * r * r * w * w / u4;
  c.q0 += -e1 * v * v / u4;
  return c;
}

inline ClosedForm pattern_b_closed_form(double g, double k, double l, double m, double e1) {
  const double k2 = k * k;
  const double g2 = g * g;
  ClosedForm c;
  c.q3 += -k2;
  c.q3 += -2.0 * l;
  c.q3 += -2.0 * m;
  c.q3 += 2.0 * g * e1;
  c.q3 += -3.0 * g2;
  c.q2 += -2.0 * g * l;
  c.q2 += e1 * k2;
  c.q2 += 2.0 * l * e1;
  c.q2 += 2.0 * m * g;
  c.q2 += -g2 * e1;
  c.q2 += 2.0 * g2 * g;
  c.q1 += 4.0 * g2 * l;
  c.q1 += 2.0 * k2 * m;
  c.q1 += -2.0 * k2 * g * e1;
  c.q1 += 3.0 * k2 * g2;
  c.q1 += 2.0 * m * l;
  c.q1 += -2.0 * g * l * e1;
  c.q1 += l * l;
  c.q0 += -2.0 * l * k * m;
  c.q0 += 2.0 * g * l * l;
  c.q0 += -2.0 * k2 * m * g;
  c.q0 += k2 * g2 * e1;
  c.q0 += -2.0 * k2 * g2 * g;
  c.q0 += -l * l * e1;
  return c;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Five independent draws from [lo, hi], sorted.
inline SortedSpectrum random_sorted(Rng& rng, double lo = -1.0, double hi = 1.0) {
  Values v{};
  for (double& x : v) x = uniform(rng, lo, hi);
  return sort_descending(Spectrum(v));
}

/// A draw from the normalized box lambda1 = 1, lambda2 = x, lambda3 = y,
/// lambda2 + lambda3 + lambda4 = d, e1 = t with y > t; nullopt when the
/// resulting list is not ordered within [-1, 1].
inline std::optional<SortedSpectrum> box_point(Rng& rng) {
  const double t = uniform(rng, 0.0, 1.0);
  const double x = uniform(rng, t, 1.0);
  const double d = uniform(rng, (3.0 * t - 1.0) / 2.0, t);
  const double y_max = std::min(x, 2.0 * d + 1.0 - t - x);
  if (!(y_max > t)) return std::nullopt;
  const double y = uniform(rng, t, y_max);
  const Values v{1.0, x, y, d - x - y, t - d - 1.0};
  for (std::size_t i = 0; i + 1 < kOrder; ++i) {
    if (!(v[i] >= v[i + 1])) return std::nullopt;
  }
  if (!(v[4] >= -1.0)) return std::nullopt;
  return SortedSpectrum::from_descending(v);
}

template <class Accept>
SortedSpectrum draw_until(Rng& rng, Accept accept) {
  while (true) {
    if (auto s = box_point(rng); s && accept(*s)) return *s;
  }
}

inline SortedSpectrum pattern_a_sample(Rng& rng) {
  return draw_until(rng, [](const SortedSpectrum& s) { return pattern_a_conditions(s).pass(); });
}

inline SortedSpectrum pattern_b_sample(Rng& rng) {
  return draw_until(rng, [](const SortedSpectrum& s) { return pattern_b_conditions(s).pass(); });
}

inline SortedSpectrum pattern_b_negative_r_sample(Rng& rng) {
  return draw_until(rng, [](const SortedSpectrum& s) {
    return pattern_a_scalars(s).r < 0.0 && pattern_b_conditions(s).pass();
  });
}

/// lambda1 = 1 and lambda5 closing the trace to zero, kept when the list is
/// ordered, lambda5 >= -1, the cubes sum to >= 0 and lambda2 + lambda5 <= 0.
inline SortedSpectrum trace_zero_sample(Rng& rng) {
  while (true) {
    std::array<double, 3> mid{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0),
                              uniform(rng, -1.0, 1.0)};
    std::sort(mid.begin(), mid.end(), [](double a, double b) { return a > b; });
    const double last = -(1.0 + mid[0] + mid[1] + mid[2]);
    const Values v{1.0, mid[0], mid[1], mid[2], last};
    if (!(mid[2] >= last && last >= -1.0)) continue;
    double cubes = 0.0;
    for (double x : v) cubes += x * x * x;
    if (cubes >= 0.0 && mid[0] + last <= 0.0) return SortedSpectrum::from_descending(v);
  }
}

}  // namespace sniep::testing
