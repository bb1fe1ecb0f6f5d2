#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace sniep {

inline constexpr std::size_t kOrder = 5;

using Values = std::array<double, kOrder>;

/// Five real eigenvalue candidates in arbitrary order.
///
/// Construction rejects NaN and infinities with InvalidSpectrum, so every
/// live Spectrum is finite.
class Spectrum {
 public:
  explicit Spectrum(const Values& values);

  const Values& values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  Values values_;
};

/// A spectrum in non-increasing order: values()[0] is the largest entry.
///
/// Only descending order is enforced. Whether the smallest entry is at least
/// minus the largest is a separate question answered by check_pf.
class SortedSpectrum {
 public:
  /// Adopts `values` that are already descending; throws InvalidSpectrum
  /// otherwise (or when an entry is not finite).
  static SortedSpectrum from_descending(const Values& values);

  const Values& values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double largest() const noexcept { return values_.front(); }
  double smallest() const noexcept { return values_.back(); }

  Spectrum as_spectrum() const { return Spectrum(values_); }

  friend bool operator==(const SortedSpectrum&, const SortedSpectrum&) = default;

 private:
  explicit SortedSpectrum(const Values& values) : values_(values) {}
  Values values_;
};

/// Elementary symmetric polynomials of a spectrum, so that
/// prod (z - lambda_i) = z^5 - e1 z^4 + e2 z^3 - e3 z^2 + e4 z - e5.
struct ElemSyms {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double e4 = 0.0;
  double e5 = 0.0;

  friend bool operator==(const ElemSyms&, const ElemSyms&) = default;
};

/// Parses "a,b,c,d,e" (decimal or scientific notation, optional spaces).
/// Throws InvalidSpectrum on malformed input.
Spectrum parse_spectrum(std::string_view text);

/// Stable descending sort; tied values keep their input order.
SortedSpectrum sort_descending(const Spectrum& s);

/// Coefficients of the monic polynomial prod (z - lambda_i), highest degree
/// first, built by multiplying in one linear factor at a time.
std::array<double, kOrder + 1> monic_coefficients(const Values& values);

/// Identical (bitwise) for every ordering of the same five values.
ElemSyms elem_syms(const Spectrum& s);
ElemSyms elem_syms(const SortedSpectrum& s);

Spectrum scale(const Spectrum& s, double alpha);

double trace(const Values& values);

// Exact floating-point comparisons; callers needing margins add their own.

/// lambda1 >= |lambda_i| for every i.
bool check_pf(const SortedSpectrum& s);
/// Sum of entries is nonnegative.
bool check_trace(const Spectrum& s);
bool check_trace(const SortedSpectrum& s);
/// lambda1 + lambda3 + lambda4 >= 0, necessary for 5x5 symmetric nonnegative
/// realizability.
bool check_mn(const SortedSpectrum& s);

}  // namespace sniep
