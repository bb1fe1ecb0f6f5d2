#include "sniep/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <string>

#include "sniep/error.hpp"

namespace sniep {

namespace {

void require_finite(const Values& values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidSpectrum("spectrum entries must be finite");
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

PreconditionViolated::PreconditionViolated(std::vector<std::string> failed)
    : Error([&] {
        std::string msg = "precondition violated:";
        for (const auto& f : failed) msg += " " + f + ";";
        return msg;
      }()),
      failed_(std::move(failed)) {}

Spectrum::Spectrum(const Values& values) : values_(values) { require_finite(values_); }

SortedSpectrum SortedSpectrum::from_descending(const Values& values) {
  require_finite(values);
  if (!std::is_sorted(values.begin(), values.end(), std::greater<>())) {
    throw InvalidSpectrum("spectrum is not in descending order");
  }
  return SortedSpectrum(values);
}

Spectrum parse_spectrum(std::string_view text) {
  Values values{};
  std::size_t count = 0;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view field = trim(rest.substr(0, comma));
    if (count == kOrder) {
      throw InvalidSpectrum("expected exactly five comma-separated values");
    }
    if (field.empty()) {
      throw InvalidSpectrum("empty field in spectrum '" + std::string(text) + "'");
    }
    // from_chars rejects a leading '+', accept it for convenience.
    std::string_view digits = field.front() == '+' ? field.substr(1) : field;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InvalidSpectrum("cannot parse '" + std::string(field) + "' as a number");
    }
    values[count++] = value;
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (count != kOrder) {
    throw InvalidSpectrum("expected exactly five comma-separated values");
  }
  return Spectrum(values);
}

SortedSpectrum sort_descending(const Spectrum& s) {
  Values values = s.values();
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return SortedSpectrum::from_descending(values);
}

std::array<double, kOrder + 1> monic_coefficients(const Values& values) {
  std::array<double, kOrder + 1> c{};
  c[0] = 1.0;
  // After k factors, c[0..k] holds the coefficients of the partial product.
  for (std::size_t k = 0; k < kOrder; ++k) {
    for (std::size_t j = k + 1; j > 0; --j) {
      c[j] -= values[k] * c[j - 1];
    }
  }
  return c;
}

ElemSyms elem_syms(const SortedSpectrum& s) {
  const auto c = monic_coefficients(s.values());
  // Adding 0.0 turns a negated zero into +0.
  return ElemSyms{0.0 - c[1], c[2] + 0.0, 0.0 - c[3], c[4] + 0.0, 0.0 - c[5]};
}

// Multiplying the factors in a canonical order makes the result bitwise
// independent of the input order.
ElemSyms elem_syms(const Spectrum& s) { return elem_syms(sort_descending(s)); }

Spectrum scale(const Spectrum& s, double alpha) {
  Values values = s.values();
  for (double& v : values) v *= alpha;
  return Spectrum(values);
}

double trace(const Values& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

bool check_pf(const SortedSpectrum& s) { return s.largest() >= 0.0 && s.largest() >= -s.smallest(); }

bool check_trace(const Spectrum& s) { return trace(s.values()) >= 0.0; }

bool check_trace(const SortedSpectrum& s) { return trace(s.values()) >= 0.0; }

bool check_mn(const SortedSpectrum& s) { return s[0] + s[2] + s[3] >= 0.0; }

}  // namespace sniep
