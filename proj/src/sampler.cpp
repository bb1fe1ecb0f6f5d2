#include "sniep/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

#include "sniep/error.hpp"

namespace sniep {

namespace {

// Grid coordinates live on multiples of 2^-40. With |coordinate| <= 2 every
// sum and difference the parametrization forms is then exact, so the list's
// computed trace equals t and d = t gives lambda5 = -1 exactly.
constexpr int kGridBits = 40;

double snap(double v) { return std::ldexp(std::nearbyint(std::ldexp(v, kGridBits)), -kGridBits); }

// k-th of n points splitting (lo, hi] evenly; the last one is hi.
double grid_point(double lo, double hi, int n, int k) {
  return snap(hi - static_cast<double>(n - 1 - k) * (hi - lo) / static_cast<double>(n));
}

std::vector<RegionSample> sample_slice(int grid_n, double t, double x) {
  std::vector<RegionSample> out;
  const double d_lo = (3.0 * t - 1.0) / 2.0;
  for (int j = 0; j < grid_n; ++j) {
    const double d = grid_point(d_lo, t, grid_n, j);
    const double y_max = std::min(x, 2.0 * d + 1.0 - t - x);
    if (!(y_max > t)) continue;
    for (int k = 0; k < grid_n; ++k) {
      if (auto sample = evaluate_region_point(t, x, d, grid_point(t, y_max, grid_n, k))) {
        out.push_back(std::move(*sample));
      }
    }
  }
  return out;
}

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out += buf;
}

}  // namespace

std::optional<RegionSample> evaluate_region_point(double t, double x, double d, double y) {
  const Values values{1.0, x, y, d - x - y, (t - d) - 1.0};
  const bool ordered = 1.0 >= values[1] && values[1] >= values[2] && values[2] >= values[3] &&
                       values[3] >= values[4] && values[4] >= -1.0;
  // Rounding in d - x - y can put lambda3 on or below the actual trace even
  // though y > t; such points belong to the known region and are dropped.
  if (!ordered || !(values[2] > trace(values))) return std::nullopt;
  const SortedSpectrum s = SortedSpectrum::from_descending(values);
  return RegionSample{s, classify(s)};
}

void sample_region(int grid_n, std::span<const double> t_values,
                   const std::function<void(const RegionSample&)>& sink, unsigned threads) {
  if (grid_n < 2) throw std::invalid_argument("grid size must be at least 2");
  for (double t : t_values) {
    if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("trace values must lie in [0, 1)");
  }
  threads = std::max(1u, threads);

  struct Slice {
    double t;
    double x;
  };
  std::vector<Slice> slices;
  for (double requested : t_values) {
    const double t = snap(requested);
    for (int i = 0; i < grid_n; ++i) slices.push_back({t, grid_point(t, 1.0, grid_n, i)});
  }

  std::size_t emitted = 0;
  for (std::size_t begin = 0; begin < slices.size(); begin += threads) {
    const std::size_t end = std::min(slices.size(), begin + threads);
    std::vector<std::future<std::vector<RegionSample>>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      const auto policy = threads == 1 ? std::launch::deferred : std::launch::async;
      batch.push_back(std::async(policy, sample_slice, grid_n, slices[i].t, slices[i].x));
    }
    for (auto& f : batch) {
      for (const RegionSample& sample : f.get()) {
        sink(sample);
        ++emitted;
      }
    }
  }
  if (emitted == 0) throw EmptyGrid("no feasible grid point for any requested trace");
}

std::vector<RegionSample> sample_region(int grid_n, std::span<const double> t_values,
                                        unsigned threads) {
  std::vector<RegionSample> out;
  sample_region(grid_n, t_values, [&out](const RegionSample& s) { out.push_back(s); }, threads);
  return out;
}

std::string_view csv_header() { return "lambda2,lambda3,lambda4,lambda5,e1,u,r,g,verdict,tag"; }

std::string to_csv_row(const RegionSample& sample) {
  std::string row;
  for (std::size_t i = 1; i < kOrder; ++i) {
    append_number(row, sample.spectrum[i]);
    row += ',';
  }
  const DecisionDetails& details = sample.decision.details();
  append_number(row, details.e1);
  row += ',';
  append_number(row, details.u);
  row += ',';
  append_number(row, details.r);
  row += ',';
  if (sample.decision.parameter()) append_number(row, *sample.decision.parameter());
  row += ',';
  row += to_string(sample.decision.verdict());
  row += ',';
  row += sample.decision.tag();
  return row;
}

}  // namespace sniep
