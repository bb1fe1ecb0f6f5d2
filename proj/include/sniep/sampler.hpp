#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sniep/classify.hpp"
#include "sniep/spectrum.hpp"

namespace sniep {

/// One classified point of the normalized spectrum space (lambda1 = 1).
struct RegionSample {
  SortedSpectrum spectrum;
  RealizabilityDecision decision;
};

/// Classifies sigma = (1, x, y, d - x - y, (t - d) - 1), where x = lambda2,
/// y = lambda3, d = lambda2 + lambda3 + lambda4 and t = e1. Returns nullopt
/// unless 1 >= x >= y >= lambda4 >= lambda5 >= -1 holds exactly and lambda3
/// exceeds the computed trace of the list.
std::optional<RegionSample> evaluate_region_point(double t, double x, double d, double y);

/// Walks the part of the space with lambda3 > e1 for each requested trace t:
///
///   x over grid_n points of (t, 1],
///   d over grid_n points of ((3t - 1) / 2, t],
///   y over grid_n points of (t, min(x, 2d + 1 - t - x)] when non-empty,
///
/// each range split into grid_n equal steps that end on its closed endpoint.
/// t and every grid coordinate are rounded to the nearest multiple of 2^-40
/// so that the generated lists have trace exactly t.
/// Samples reach `sink` in lexicographic (t, x, d, y) order regardless of
/// `threads`.
///
/// Throws std::invalid_argument if grid_n < 2 or some t is outside [0, 1),
/// and EmptyGrid if no point is feasible for any t.
void sample_region(int grid_n, std::span<const double> t_values,
                   const std::function<void(const RegionSample&)>& sink, unsigned threads = 1);

std::vector<RegionSample> sample_region(int grid_n, std::span<const double> t_values,
                                        unsigned threads = 1);

/// lambda2,lambda3,lambda4,lambda5,e1,u,r,g,verdict,tag
std::string_view csv_header();

/// Numbers with 12 significant digits; g empty when absent.
std::string to_csv_row(const RegionSample& sample);

}  // namespace sniep
