#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "sniep/spectrum.hpp"

namespace sniep {

/// Which constructor produced a matrix.
enum class Provenance { PatternA, PatternB, External };

std::string_view to_string(Provenance p);

/// Dense symmetric 5x5 real matrix.
///
/// Symmetry is structural: set(i, j, v) writes both (i, j) and (j, i), and
/// from_entries() rejects input that is not exactly symmetric.
class SymMatrix5 {
 public:
  using Entries = std::array<std::array<double, kOrder>, kOrder>;

  explicit SymMatrix5(Provenance provenance = Provenance::External);

  /// Throws std::invalid_argument if `entries` is not exactly symmetric or
  /// contains a non-finite value.
  static SymMatrix5 from_entries(const Entries& entries,
                                 Provenance provenance = Provenance::External);
  static SymMatrix5 diagonal(const Values& diag);

  double operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  void set(std::size_t i, std::size_t j, double value);

  const Entries& entries() const noexcept { return entries_; }
  Provenance provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) noexcept { provenance_ = p; }

  double trace() const;
  double frobenius_norm() const;
  double min_entry() const;
  double max_entry() const;

 private:
  Entries entries_{};
  Provenance provenance_;
};

}  // namespace sniep
