#include "sniep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sniep {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::PatternA: return "PatternA";
    case Provenance::PatternB: return "PatternB";
    case Provenance::External: return "External";
  }
  return "External";
}

SymMatrix5::SymMatrix5(Provenance provenance) : provenance_(provenance) {}

SymMatrix5 SymMatrix5::from_entries(const Entries& entries, Provenance provenance) {
  for (std::size_t i = 0; i < kOrder; ++i) {
    for (std::size_t j = 0; j < kOrder; ++j) {
      if (!std::isfinite(entries[i][j])) {
        throw std::invalid_argument("matrix entries must be finite");
      }
      if (entries[i][j] != entries[j][i]) {
        throw std::invalid_argument("matrix is not symmetric");
      }
    }
  }
  SymMatrix5 m(provenance);
  m.entries_ = entries;
  return m;
}

SymMatrix5 SymMatrix5::diagonal(const Values& diag) {
  SymMatrix5 m;
  for (std::size_t i = 0; i < kOrder; ++i) m.entries_[i][i] = diag[i];
  return m;
}

void SymMatrix5::set(std::size_t i, std::size_t j, double value) {
  entries_[i][j] = value;
  entries_[j][i] = value;
}

double SymMatrix5::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < kOrder; ++i) t += entries_[i][i];
  return t;
}

double SymMatrix5::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& row : entries_) {
    for (double v : row) sum += v * v;
  }
  return std::sqrt(sum);
}

double SymMatrix5::min_entry() const {
  double lo = entries_[0][0];
  for (const auto& row : entries_) lo = std::min(lo, *std::min_element(row.begin(), row.end()));
  return lo;
}

double SymMatrix5::max_entry() const {
  double hi = entries_[0][0];
  for (const auto& row : entries_) hi = std::max(hi, *std::max_element(row.begin(), row.end()));
  return hi;
}

}  // namespace sniep
