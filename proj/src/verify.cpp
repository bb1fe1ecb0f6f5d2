#include "sniep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "sniep/error.hpp"

namespace sniep {

namespace {

using Dense = SymMatrix5::Entries;

double off_diagonal_norm(const Dense& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kOrder; ++i) {
    for (std::size_t j = 0; j < kOrder; ++j) {
      if (i != j) sum += a[i][j] * a[i][j];
    }
  }
  return std::sqrt(sum);
}

// Zeroes a[p][q] with one symmetric rotation.
void rotate(Dense& a, std::size_t p, std::size_t q) {
  const double apq = a[p][q];
  if (apq == 0.0) return;
  const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;

  a[p][p] -= t * apq;
  a[q][q] += t * apq;
  a[p][q] = a[q][p] = 0.0;
  for (std::size_t r = 0; r < kOrder; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r][p];
    const double arq = a[r][q];
    a[r][p] = a[p][r] = c * arp - s * arq;
    a[r][q] = a[q][r] = s * arp + c * arq;
  }
}

}  // namespace

std::array<double, kOrder + 1> char_poly_coeffs(const SymMatrix5& m) {
  const Dense& a = m.entries();
  std::array<double, kOrder + 1> coeffs{};
  coeffs[0] = 1.0;

  Dense power = a;  // M_k = M (M_{k-1} + c_{k-1} I), starting from M_1 = M
  for (std::size_t k = 1; k <= kOrder; ++k) {
    double tr = 0.0;
    for (std::size_t i = 0; i < kOrder; ++i) tr += power[i][i];
    coeffs[k] = -tr / static_cast<double>(k);
    if (k == kOrder) break;

    Dense shifted = power;
    for (std::size_t i = 0; i < kOrder; ++i) shifted[i][i] += coeffs[k];
    Dense next{};
    for (std::size_t i = 0; i < kOrder; ++i) {
      for (std::size_t j = 0; j < kOrder; ++j) {
        double sum = 0.0;
        for (std::size_t l = 0; l < kOrder; ++l) sum += a[i][l] * shifted[l][j];
        next[i][j] = sum;
      }
    }
    power = next;
  }
  return coeffs;
}

SortedSpectrum sym_eigenvalues(const SymMatrix5& m, int max_sweeps) {
  Dense a = m.entries();
  const double threshold = 1e-13 * (1.0 + m.frobenius_norm());

  int sweeps = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweeps == max_sweeps) {
      throw NoConvergence("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                          " sweeps");
    }
    for (std::size_t p = 0; p + 1 < kOrder; ++p) {
      for (std::size_t q = p + 1; q < kOrder; ++q) rotate(a, p, q);
    }
    ++sweeps;
  }

  Values eig{};
  for (std::size_t i = 0; i < kOrder; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return SortedSpectrum::from_descending(eig);
}

VerificationReport verify_spectrum(const SymMatrix5& m, const SortedSpectrum& target,
                                   double rel_tol) {
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("verification tolerance must be positive");
  }
  VerificationReport report;
  report.eigenvalues = sym_eigenvalues(m).values();
  report.target = target.values();
  report.tolerance = rel_tol * std::max(1.0, std::abs(target.largest()));
  for (std::size_t i = 0; i < kOrder; ++i) {
    report.max_deviation =
        std::max(report.max_deviation, std::abs(report.eigenvalues[i] - report.target[i]));
  }
  report.pass = report.max_deviation <= report.tolerance;
  return report;
}

bool entry_bound_check(const SymMatrix5& m) {
  const SortedSpectrum eig = sym_eigenvalues(m);
  const double rho = std::max(std::abs(eig.largest()), std::abs(eig.smallest()));
  const double slack = 1e-12 * (1.0 + rho);
  for (const auto& row : m.entries()) {
    for (double v : row) {
      if (v < -slack || v > rho + slack) return false;
    }
  }
  return true;
}

}  // namespace sniep
