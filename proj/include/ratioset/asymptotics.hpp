#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ratioset/alpha.hpp"

namespace ratioset {

/// Roots of X^2 - (1 - alpha) X - alpha (1 - alpha) with |rho1| > |rho2|,
/// and the Binet coefficients with beta_i = zeta1 rho1^i + zeta2 rho2^i.
struct CharacteristicRoots {
  double rho1 = 0.0;
  double rho2 = 0.0;
  /// |rho2 / rho1|, in (0, 1).
  double varrho = 0.0;
  double zeta1 = 0.0;
  double zeta2 = 0.0;

  double binet(std::size_t i) const;
};

CharacteristicRoots char_roots(double alpha);

/// delta(s) = sum_{i >= 1} log(1 / gamma_i) / s^i with a geometric tail bound.
struct DeltaValue {
  std::uint64_t s = 0;
  double value = 0.0;
  /// Number of terms summed.
  std::size_t truncation_index = 0;
  /// Bound on the omitted tail: C (varrho/s)^{K+1} / (1 - varrho/s).
  double tail_bound = 0.0;
  /// Measured C in |log gamma_i| <= C varrho^i, valid from decay_start on.
  double decay_constant = 0.0;
  std::size_t decay_start = 0;
};

/// Sums until the tail bound drops below rel_tol * |partial sum|. Terms come
/// from log_gamma_table, so exact alphas use log1p of exact differences.
DeltaValue delta_series(std::uint64_t s, const AlphaParam& alpha, double rel_tol = 1e-12);

struct CorollaryCheck {
  std::vector<std::uint64_t> n_grid;
  /// |log(1 - P(n)) + delta(s) n| per grid point.
  std::vector<double> deviations;
  double max_deviation = 0.0;
  /// sum_i |log gamma_i| + 1.
  double bound = 0.0;
  /// Least-squares slope of deviation against log n.
  double slope = 0.0;
  /// All deviations below `bound`, and the fitted trend moves by less than
  /// `bound` across the whole grid.
  bool bounded_without_trend = false;
};

/// P is evaluated in log-space float mode at every grid point (grid values
/// must be >= s).
CorollaryCheck check_corollary(const std::vector<std::uint64_t>& n_grid, std::uint64_t s, const AlphaParam& alpha);

/// Log-spaced integers from lo to hi inclusive, `per_decade` points per factor 10.
std::vector<std::uint64_t> log_spaced_grid(std::uint64_t lo, std::uint64_t hi, unsigned per_decade);

struct AlternatingCheck {
  bool strictly_decreasing = false;
  bool above_one = false;
  /// (v_i - 1) contracts by at most (1 + varrho) / 2 per step over the upper
  /// half of the range, so the sequence tends to 1.
  bool tends_to_one = false;
  /// v_i = gamma_i^{(-1)^i} as doubles, i = 1..i_max, for reporting.
  std::vector<double> values;

  bool passed() const { return strictly_decreasing && above_one && tends_to_one; }
};

/// Compares gamma_i^{(-1)^i}, i = 1..i_max, in exact arithmetic.
/// alpha is used as an exact rational regardless of mode. i_max >= 2.
AlternatingCheck check_alternating(const AlphaParam& alpha, std::size_t i_max);

/// Li_2(z) = sum z^k / k^2 for 0 <= z < 1, summed until the tail bound
/// z^{K+1} / ((K+1)^2 (1 - z)) is at most 1e-12 (or relative 1e-15).
double dilog(double z);

/// (6 / pi^2) alpha^2 Li_2(1 - alpha^2) / (1 - alpha^2), the limit of
/// |A/A| / n^2.
double cardinality_constant(double alpha);

}  // namespace ratioset
