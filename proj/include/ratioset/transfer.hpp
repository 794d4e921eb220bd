#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ratioset/exponent_set.hpp"
#include "ratioset/rational.hpp"

namespace ratioset {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t size = 0) : size_(size), data_(size * size) {}
  std::size_t size() const { return size_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

 private:
  std::size_t size_;
  std::vector<Rational> data_;
};

/// Coefficients p_0 .. p_n of det(xI - M), lowest degree first (p_n = 1).
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

/// beta_i = sum_{j=1}^{order} coefficients[j-1] * beta_{i-j} for all i >= first_index.
struct LinearRecurrence {
  std::vector<Rational> coefficients;
  std::size_t first_index = 0;
  std::size_t order() const { return coefficients.size(); }
};

/// Sliding-window Markov chain for a finite exponent set.
///
/// States are the admissible binary windows x_1..x_m (m = max(E) + 1, no two
/// ones at a distance in E), followed by one absorbing state. A step shifts
/// the window left by one and appends c in {0, 1} with probability 1 - alpha
/// or alpha; inadmissible results go to the absorbing state. Then
///
///   beta^(E)_i = initial * transition^(i - m) * acceptance   for i >= m.
struct TransferSystem {
  std::size_t window_length = 0;
  /// Admissible windows, x_1 in the most significant of the m bits.
  std::vector<std::uint32_t> windows;
  std::vector<Rational> initial;
  RationalMatrix transition;
  std::vector<Rational> acceptance;

  std::size_t state_count() const { return windows.size() + 1; }
  std::size_t absorbing_state() const { return windows.size(); }

  /// initial * transition^steps * acceptance.
  Rational evaluate_steps(std::size_t steps) const;
  /// beta^(E)_i for i >= window_length.
  Rational beta(std::size_t i) const;
};

/// Throws InvalidArgument for cofinite E and CapabilityError if the window
/// exceeds 20 characters.
TransferSystem build_transfer_system(const ExponentSet& E, const Rational& alpha);

/// The linear recurrence for beta^(E) read off the characteristic polynomial
/// of the transient block (zero roots stripped). first_index is the smallest
/// index from which the recurrence reproduces the sequence, checked against
/// the window DP up to `check_until`.
LinearRecurrence recurrence_of(const TransferSystem& system, const ExponentSet& E, const Rational& alpha,
                               std::size_t check_until = 40);

}  // namespace ratioset
