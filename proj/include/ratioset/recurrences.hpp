#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ratioset/alpha.hpp"
#include "ratioset/exponent_set.hpp"
#include "ratioset/rational.hpp"

namespace ratioset {

// beta_i is the probability that a path of i vertices, each selected
// independently with probability alpha, has no two adjacent selected
// vertices:
//
//   beta_0 = beta_1 = 1,  beta_{i+1} = (1 - alpha) beta_i + alpha (1 - alpha) beta_{i-1}.
//
// gamma_i = beta_{i-1} beta_{i+1} / beta_i^2 is the per-level factor of the
// membership product.

/// beta_0 .. beta_last.
template <class T>
std::vector<T> beta_table(std::size_t last, const T& alpha);

Rational beta(std::size_t i, const Rational& alpha);
double beta(std::size_t i, double alpha);

/// i >= 1.
Rational gamma(std::size_t i, const Rational& alpha);
double gamma(std::size_t i, double alpha);

/// log(gamma_i) without cancellation. Uses the determinant identity
/// beta_{i-1} beta_{i+1} - beta_i^2 = -alpha^2 (-alpha (1 - alpha))^{i-1}, so the
/// float path never subtracts nearly equal numbers. Exact alphas go through
/// log1p of the exact rational gamma_i - 1.
double log_gamma(std::size_t i, const AlphaParam& alpha);

/// log(gamma_1) .. log(gamma_last), same accuracy guarantees as log_gamma.
std::vector<double> log_gamma_table(std::size_t last, const AlphaParam& alpha);

// Pattern-avoidance generalization: beta^(E)_i is the probability that a
// length-i Bernoulli(alpha) string has no two ones at a distance e in E.
// Distances are pairwise, regardless of the characters in between, which is
// exactly the event that a component of the power graph G^(E) contains no
// fully selected edge.

/// beta^(E)_0 .. beta^(E)_last. Finite E runs a sliding-window DP over the
/// last max(E) characters; cofinite E sums over all admissible placements of
/// ones (pairwise distances drawn from the excluded set).
template <class T>
std::vector<T> beta_E_table(const ExponentSet& E, std::size_t last, const T& alpha);

Rational beta_E(const ExponentSet& E, std::size_t i, const Rational& alpha);
double beta_E(const ExponentSet& E, std::size_t i, double alpha);

Rational gamma_E(const ExponentSet& E, std::size_t i, const Rational& alpha);
double gamma_E(const ExponentSet& E, std::size_t i, double alpha);

inline constexpr std::size_t kMaxBruteForceLength = 24;

/// Enumerates all 2^i strings. Throws InvalidArgument if i > kMaxBruteForceLength.
Rational beta_E_bruteforce(const ExponentSet& E, std::size_t i, const Rational& alpha);

/// A placement of ones (offsets from the first one) whose pairwise
/// distances all avoid a cofinite E. Exposed for inspection and tests.
struct OnesPattern {
  std::vector<std::uint32_t> offsets;  // starts with 0
  std::uint32_t span() const { return offsets.back(); }
};

/// All admissible one-placements for a cofinite E, including the single one
/// {0}. Throws InvalidArgument for finite E.
std::vector<OnesPattern> admissible_patterns(const ExponentSet& E);

}  // namespace ratioset
