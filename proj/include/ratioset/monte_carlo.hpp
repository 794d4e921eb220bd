#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ratioset/exponent_set.hpp"
#include "ratioset/fraction.hpp"
#include "ratioset/hypergraph.hpp"

namespace ratioset {

/// Counter-based generator: a pure function of (seed, trial, element), so
/// every trial is an independent, reproducible stream on any platform.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t trial, std::uint64_t element);

/// One draw of A from B(n, alpha).
class RandomSetSample {
 public:
  RandomSetSample(std::uint64_t n, double alpha, std::uint64_t seed, std::uint64_t trial_index);
  /// A fixed set, for tests and the visibility cross-checks.
  RandomSetSample(std::uint64_t n, const std::vector<std::uint64_t>& members);

  std::uint64_t n() const { return n_; }
  bool contains(std::uint64_t v) const { return v >= 1 && v <= n_ && bits_[v - 1]; }
  std::uint64_t size() const;
  std::vector<std::uint64_t> members() const;

 private:
  std::uint64_t n_;
  std::vector<std::uint8_t> bits_;
};

RandomSetSample sample_set(std::uint64_t n, double alpha, std::uint64_t seed, std::uint64_t trial_index);

/// True iff r t and s t are both in A for some t <= n / s.
bool ratio_set_contains(const RandomSetSample& A, const ReducedFraction& q);

/// |A/A|: distinct reduced fractions a/b over (a, b) in A^2.
std::uint64_t ratio_set_cardinality(const RandomSetSample& A);

struct MembershipQuery {
  std::uint64_t n;
  ReducedFraction q;
};
struct PowersQuery {
  std::uint64_t n;
  ReducedFraction q;
  ExponentSet E;
};
struct AnyOfQuery {
  std::uint64_t n;
  std::vector<ReducedFraction> qs;
};
struct DirectionQuery {
  std::uint64_t n;
  DirectionVector xs;
};
/// Estimates E|A/A| / n^2.
struct CardinalityQuery {
  std::uint64_t n;
};
using McEvent = std::variant<MembershipQuery, PowersQuery, AnyOfQuery, DirectionQuery, CardinalityQuery>;

struct McConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  /// Normal quantile for the interval; 3.89 is two-sided 99.99%.
  double z = 3.89;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  std::optional<double> target;
};

struct EstimateResult {
  double estimate = 0.0;
  std::uint64_t trials = 0;
  double half_width = 0.0;
  double z = 0.0;
  std::optional<double> target;
  /// |estimate - target| / half_width when a target was supplied.
  std::optional<double> deviation;

  bool covers_target() const { return target && std::abs(estimate - *target) <= half_width; }
};

/// Indicator events report the hit frequency with z * sqrt(p(1-p)/trials);
/// the cardinality event reports the mean of |A/A| / n^2 with z * sd / sqrt(trials).
/// Trials are split into fixed chunks whose partial sums are combined in
/// chunk order, so results do not depend on the thread count.
/// Throws InvalidArgument for indicator events with fewer than 1000 trials
/// or cardinality runs with fewer than 2.
EstimateResult mc_estimate(const McEvent& event, double alpha, const McConfig& config);

}  // namespace ratioset
