#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ratioset/alpha.hpp"
#include "ratioset/rational.hpp"

namespace ratioset {

enum class Provenance { formula, component_product, brute_force, monte_carlo };

std::string_view to_string(Provenance provenance);

struct MonteCarloInfo {
  std::uint64_t trials = 0;
  double half_width = 0.0;
};

/// A probability in [0, 1], either exact or as log(1 - P) in floating point.
///
/// Log-space values keep full relative precision in 1 - P, which matters when
/// P is within a few ulps of 1.
class ProbabilityValue {
 public:
  static ProbabilityValue exact(Rational p, Provenance provenance);
  static ProbabilityValue from_log_complement(double log_one_minus_p, Provenance provenance);
  static ProbabilityValue monte_carlo(double estimate, std::uint64_t trials, double half_width);

  NumericMode mode() const { return exact_ ? NumericMode::exact : NumericMode::floating; }
  bool is_exact() const { return exact_.has_value(); }
  /// Throws std::logic_error in float mode.
  const Rational& exact_value() const;
  double value() const;
  /// log(1 - P); -inf when P = 1.
  double log_complement() const { return log_complement_; }
  Provenance provenance() const { return provenance_; }
  const std::optional<MonteCarloInfo>& monte_carlo_info() const { return mc_; }

 private:
  ProbabilityValue() = default;

  std::optional<Rational> exact_;
  double value_ = 0.0;
  double log_complement_ = 0.0;
  Provenance provenance_ = Provenance::formula;
  std::optional<MonteCarloInfo> mc_;
};

}  // namespace ratioset
