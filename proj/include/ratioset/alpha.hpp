#pragma once

#include <string>
#include <string_view>

#include "ratioset/rational.hpp"

namespace ratioset {

enum class NumericMode { exact, floating };

std::string_view to_string(NumericMode mode);

/// Selection probability of the B(n, alpha) model, 0 < alpha < 1.
///
/// The value is always held as an exact rational (a double converts to a
/// dyadic rational without loss); the mode decides which arithmetic the
/// downstream engines use and is carried into every result.
class AlphaParam {
 public:
  /// Exact alpha = p/q. Throws InvalidArgument unless 0 < p/q < 1.
  static AlphaParam exact(std::int64_t p, std::int64_t q);
  static AlphaParam exact(const Rational& value);
  /// Float-mode alpha. Throws InvalidArgument unless 0 < value < 1.
  static AlphaParam floating(double value);
  /// "p/q" parses to exact mode, a decimal ("0.25") to float mode.
  static AlphaParam parse(std::string_view text);

  NumericMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == NumericMode::exact; }
  const Rational& rational() const { return exact_; }
  double value() const { return value_; }

  AlphaParam as_floating() const;
  AlphaParam as_exact() const;

  /// "p/q" in exact mode, shortest round-trip decimal in float mode.
  std::string to_string() const;

 private:
  AlphaParam(Rational exact, NumericMode mode);

  Rational exact_;
  double value_;
  NumericMode mode_;
};

}  // namespace ratioset
