#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ratioset {

/// A positive rational r/s in lowest terms with r < s, or the diagonal 1/1.
///
/// Membership in A/A is invariant under inversion, so every query is folded
/// onto r < s. Construction enforces the normal form; use normalize_fraction
/// for arbitrary input.
class ReducedFraction {
 public:
  /// Throws InvalidArgument unless gcd(r, s) = 1 and (r < s or r = s = 1).
  ReducedFraction(std::uint64_t r, std::uint64_t s);

  std::uint64_t numerator() const { return r_; }
  std::uint64_t denominator() const { return s_; }
  bool is_diagonal() const { return r_ == s_; }

  /// (r/s)^e, or nullopt when s^e exceeds `limit`.
  std::optional<ReducedFraction> power(unsigned e, std::uint64_t limit) const;

  std::string to_string() const;

  auto operator<=>(const ReducedFraction&) const = default;

 private:
  std::uint64_t r_;
  std::uint64_t s_;
};

/// Result of folding a/b onto the canonical form.
struct NormalizedFraction {
  ReducedFraction fraction;
  std::uint64_t common_divisor;  // gcd(a, b) that was divided out
  bool inverted;                 // a > b, so the fraction was flipped
};

/// Divides by gcd and swaps so numerator <= denominator. a, b >= 1.
NormalizedFraction normalize_fraction(std::uint64_t a, std::uint64_t b);

/// Sorted, duplicate-free copy.
std::vector<ReducedFraction> canonical_fraction_list(std::vector<ReducedFraction> qs);

/// Largest i with s^i <= n, computed in integer arithmetic (0 if s > n).
/// s must be >= 2.
unsigned floor_log(std::uint64_t n, std::uint64_t s);

/// s^e if it is at most `limit`, without overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t s, unsigned e, std::uint64_t limit);

}  // namespace ratioset
