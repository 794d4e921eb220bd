#include "ratioset/fraction.hpp"

#include <algorithm>
#include <numeric>

#include "ratioset/errors.hpp"

namespace ratioset {

ReducedFraction::ReducedFraction(std::uint64_t r, std::uint64_t s) : r_(r), s_(s) {
  if (r == 0 || s == 0) throw InvalidArgument("fraction terms must be positive");
  if (std::gcd(r, s) != 1) throw InvalidArgument("fraction " + to_string() + " is not in lowest terms");
  if (r > s) throw InvalidArgument("fraction " + to_string() + " must have numerator below denominator");
}

std::optional<std::uint64_t> checked_power(std::uint64_t s, unsigned e, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (unsigned k = 0; k < e; ++k) {
    if (acc > limit / s) return std::nullopt;
    acc *= s;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

std::optional<ReducedFraction> ReducedFraction::power(unsigned e, std::uint64_t limit) const {
  const auto sp = checked_power(s_, e, limit);
  if (!sp) return std::nullopt;
  // r <= s, so r^e fits whenever s^e does.
  return ReducedFraction(*checked_power(r_, e, limit), *sp);
}

std::string ReducedFraction::to_string() const { return std::to_string(r_) + "/" + std::to_string(s_); }

NormalizedFraction normalize_fraction(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw InvalidArgument("fraction terms must be positive");
  const std::uint64_t g = std::gcd(a, b);
  a /= g;
  b /= g;
  const bool inverted = a > b;
  if (inverted) std::swap(a, b);
  return NormalizedFraction{ReducedFraction(a, b), g, inverted};
}

std::vector<ReducedFraction> canonical_fraction_list(std::vector<ReducedFraction> qs) {
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

unsigned floor_log(std::uint64_t n, std::uint64_t s) {
  if (s < 2) throw InvalidArgument("floor_log needs base >= 2");
  unsigned i = 0;
  std::uint64_t power = 1;
  while (power <= n / s) {
    power *= s;
    ++i;
  }
  return i;
}

}  // namespace ratioset
