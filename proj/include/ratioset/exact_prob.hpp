#pragma once

#include <cstdint>
#include <vector>

#include "ratioset/alpha.hpp"
#include "ratioset/exponent_set.hpp"
#include "ratioset/fraction.hpp"
#include "ratioset/probability.hpp"

namespace ratioset {

/// P(r/s in A/A) for A drawn from B(n, alpha):
///
///   1 - prod_{i=1}^{floor(log_s n)} gamma_i^{floor(n / s^i)}.
///
/// Exact alpha yields an exact rational; float alpha yields log(1 - P)
/// accumulated from the largest i down with compensated summation. The
/// diagonal 1/1 is in A/A iff A is nonempty, so it returns 1 - (1 - alpha)^n.
ProbabilityValue prob_in_ratio_set(std::uint64_t n, const ReducedFraction& q, const AlphaParam& alpha);

/// P(some (r/s)^e in A/A, e in E), the same product with gamma^(E)_i.
/// Throws InvalidArgument for the diagonal fraction.
ProbabilityValue prob_in_ratio_set_powers(std::uint64_t n, const ReducedFraction& q, const ExponentSet& E,
                                          const AlphaParam& alpha);

/// A disjunction of containment events over {1..n}: the event occurs iff
/// some hyperedge lies entirely inside A. Hyperedges are sorted vertex lists.
struct MembershipEvent {
  std::uint64_t n = 0;
  std::vector<std::vector<std::uint64_t>> hyperedges;
};

// Event builders scan candidate pairs/tuples directly from the definition
// (a/b equals the target ratio) instead of using the ratio-graph
// construction, so they serve as an independent oracle.

MembershipEvent ratio_event(std::uint64_t n, const ReducedFraction& q);
MembershipEvent powers_event(std::uint64_t n, const ReducedFraction& q, const ExponentSet& E);
MembershipEvent any_of_event(std::uint64_t n, const std::vector<ReducedFraction>& qs);
/// Tuples (a_1..a_d) in {1..n}^d proportional to `coords`.
MembershipEvent direction_event(std::uint64_t n, const std::vector<std::uint64_t>& coords);

inline constexpr std::uint64_t kMaxBruteForceN = 30;
inline constexpr std::size_t kMaxEnumeratedComponent = 25;

/// Exact probability of the event by enumerating every vertex subset of each
/// connected component. Throws InvalidArgument if n > kMaxBruteForceN and
/// CapabilityError if a component exceeds kMaxEnumeratedComponent vertices.
ProbabilityValue prob_bruteforce(const MembershipEvent& event, const AlphaParam& alpha);

}  // namespace ratioset
