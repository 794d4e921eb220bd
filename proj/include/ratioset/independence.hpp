#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ratioset/rational.hpp"

namespace ratioset {

inline constexpr std::size_t kMaxDpVertices = 64;

/// Probability that no constraint set is fully selected when each of
/// `vertex_count` local vertices (0..vertex_count-1) is selected
/// independently with probability alpha. Constraints are vertex bitmasks:
/// two-element masks are graph edges (the weighted independent-set sum),
/// larger masks are hyperedges.
///
/// Memoized elimination: branch on the most constrained vertex, drop
/// constraints it breaks, shrink the ones it joins, and split the remainder
/// into connected pieces. Throws CapabilityError above kMaxDpVertices.
Rational no_constraint_selected(std::span<const std::uint64_t> constraints, std::size_t vertex_count,
                                const Rational& alpha);
double no_constraint_selected(std::span<const std::uint64_t> constraints, std::size_t vertex_count, double alpha);

/// Same quantity by plain enumeration of all 2^vertex_count subsets. Oracle
/// for the DP; throws CapabilityError above 25 vertices.
Rational no_constraint_selected_enumerated(std::span<const std::uint64_t> constraints, std::size_t vertex_count,
                                           const Rational& alpha);

}  // namespace ratioset
