#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ratioset/alpha.hpp"
#include "ratioset/probability.hpp"

namespace ratioset {

/// A lattice direction (x_1, ..., x_d) with d >= 2 positive coordinates.
class DirectionVector {
 public:
  /// Throws InvalidArgument if d < 2 or some coordinate is zero.
  explicit DirectionVector(std::vector<std::uint64_t> coords);

  const std::vector<std::uint64_t>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }
  std::uint64_t gcd() const { return gcd_; }
  bool is_primitive() const { return gcd_ == 1; }
  std::uint64_t max_coord() const;
  /// Divided by the gcd of its coordinates.
  DirectionVector primitive() const;

  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coords_;
  std::uint64_t gcd_;
};

/// H(n; x_1..x_d): vertices 1..n and hyperedges {x_1 t, ..., x_d t} for
/// 1 <= t <= n / max(x). Repeated coordinates collapse inside a hyperedge,
/// so each hyperedge is a sorted, duplicate-free vertex list.
struct RatioHypergraph {
  std::uint64_t n = 0;
  DirectionVector direction;
  std::vector<std::vector<std::uint64_t>> hyperedges;
};

RatioHypergraph build_hypergraph(std::uint64_t n, const DirectionVector& xs);

struct HyperComponent {
  std::vector<std::uint64_t> vertices;
  std::vector<std::vector<std::uint64_t>> hyperedges;
};

/// Components of the incidence structure (vertices joined when they share a
/// hyperedge), ordered by minimum vertex. Isolated vertices are omitted.
std::vector<HyperComponent> hyper_components(const RatioHypergraph& h);

struct DirectionHit {
  ProbabilityValue probability;
  DirectionVector evaluated;  // the primitive direction actually used
  bool reduced;               // input was not primitive
};

/// P(some hyperedge of H(n; xs) lies entirely in A), the direction event
/// "exists t with x_i t in A for all i". Non-primitive input is reduced to
/// its primitive direction first and flagged. For d = 2 this equals
/// P(x_1 / x_2 in A/A).
DirectionHit prob_direction_hit(std::uint64_t n, const DirectionVector& xs, const AlphaParam& alpha);

/// Pointwise visibility: P is in A^d and no lattice point (j / g) P,
/// 1 <= j < g, g = gcd(P), lies in A^d.
bool is_visible(const DirectionVector& point, const std::set<std::uint64_t>& A);

std::string export_hypergraph_json(const RatioHypergraph& h);

}  // namespace ratioset
