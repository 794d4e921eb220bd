#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ratioset/alpha.hpp"
#include "ratioset/exponent_set.hpp"
#include "ratioset/fraction.hpp"
#include "ratioset/probability.hpp"
#include "ratioset/rational.hpp"

namespace ratioset {

/// Directed edge u -> v with u < v.
using Edge = std::pair<std::uint64_t, std::uint64_t>;

struct SingleKind {
  ReducedFraction q;
};
struct PowerKind {
  ReducedFraction q;
  ExponentSet E;
};
struct UnionKind {
  std::vector<ReducedFraction> qs;
};
struct HypergraphProjectionKind {
  std::vector<std::uint64_t> coords;
};
using GraphKind = std::variant<SingleKind, PowerKind, UnionKind, HypergraphProjectionKind>;

/// Directed graph on {1..n}; edges sorted lexicographically, no duplicates.
struct RatioGraph {
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  GraphKind kind;

  std::string describe() const;
};

/// G(n; r, s): edges r t -> s t for 1 <= t <= n / s. Throws InvalidArgument
/// for the diagonal fraction.
RatioGraph build_graph(std::uint64_t n, const ReducedFraction& q);

/// G^(E)(n; r, s) = union over e in E of G(n; r^e, s^e). Only exponents with
/// s^e <= n contribute, so cofinite E is handled by iterating e upward.
RatioGraph build_power_graph(std::uint64_t n, const ReducedFraction& q, const ExponentSet& E);

/// Union of G(n; r_i, s_i). Duplicate fractions and fractions with s > n add
/// nothing. Throws InvalidArgument for an empty list or a diagonal member.
RatioGraph build_union_graph(std::uint64_t n, const std::vector<ReducedFraction>& qs);

struct Component {
  std::vector<std::uint64_t> vertices;  // ascending
  std::vector<Edge> edges;              // induced edges, sorted
};

/// Connected components of the underlying undirected graph, ordered by
/// minimum vertex. `c[i - 1]` counts components of exactly i vertices.
/// For single-kind graphs `d[i - 1]` counts directed paths of i vertices
/// (enumerated from the components) and `closed_forms_hold` reports whether
///   d_i = floor(n / s^{i-1}),  c_i = d_i - 2 d_{i+1} + d_{i+2},
///   sum_{i >= j} (i - j + 1) c_i = d_j,  and every component is a directed path.
struct ComponentDecomposition {
  std::vector<Component> components;
  std::vector<std::uint64_t> c;
  std::vector<std::uint64_t> d;
  /// floor(log n / log s) + 1 for single-kind graphs, else the largest size.
  std::size_t k = 0;
  bool closed_forms_hold = true;

  std::uint64_t count_of_size(std::size_t i) const { return i >= 1 && i <= c.size() ? c[i - 1] : 0; }
};

ComponentDecomposition components(const RatioGraph& g);

/// True iff the component is a directed path v_1 -> v_2 -> ... -> v_k.
bool is_directed_path(const Component& comp);

/// Probability that no edge of the component has both endpoints selected:
/// the independence polynomial evaluated at alpha, normalized. Exact in
/// exact mode. Throws CapabilityError beyond the DP vertex limit.
Rational independence_probability(const Component& comp, const Rational& alpha);
double independence_probability(const Component& comp, double alpha);

/// P(some r_i / s_i in A/A), computed as 1 - product of per-component
/// independence probabilities of the union graph. Diagonal members make the
/// event "A nonempty" reachable and are rejected.
ProbabilityValue prob_any_of(std::uint64_t n, const std::vector<ReducedFraction>& qs, const AlphaParam& alpha);

enum class ExportFormat { dot, json };

ExportFormat parse_export_format(std::string_view text);

/// Deterministic text export: vertices ascending, edges in lexicographic
/// order, one DOT edge statement per line.
std::string export_graph(const RatioGraph& g, ExportFormat format);

}  // namespace ratioset
