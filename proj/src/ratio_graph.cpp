#include "ratioset/ratio_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ratioset/disjoint_sets.hpp"
#include "ratioset/errors.hpp"
#include "ratioset/independence.hpp"

namespace ratioset {

namespace {

void require_graph_args(std::uint64_t n, const ReducedFraction& q) {
  if (n == 0) throw InvalidArgument("n must be positive");
  if (q.is_diagonal()) throw InvalidArgument("the diagonal fraction 1/1 has no ratio graph");
}

void add_edges(std::vector<Edge>& edges, std::uint64_t n, std::uint64_t r, std::uint64_t s) {
  for (std::uint64_t t = 1; t <= n / s; ++t) edges.emplace_back(r * t, s * t);
}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::string graph_label(std::uint64_t n, const ReducedFraction& q) {
  return "G(" + std::to_string(n) + ";" + std::to_string(q.numerator()) + "," + std::to_string(q.denominator()) + ")";
}

}  // namespace

std::string RatioGraph::describe() const {
  return std::visit(
      [this](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, SingleKind>) {
          return graph_label(n, k.q);
        } else if constexpr (std::is_same_v<K, PowerKind>) {
          return "G^{" + k.E.to_string() + "}" + graph_label(n, k.q).substr(1);
        } else if constexpr (std::is_same_v<K, UnionKind>) {
          std::string out;
          for (const auto& q : k.qs) out += (out.empty() ? "" : " + ") + graph_label(n, q);
          return out;
        } else {
          std::string out = "H(" + std::to_string(n);
          for (std::size_t i = 0; i < k.coords.size(); ++i) out += (i ? "," : ";") + std::to_string(k.coords[i]);
          return out + ")";
        }
      },
      kind);
}

RatioGraph build_graph(std::uint64_t n, const ReducedFraction& q) {
  require_graph_args(n, q);
  RatioGraph g{n, {}, SingleKind{q}};
  add_edges(g.edges, n, q.numerator(), q.denominator());
  return g;
}

RatioGraph build_power_graph(std::uint64_t n, const ReducedFraction& q, const ExponentSet& E) {
  require_graph_args(n, q);
  RatioGraph g{n, {}, PowerKind{q, E}};
  for (unsigned e = 1;; ++e) {
    const auto qe = q.power(e, n);
    if (!qe) break;
    if (E.contains(e)) add_edges(g.edges, n, qe->numerator(), qe->denominator());
  }
  sort_unique(g.edges);
  return g;
}

RatioGraph build_union_graph(std::uint64_t n, const std::vector<ReducedFraction>& qs) {
  if (n == 0) throw InvalidArgument("n must be positive");
  if (qs.empty()) throw InvalidArgument("union of an empty list of fractions");
  auto canonical = canonical_fraction_list(qs);
  for (const auto& q : canonical)
    if (q.is_diagonal()) throw InvalidArgument("the diagonal fraction 1/1 has no ratio graph");
  RatioGraph g{n, {}, UnionKind{canonical}};
  for (const auto& q : canonical) add_edges(g.edges, n, q.numerator(), q.denominator());
  sort_unique(g.edges);
  return g;
}

bool is_directed_path(const Component& comp) {
  const std::size_t m = comp.vertices.size();
  if (comp.edges.size() + 1 != m) return false;
  std::map<std::uint64_t, std::uint64_t> next;
  std::map<std::uint64_t, int> in_degree;
  for (const auto& [u, v] : comp.edges) {
    if (!next.emplace(u, v).second) return false;
    if (++in_degree[v] > 1) return false;
  }
  // Exactly one source; following successors must visit every vertex.
  std::uint64_t start = 0;
  int sources = 0;
  for (auto v : comp.vertices)
    if (!in_degree.count(v)) {
      start = v;
      ++sources;
    }
  if (sources != 1) return false;
  std::size_t visited = 1;
  for (auto it = next.find(start); it != next.end(); it = next.find(it->second)) ++visited;
  return visited == m;
}

ComponentDecomposition components(const RatioGraph& g) {
  DisjointSets sets(g.n + 1);
  for (const auto& [u, v] : g.edges) sets.unite(u, v);

  ComponentDecomposition out;
  std::vector<std::size_t> slot(g.n + 1, SIZE_MAX);  // root -> component index
  for (std::uint64_t v = 1; v <= g.n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.components.size();
      out.components.emplace_back();
    }
    out.components[slot[root]].vertices.push_back(v);
  }
  for (const auto& e : g.edges) out.components[slot[sets.find(e.first)]].edges.push_back(e);

  std::size_t largest = 0;
  for (const auto& comp : out.components) largest = std::max(largest, comp.vertices.size());
  out.k = largest;

  const auto* single = std::get_if<SingleKind>(&g.kind);
  if (single) out.k = std::max<std::size_t>(out.k, floor_log(g.n, single->q.denominator()) + 1);

  out.c.assign(out.k, 0);
  for (const auto& comp : out.components) ++out.c[comp.vertices.size() - 1];
  if (!single) return out;

  // Directed paths of i vertices: a path component of L vertices holds L - i + 1.
  out.d.assign(out.k, 0);
  for (const auto& comp : out.components) {
    if (!is_directed_path(comp)) {
      out.closed_forms_hold = false;
      continue;
    }
    const std::size_t len = comp.vertices.size();
    for (std::size_t i = 1; i <= len; ++i) out.d[i - 1] += len - i + 1;
  }

  const std::uint64_t s = single->q.denominator();
  auto d_at = [&](std::size_t i) -> std::int64_t { return i <= out.k ? static_cast<std::int64_t>(out.d[i - 1]) : 0; };
  auto c_at = [&](std::size_t i) -> std::int64_t { return static_cast<std::int64_t>(out.count_of_size(i)); };
  std::uint64_t expected_d = g.n;
  std::uint64_t vertex_total = 0;
  for (std::size_t i = 1; i <= out.k; ++i) {
    if (static_cast<std::uint64_t>(d_at(i)) != expected_d) out.closed_forms_hold = false;
    expected_d /= s;
    if (c_at(i) != d_at(i) - 2 * d_at(i + 1) + d_at(i + 2)) out.closed_forms_hold = false;
    std::int64_t weighted = 0;
    for (std::size_t j = i; j <= out.k; ++j) weighted += static_cast<std::int64_t>(j - i + 1) * c_at(j);
    if (weighted != d_at(i)) out.closed_forms_hold = false;
    vertex_total += i * out.count_of_size(i);
  }
  if (vertex_total != g.n) out.closed_forms_hold = false;
  return out;
}

namespace {

// Edge masks over the component's vertices relabeled 0..m-1 in ascending order.
std::vector<std::uint64_t> local_masks(const Component& comp) {
  if (comp.vertices.size() > kMaxDpVertices)
    throw CapabilityError("component of " + std::to_string(comp.vertices.size()) +
                          " vertices exceeds the exact limit of " + std::to_string(kMaxDpVertices) +
                          "; use Monte Carlo instead");
  auto local = [&](std::uint64_t v) {
    return static_cast<unsigned>(std::lower_bound(comp.vertices.begin(), comp.vertices.end(), v) -
                                 comp.vertices.begin());
  };
  std::vector<std::uint64_t> masks;
  masks.reserve(comp.edges.size());
  for (const auto& [u, v] : comp.edges) masks.push_back((std::uint64_t{1} << local(u)) | (std::uint64_t{1} << local(v)));
  std::sort(masks.begin(), masks.end());
  return masks;
}

}  // namespace

Rational independence_probability(const Component& comp, const Rational& alpha) {
  const auto masks = local_masks(comp);
  return no_constraint_selected(masks, comp.vertices.size(), alpha);
}

double independence_probability(const Component& comp, double alpha) {
  const auto masks = local_masks(comp);
  return no_constraint_selected(masks, comp.vertices.size(), alpha);
}

ProbabilityValue prob_any_of(std::uint64_t n, const std::vector<ReducedFraction>& qs, const AlphaParam& alpha) {
  const auto graph = build_union_graph(n, qs);
  const auto decomposition = components(graph);

  // Components with identical relabeled edge sets share one evaluation.
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::uint64_t> shapes;
  for (const auto& comp : decomposition.components) {
    if (comp.edges.empty()) continue;
    ++shapes[{comp.vertices.size(), local_masks(comp)}];
  }

  if (alpha.is_exact()) {
    Rational none = 1;
    for (const auto& [shape, count] : shapes)
      none *= pow(no_constraint_selected(shape.second, shape.first, alpha.rational()), count);
    return ProbabilityValue::exact(1 - none, Provenance::component_product);
  }
  double log_none = 0.0;
  for (const auto& [shape, count] : shapes)
    log_none += static_cast<double>(count) * std::log(no_constraint_selected(shape.second, shape.first, alpha.value()));
  return ProbabilityValue::from_log_complement(log_none, Provenance::component_product);
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::dot;
  if (text == "json") return ExportFormat::json;
  throw InvalidArgument("unknown graph format '" + std::string(text) + "' (expected dot or json)");
}

std::string export_graph(const RatioGraph& g, ExportFormat format) {
  if (format == ExportFormat::json) {
    nlohmann::ordered_json j;
    j["name"] = g.describe();
    j["n"] = g.n;
    auto vertices = nlohmann::ordered_json::array();
    for (std::uint64_t v = 1; v <= g.n; ++v) vertices.push_back(v);
    j["vertices"] = std::move(vertices);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << "digraph \"" << g.describe() << "\" {\n";
  for (std::uint64_t v = 1; v <= g.n; ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ratioset
