#include "ratioset/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "json.hpp"

#include "ratioset/disjoint_sets.hpp"
#include "ratioset/errors.hpp"
#include "ratioset/independence.hpp"

namespace ratioset {

DirectionVector::DirectionVector(std::vector<std::uint64_t> coords) : coords_(std::move(coords)), gcd_(0) {
  if (coords_.size() < 2) throw InvalidArgument("a direction needs at least two coordinates");
  for (auto x : coords_) {
    if (x == 0) throw InvalidArgument("direction coordinates must be positive");
    gcd_ = std::gcd(gcd_, x);
  }
}

std::uint64_t DirectionVector::max_coord() const { return *std::max_element(coords_.begin(), coords_.end()); }

DirectionVector DirectionVector::primitive() const {
  auto reduced = coords_;
  for (auto& x : reduced) x /= gcd_;
  return DirectionVector(std::move(reduced));
}

std::string DirectionVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? "," : "") + std::to_string(coords_[i]);
  return out + ")";
}

RatioHypergraph build_hypergraph(std::uint64_t n, const DirectionVector& xs) {
  if (n == 0) throw InvalidArgument("n must be positive");
  RatioHypergraph h{n, xs, {}};
  const std::uint64_t top = n / xs.max_coord();
  for (std::uint64_t t = 1; t <= top; ++t) {
    std::vector<std::uint64_t> edge;
    for (auto x : xs.coords()) edge.push_back(x * t);
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    h.hyperedges.push_back(std::move(edge));
  }
  return h;
}

std::vector<HyperComponent> hyper_components(const RatioHypergraph& h) {
  DisjointSets sets(h.n + 1);
  for (const auto& e : h.hyperedges)
    for (std::size_t k = 1; k < e.size(); ++k) sets.unite(e[0], e[k]);
  std::vector<bool> touched(h.n + 1, false);
  for (const auto& e : h.hyperedges)
    for (auto v : e) touched[v] = true;

  std::vector<HyperComponent> out;
  std::vector<std::size_t> slot(h.n + 1, SIZE_MAX);
  for (std::uint64_t v = 1; v <= h.n; ++v) {
    if (!touched[v]) continue;
    const auto root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].vertices.push_back(v);
  }
  for (const auto& e : h.hyperedges) out[slot[sets.find(e[0])]].hyperedges.push_back(e);
  return out;
}

DirectionHit prob_direction_hit(std::uint64_t n, const DirectionVector& xs, const AlphaParam& alpha) {
  const DirectionVector direction = xs.primitive();
  const auto h = build_hypergraph(n, direction);

  // Evaluate each distinct relabeled component once.
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::uint64_t> shapes;
  for (const auto& comp : hyper_components(h)) {
    if (comp.vertices.size() > kMaxDpVertices)
      throw CapabilityError("hypergraph component of " + std::to_string(comp.vertices.size()) +
                            " vertices exceeds the exact limit; use Monte Carlo instead");
    std::vector<std::uint64_t> masks;
    for (const auto& e : comp.hyperedges) {
      std::uint64_t m = 0;
      for (auto v : e)
        m |= std::uint64_t{1}
             << (std::lower_bound(comp.vertices.begin(), comp.vertices.end(), v) - comp.vertices.begin());
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    ++shapes[{comp.vertices.size(), std::move(masks)}];
  }

  const bool reduced = !xs.is_primitive();
  if (alpha.is_exact()) {
    Rational none = 1;
    for (const auto& [shape, count] : shapes)
      none *= pow(no_constraint_selected(shape.second, shape.first, alpha.rational()), count);
    return {ProbabilityValue::exact(1 - none, Provenance::component_product), direction, reduced};
  }
  double log_none = 0.0;
  for (const auto& [shape, count] : shapes)
    log_none += static_cast<double>(count) * std::log(no_constraint_selected(shape.second, shape.first, alpha.value()));
  return {ProbabilityValue::from_log_complement(log_none, Provenance::component_product), direction, reduced};
}

bool is_visible(const DirectionVector& point, const std::set<std::uint64_t>& A) {
  auto in_lattice = [&](std::uint64_t j, std::uint64_t g) {
    for (auto x : point.coords())
      if (!A.count(x / g * j)) return false;
    return true;
  };
  const std::uint64_t g = point.gcd();
  if (!in_lattice(g, g)) return false;
  for (std::uint64_t j = 1; j < g; ++j)
    if (in_lattice(j, g)) return false;
  return true;
}

std::string export_hypergraph_json(const RatioHypergraph& h) {
  nlohmann::ordered_json j;
  std::string name = "H(" + std::to_string(h.n);
  for (std::size_t i = 0; i < h.direction.coords().size(); ++i)
    name += (i ? "," : ";") + std::to_string(h.direction.coords()[i]);
  j["name"] = name + ")";
  j["n"] = h.n;
  j["direction"] = h.direction.coords();
  j["hyperedges"] = h.hyperedges;
  return j.dump() + "\n";
}

}  // namespace ratioset
