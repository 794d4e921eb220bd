#include "ratioset/independence.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "ratioset/errors.hpp"

namespace ratioset {

namespace {

struct MaskListHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ v.size();
    for (auto x : v) {
      h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Keeps only inclusion-minimal constraints, sorted: a superset is implied by
// any subset it contains.
void minimize(std::vector<std::uint64_t>& cs) {
  std::sort(cs.begin(), cs.end(), [](auto a, auto b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<std::uint64_t> kept;
  for (auto c : cs) {
    bool implied = false;
    for (auto k : kept)
      if ((c & k) == k) {
        implied = true;
        break;
      }
    if (!implied) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  cs = std::move(kept);
}

template <class T>
class Solver {
 public:
  explicit Solver(const T& alpha) : alpha_(alpha), q_(1 - alpha) {}

  // Probability over the vertices touched by `cs`; untouched vertices are
  // free and contribute a factor of 1.
  T solve(std::vector<std::uint64_t> cs) {
    minimize(cs);
    if (cs.empty()) return T(1);

    // Forced exclusions: a singleton constraint {v} means v must be out.
    std::uint64_t forced = 0;
    for (auto c : cs)
      if (std::popcount(c) == 1) forced |= c;
    if (forced) {
      std::vector<std::uint64_t> rest;
      for (auto c : cs)
        if ((c & forced) == 0) rest.push_back(c);
      return power(q_, static_cast<unsigned>(std::popcount(forced))) * solve(std::move(rest));
    }

    auto pieces = split(cs);
    if (pieces.size() > 1) {
      T product = 1;
      for (auto& p : pieces) product *= solve(std::move(p));
      return product;
    }

    if (auto it = memo_.find(cs); it != memo_.end()) return it->second;

    const unsigned v = busiest_vertex(cs);
    const std::uint64_t bit = std::uint64_t{1} << v;
    std::vector<std::uint64_t> excluded, included;
    bool impossible = false;
    for (auto c : cs) {
      if ((c & bit) == 0) {
        excluded.push_back(c);
        included.push_back(c);
      } else {
        const std::uint64_t shrunk = c & ~bit;
        if (shrunk == 0) impossible = true;
        included.push_back(shrunk);
      }
    }
    T result = q_ * solve(std::move(excluded));
    if (!impossible) result += alpha_ * solve(std::move(included));
    memo_.emplace(std::move(cs), result);
    return result;
  }

 private:
  static T power(const T& base, unsigned e) {
    T r = 1;
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
  }

  static std::vector<std::vector<std::uint64_t>> split(const std::vector<std::uint64_t>& cs) {
    std::vector<std::uint64_t> cover;  // vertex union per piece
    std::vector<std::vector<std::uint64_t>> pieces;
    for (auto c : cs) {
      std::uint64_t merged = c;
      std::vector<std::uint64_t> members{c};
      for (std::size_t k = 0; k < cover.size();) {
        if (cover[k] & merged) {
          merged |= cover[k];
          members.insert(members.end(), pieces[k].begin(), pieces[k].end());
          cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(k));
          pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(k));
          k = 0;
        } else {
          ++k;
        }
      }
      cover.push_back(merged);
      pieces.push_back(std::move(members));
    }
    for (auto& p : pieces) std::sort(p.begin(), p.end());
    return pieces;
  }

  static unsigned busiest_vertex(const std::vector<std::uint64_t>& cs) {
    unsigned counts[64] = {};
    for (auto c : cs)
      for (std::uint64_t m = c; m; m &= m - 1) ++counts[std::countr_zero(m)];
    return static_cast<unsigned>(std::max_element(std::begin(counts), std::end(counts)) - std::begin(counts));
  }

  T alpha_;
  T q_;
  std::unordered_map<std::vector<std::uint64_t>, T, MaskListHash> memo_;
};

void validate(std::span<const std::uint64_t> constraints, std::size_t vertex_count, std::size_t limit) {
  if (vertex_count > limit)
    throw CapabilityError("component of " + std::to_string(vertex_count) + " vertices exceeds the exact limit of " +
                          std::to_string(limit) + "; use Monte Carlo instead");
  const std::uint64_t allowed = vertex_count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count) - 1;
  for (auto c : constraints) {
    if (c == 0) throw InvalidArgument("empty constraint set");
    if (c & ~allowed) throw InvalidArgument("constraint refers to a vertex outside the component");
  }
}

template <class T>
T run(std::span<const std::uint64_t> constraints, std::size_t vertex_count, const T& alpha) {
  validate(constraints, vertex_count, kMaxDpVertices);
  Solver<T> solver(alpha);
  return solver.solve(std::vector<std::uint64_t>(constraints.begin(), constraints.end()));
}

}  // namespace

Rational no_constraint_selected(std::span<const std::uint64_t> constraints, std::size_t vertex_count,
                                const Rational& alpha) {
  return run(constraints, vertex_count, alpha);
}

double no_constraint_selected(std::span<const std::uint64_t> constraints, std::size_t vertex_count, double alpha) {
  return run(constraints, vertex_count, alpha);
}

Rational no_constraint_selected_enumerated(std::span<const std::uint64_t> constraints, std::size_t vertex_count,
                                           const Rational& alpha) {
  validate(constraints, vertex_count, 25);
  std::vector<std::uint64_t> by_size(vertex_count + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << vertex_count;
  for (std::uint64_t subset = 0; subset < limit; ++subset) {
    bool clear = true;
    for (auto c : constraints)
      if ((subset & c) == c) {
        clear = false;
        break;
      }
    if (clear) ++by_size[static_cast<std::size_t>(std::popcount(subset))];
  }
  const Rational q = 1 - alpha;
  Rational total = 0;
  for (std::size_t k = 0; k <= vertex_count; ++k)
    if (by_size[k]) total += Rational(by_size[k]) * pow(alpha, k) * pow(q, vertex_count - k);
  return total;
}

}  // namespace ratioset
