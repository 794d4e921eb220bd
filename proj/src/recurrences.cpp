#include "ratioset/recurrences.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "ratioset/errors.hpp"

namespace ratioset {

template <class T>
std::vector<T> beta_table(std::size_t last, const T& alpha) {
  const T a = 1 - alpha;
  const T b = alpha * (1 - alpha);
  std::vector<T> table(last + 1);
  table[0] = 1;
  if (last >= 1) table[1] = 1;
  for (std::size_t i = 1; i < last; ++i) table[i + 1] = a * table[i] + b * table[i - 1];
  return table;
}

template std::vector<Rational> beta_table(std::size_t, const Rational&);
template std::vector<double> beta_table(std::size_t, const double&);

Rational beta(std::size_t i, const Rational& alpha) { return beta_table(i, alpha)[i]; }
double beta(std::size_t i, double alpha) { return beta_table(i, alpha)[i]; }

namespace {

template <class T>
T gamma_from(const std::vector<T>& table, std::size_t i) {
  return table[i - 1] * table[i + 1] / (table[i] * table[i]);
}

void require_positive_index(std::size_t i) {
  if (i == 0) throw InvalidArgument("gamma is defined for i >= 1");
}

}  // namespace

Rational gamma(std::size_t i, const Rational& alpha) {
  require_positive_index(i);
  return gamma_from(beta_table(i + 1, alpha), i);
}

double gamma(std::size_t i, double alpha) {
  require_positive_index(i);
  return gamma_from(beta_table(i + 1, alpha), i);
}

std::vector<double> log_gamma_table(std::size_t last, const AlphaParam& alpha) {
  std::vector<double> out;
  out.reserve(last);
  if (alpha.is_exact()) {
    const Rational& al = alpha.rational();
    const auto betas = beta_table(last, al);
    const Rational minus_b = -al * (1 - al);
    Rational det = -al * al;  // beta_{i-1} beta_{i+1} - beta_i^2 at i = 1
    for (std::size_t i = 1; i <= last; ++i) {
      out.push_back(log1p_of(Rational(det / (betas[i] * betas[i]))));
      det *= minus_b;
    }
    return out;
  }
  const double al = alpha.value();
  const double a = 1.0 - al;
  const double b = al * (1.0 - al);
  // ratio = beta_i / beta_{i-1}; log beta_i accumulates without underflow.
  double ratio = 1.0;
  double log_beta = 0.0;
  for (std::size_t i = 1; i <= last; ++i) {
    if (i > 1) {
      ratio = a + b / ratio;
      log_beta += std::log(ratio);
    }
    const double log_abs = 2.0 * std::log(al) + static_cast<double>(i - 1) * std::log(b) - 2.0 * log_beta;
    const double x = (i % 2 == 0 ? 1.0 : -1.0) * std::exp(log_abs);
    out.push_back(std::log1p(x));
  }
  return out;
}

double log_gamma(std::size_t i, const AlphaParam& alpha) {
  require_positive_index(i);
  return log_gamma_table(i, alpha)[i - 1];
}

namespace {

constexpr unsigned kMaxWindowBits = 30;

// Distances in E that can occur inside a string of `length` characters.
std::vector<std::uint32_t> relevant_distances(const ExponentSet& E, std::size_t length) {
  if (length < 2) return {};
  return E.members_up_to(length - 1);
}

template <class T>
std::vector<T> beta_E_finite(const ExponentSet& E, std::size_t last, const T& alpha) {
  const auto distances = relevant_distances(E, last);
  std::vector<T> table(last + 1);
  table[0] = 1;
  if (distances.empty()) {
    for (std::size_t i = 1; i <= last; ++i) table[i] = 1;
    return table;
  }
  const unsigned width = distances.back();
  if (width > kMaxWindowBits)
    throw CapabilityError("exponent window of " + std::to_string(width) + " characters is too wide for the DP");

  // Bit 0 of a state is the most recent character. A new 1 is allowed iff
  // no 1 sits e characters back, i.e. bit e-1 is clear, for every e in E.
  std::uint64_t conflict_mask = 0;
  for (auto e : distances) conflict_mask |= std::uint64_t{1} << (e - 1);
  const std::uint64_t full = (std::uint64_t{1} << width) - 1;

  // Enumerate admissible states by growing strings one character at a time;
  // every reachable state is admissible and vice versa.
  std::vector<std::uint64_t> states{0};
  std::vector<std::int64_t> index_of;  // sparse map for small widths
  const bool dense = width <= 22;
  if (dense) index_of.assign(std::size_t{1} << width, -1);
  std::unordered_map<std::uint64_t, std::size_t> sparse_index;
  auto lookup = [&](std::uint64_t s) -> std::int64_t {
    if (dense) return index_of[s];
    auto it = sparse_index.find(s);
    return it == sparse_index.end() ? -1 : static_cast<std::int64_t>(it->second);
  };
  auto insert = [&](std::uint64_t s) {
    if (dense)
      index_of[s] = static_cast<std::int64_t>(states.size());
    else
      sparse_index.emplace(s, states.size());
    states.push_back(s);
  };
  if (dense)
    index_of[0] = 0;
  else
    sparse_index.emplace(0, 0);
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::uint64_t s = states[k];
    const std::uint64_t zero = (s << 1) & full;
    if (lookup(zero) < 0) insert(zero);
    if ((s & conflict_mask) == 0) {
      const std::uint64_t one = ((s << 1) | 1) & full;
      if (lookup(one) < 0) insert(one);
    }
  }

  struct Step {
    std::size_t to_zero;
    std::int64_t to_one;  // -1 when forbidden
  };
  std::vector<Step> steps(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::uint64_t s = states[k];
    steps[k].to_zero = static_cast<std::size_t>(lookup((s << 1) & full));
    steps[k].to_one = (s & conflict_mask) == 0 ? lookup(((s << 1) | 1) & full) : -1;
  }

  const T q = 1 - alpha;
  std::vector<T> weight(states.size(), T(0)), next(states.size(), T(0));
  weight[0] = 1;
  for (std::size_t i = 1; i <= last; ++i) {
    for (auto& w : next) w = 0;
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (weight[k] == 0) continue;
      next[steps[k].to_zero] += weight[k] * q;
      if (steps[k].to_one >= 0) next[static_cast<std::size_t>(steps[k].to_one)] += weight[k] * alpha;
    }
    std::swap(weight, next);
    T total = 0;
    for (const auto& w : weight) total += w;
    table[i] = total;
  }
  return table;
}

template <class T>
T power(const T& base, std::size_t e) {
  if constexpr (std::is_same_v<T, Rational>)
    return ratioset::pow(base, e);
  else
    return std::pow(base, static_cast<double>(e));
}

template <class T>
std::vector<T> beta_E_cofinite(const ExponentSet& E, std::size_t last, const T& alpha) {
  const auto patterns = admissible_patterns(E);
  const T q = 1 - alpha;
  std::vector<T> table(last + 1);
  for (std::size_t i = 0; i <= last; ++i) {
    T total = power(q, i);
    for (const auto& p : patterns) {
      const std::size_t ones = p.offsets.size();
      if (p.span() + 1 > i) continue;
      const auto placements = static_cast<std::int64_t>(i - p.span());
      total += T(placements) * power(alpha, ones) * power(q, i - ones);
    }
    table[i] = total;
  }
  return table;
}

}  // namespace

std::vector<OnesPattern> admissible_patterns(const ExponentSet& E) {
  if (E.is_finite()) throw InvalidArgument("admissible patterns are only finite for cofinite exponent sets");
  const auto& excluded = E.listed();
  std::vector<OnesPattern> out;
  OnesPattern current{{0}};
  // Every offset is itself a distance from the first one, so it must be an
  // excluded integer; recursion walks them in increasing order.
  auto extend = [&](auto&& self, std::size_t start) -> void {
    out.push_back(current);
    for (std::size_t k = start; k < excluded.size(); ++k) {
      const std::uint32_t p = excluded[k];
      bool ok = true;
      for (auto o : current.offsets)
        if (E.contains(p - o)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.offsets.push_back(p);
      self(self, k + 1);
      current.offsets.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

template <class T>
std::vector<T> beta_E_table(const ExponentSet& E, std::size_t last, const T& alpha) {
  return E.is_finite() ? beta_E_finite(E, last, alpha) : beta_E_cofinite(E, last, alpha);
}

template std::vector<Rational> beta_E_table(const ExponentSet&, std::size_t, const Rational&);
template std::vector<double> beta_E_table(const ExponentSet&, std::size_t, const double&);

Rational beta_E(const ExponentSet& E, std::size_t i, const Rational& alpha) { return beta_E_table(E, i, alpha)[i]; }
double beta_E(const ExponentSet& E, std::size_t i, double alpha) { return beta_E_table(E, i, alpha)[i]; }

Rational gamma_E(const ExponentSet& E, std::size_t i, const Rational& alpha) {
  require_positive_index(i);
  return gamma_from(beta_E_table(E, i + 1, alpha), i);
}

double gamma_E(const ExponentSet& E, std::size_t i, double alpha) {
  require_positive_index(i);
  return gamma_from(beta_E_table(E, i + 1, alpha), i);
}

Rational beta_E_bruteforce(const ExponentSet& E, std::size_t i, const Rational& alpha) {
  if (i > kMaxBruteForceLength)
    throw InvalidArgument("brute-force enumeration is limited to strings of length " +
                          std::to_string(kMaxBruteForceLength));
  std::vector<std::uint32_t> distances;
  for (std::uint32_t e = 1; e < i; ++e)
    if (E.contains(e)) distances.push_back(e);
  std::vector<std::uint64_t> by_ones(i + 1, 0);
  const std::uint32_t limit = std::uint32_t{1} << i;
  for (std::uint32_t s = 0; s < limit; ++s) {
    bool ok = true;
    for (auto e : distances)
      if (s & (s >> e)) {
        ok = false;
        break;
      }
    if (ok) ++by_ones[static_cast<std::size_t>(std::popcount(s))];
  }
  Rational total = 0;
  const Rational q = 1 - alpha;
  for (std::size_t k = 0; k <= i; ++k)
    if (by_ones[k]) total += Rational(by_ones[k]) * pow(alpha, k) * pow(q, i - k);
  return total;
}

}  // namespace ratioset
