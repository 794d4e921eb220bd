#include "ratioset/exact_prob.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "ratioset/disjoint_sets.hpp"
#include "ratioset/errors.hpp"
#include "ratioset/recurrences.hpp"

namespace ratioset {

namespace {

/// Neumaier summation of `terms` taken in the given order.
double compensated_sum(const std::vector<double>& terms) {
  double sum = 0.0, carry = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t))
      carry += (sum - next) + t;
    else
      carry += (t - next) + sum;
    sum = next;
  }
  return sum + carry;
}

// Level multiplicities floor(n / s^i), i = 1..floor(log_s n).
std::vector<std::uint64_t> level_counts(std::uint64_t n, std::uint64_t s) {
  std::vector<std::uint64_t> counts;
  for (std::uint64_t m = n / s; m > 0; m /= s) counts.push_back(m);
  return counts;
}

ProbabilityValue exact_product(const std::vector<std::uint64_t>& counts, const std::vector<Rational>& betas) {
  Rational complement = 1;
  for (std::size_t i = 1; i <= counts.size(); ++i) {
    const Rational g = betas[i - 1] * betas[i + 1] / (betas[i] * betas[i]);
    complement *= pow(g, counts[i - 1]);
  }
  return ProbabilityValue::exact(1 - complement, Provenance::formula);
}

ProbabilityValue log_space_product(const std::vector<std::uint64_t>& counts, const std::vector<double>& log_gammas) {
  std::vector<double> terms;
  for (std::size_t i = counts.size(); i >= 1; --i)
    terms.push_back(static_cast<double>(counts[i - 1]) * log_gammas[i - 1]);
  return ProbabilityValue::from_log_complement(compensated_sum(terms), Provenance::formula);
}

ProbabilityValue diagonal(std::uint64_t n, const AlphaParam& alpha) {
  if (alpha.is_exact()) return ProbabilityValue::exact(1 - pow(Rational(1 - alpha.rational()), n), Provenance::formula);
  return ProbabilityValue::from_log_complement(static_cast<double>(n) * std::log1p(-alpha.value()),
                                               Provenance::formula);
}

void require_n(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("n must be positive");
}

}  // namespace

ProbabilityValue prob_in_ratio_set(std::uint64_t n, const ReducedFraction& q, const AlphaParam& alpha) {
  require_n(n);
  if (q.is_diagonal()) return diagonal(n, alpha);
  const auto counts = level_counts(n, q.denominator());
  if (alpha.is_exact()) return exact_product(counts, beta_table(counts.size() + 1, alpha.rational()));
  return log_space_product(counts, log_gamma_table(counts.size(), alpha));
}

ProbabilityValue prob_in_ratio_set_powers(std::uint64_t n, const ReducedFraction& q, const ExponentSet& E,
                                          const AlphaParam& alpha) {
  require_n(n);
  if (q.is_diagonal()) throw InvalidArgument("powers of the diagonal fraction 1/1 are not supported");
  const auto counts = level_counts(n, q.denominator());
  if (alpha.is_exact()) return exact_product(counts, beta_E_table(E, counts.size() + 1, alpha.rational()));
  if (E == ExponentSet::finite({1})) return prob_in_ratio_set(n, q, alpha);

  const auto betas = beta_E_table(E, counts.size() + 1, alpha.value());
  std::vector<double> log_gammas;
  for (std::size_t i = 1; i <= counts.size(); ++i) {
    // beta_{i-1} beta_{i+1} - beta_i^2 with the square split exactly.
    const double sq = betas[i] * betas[i];
    const double sq_err = std::fma(betas[i], betas[i], -sq);
    const double det = std::fma(betas[i - 1], betas[i + 1], -sq) - sq_err;
    log_gammas.push_back(std::log1p(det / sq));
  }
  return log_space_product(counts, log_gammas);
}

namespace {

void require_brute_force_n(std::uint64_t n) {
  require_n(n);
  if (n > kMaxBruteForceN)
    throw InvalidArgument("brute-force events are limited to n <= " + std::to_string(kMaxBruteForceN));
}

void finish(MembershipEvent& event) {
  for (auto& h : event.hyperedges) {
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
  }
  std::sort(event.hyperedges.begin(), event.hyperedges.end());
  event.hyperedges.erase(std::unique(event.hyperedges.begin(), event.hyperedges.end()), event.hyperedges.end());
}

// Pairs a <= b in {1..n} with a * den == b * num.
void add_ratio_pairs(MembershipEvent& event, unsigned __int128 num, unsigned __int128 den) {
  for (std::uint64_t a = 1; a <= event.n; ++a)
    for (std::uint64_t b = a; b <= event.n; ++b)
      if (static_cast<unsigned __int128>(a) * den == static_cast<unsigned __int128>(b) * num)
        event.hyperedges.push_back({a, b});
}

}  // namespace

MembershipEvent ratio_event(std::uint64_t n, const ReducedFraction& q) {
  require_brute_force_n(n);
  MembershipEvent event{n, {}};
  add_ratio_pairs(event, q.numerator(), q.denominator());
  finish(event);
  return event;
}

MembershipEvent powers_event(std::uint64_t n, const ReducedFraction& q, const ExponentSet& E) {
  require_brute_force_n(n);
  if (q.is_diagonal()) throw InvalidArgument("powers of the diagonal fraction 1/1 are not supported");
  MembershipEvent event{n, {}};
  unsigned __int128 num = q.numerator(), den = q.denominator();
  // Exponents past s^e > n cannot produce a pair inside {1..n}.
  for (std::uint64_t e = 1; den <= n; ++e, num *= q.numerator(), den *= q.denominator())
    if (E.contains(e)) add_ratio_pairs(event, num, den);
  finish(event);
  return event;
}

MembershipEvent any_of_event(std::uint64_t n, const std::vector<ReducedFraction>& qs) {
  require_brute_force_n(n);
  MembershipEvent event{n, {}};
  for (const auto& q : qs) add_ratio_pairs(event, q.numerator(), q.denominator());
  finish(event);
  return event;
}

MembershipEvent direction_event(std::uint64_t n, const std::vector<std::uint64_t>& coords) {
  require_brute_force_n(n);
  if (coords.size() < 2) throw InvalidArgument("directions need at least two coordinates");
  if (std::find(coords.begin(), coords.end(), 0) != coords.end())
    throw InvalidArgument("direction coordinates must be positive");
  MembershipEvent event{n, {}};
  for (std::uint64_t a1 = 1; a1 <= n; ++a1) {
    std::vector<std::uint64_t> tuple{a1};
    for (std::size_t j = 1; j < coords.size(); ++j) {
      // a_j with a_j * x_1 == a_1 * x_j
      for (std::uint64_t aj = 1; aj <= n; ++aj)
        if (static_cast<unsigned __int128>(aj) * coords[0] == static_cast<unsigned __int128>(a1) * coords[j]) {
          tuple.push_back(aj);
          break;
        }
      if (tuple.size() != j + 1) break;
    }
    if (tuple.size() == coords.size()) event.hyperedges.push_back(tuple);
  }
  finish(event);
  return event;
}

ProbabilityValue prob_bruteforce(const MembershipEvent& event, const AlphaParam& alpha) {
  require_brute_force_n(event.n);
  DisjointSets sets(event.n + 1);
  for (const auto& h : event.hyperedges)
    for (std::size_t k = 1; k < h.size(); ++k) sets.unite(h[0], h[k]);

  std::map<std::size_t, std::vector<std::uint64_t>> members;  // root -> vertices
  for (const auto& h : event.hyperedges)
    for (auto v : h) members[sets.find(v)].push_back(v);
  std::map<std::size_t, std::vector<const std::vector<std::uint64_t>*>> edges_of;
  for (const auto& h : event.hyperedges) edges_of[sets.find(h[0])].push_back(&h);

  const Rational& a = alpha.rational();
  const Rational q = 1 - a;
  Rational none = 1;
  for (auto& [root, verts] : members) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() > kMaxEnumeratedComponent)
      throw CapabilityError("component of " + std::to_string(verts.size()) + " vertices is too large to enumerate");
    std::vector<std::uint32_t> masks;
    for (const auto* h : edges_of[root]) {
      std::uint32_t m = 0;
      for (auto v : *h)
        m |= std::uint32_t{1} << (std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
      masks.push_back(m);
    }
    std::vector<std::uint64_t> by_size(verts.size() + 1, 0);
    const std::uint32_t limit = std::uint32_t{1} << verts.size();
    for (std::uint32_t subset = 0; subset < limit; ++subset) {
      bool clear = true;
      for (auto m : masks)
        if ((subset & m) == m) {
          clear = false;
          break;
        }
      if (clear) ++by_size[static_cast<std::size_t>(std::popcount(subset))];
    }
    Rational component = 0;
    for (std::size_t k = 0; k < by_size.size(); ++k)
      if (by_size[k]) component += Rational(by_size[k]) * pow(a, k) * pow(q, verts.size() - k);
    none *= component;
  }
  return ProbabilityValue::exact(1 - none, Provenance::brute_force);
}

}  // namespace ratioset
