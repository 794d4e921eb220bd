#include "ratioset/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "ratioset/errors.hpp"

namespace ratioset {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t trial, std::uint64_t element) {
  std::uint64_t h = mix(seed + kGolden);
  h = mix(h ^ (trial * 0xD6E8FEB86659FD93ULL + kGolden));
  return mix(h ^ (element * 0xCA5A826395121157ULL + kGolden));
}

RandomSetSample::RandomSetSample(std::uint64_t n, double alpha, std::uint64_t seed, std::uint64_t trial_index)
    : n_(n), bits_(n, 0) {
  if (n == 0) throw InvalidArgument("n must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie strictly between 0 and 1");
  // Top 53 bits as a uniform double in [0, 1); the comparison is exact.
  constexpr double kScale = 1.0 / 9007199254740992.0;
  for (std::uint64_t v = 1; v <= n; ++v)
    bits_[v - 1] = static_cast<double>(counter_hash(seed, trial_index, v) >> 11) * kScale < alpha;
}

RandomSetSample::RandomSetSample(std::uint64_t n, const std::vector<std::uint64_t>& members) : n_(n), bits_(n, 0) {
  for (auto v : members) {
    if (v < 1 || v > n) throw InvalidArgument("set member outside {1..n}");
    bits_[v - 1] = 1;
  }
}

std::uint64_t RandomSetSample::size() const {
  return static_cast<std::uint64_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::uint64_t> RandomSetSample::members() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 1; v <= n_; ++v)
    if (bits_[v - 1]) out.push_back(v);
  return out;
}

RandomSetSample sample_set(std::uint64_t n, double alpha, std::uint64_t seed, std::uint64_t trial_index) {
  return RandomSetSample(n, alpha, seed, trial_index);
}

bool ratio_set_contains(const RandomSetSample& A, const ReducedFraction& q) {
  const std::uint64_t r = q.numerator(), s = q.denominator();
  for (std::uint64_t t = 1; t <= A.n() / s; ++t)
    if (A.contains(r * t) && A.contains(s * t)) return true;
  return false;
}

std::uint64_t ratio_set_cardinality(const RandomSetSample& A) {
  const auto members = A.members();
  const std::uint64_t n = A.n();
  // (a/g, b/g) indexes an n x n bitmap; no floating ratios involved.
  std::vector<bool> seen(n * n, false);
  std::uint64_t distinct = 0;
  for (auto a : members)
    for (auto b : members) {
      const std::uint64_t g = std::gcd(a, b);
      const std::uint64_t slot = (a / g - 1) * n + (b / g - 1);
      if (!seen[slot]) {
        seen[slot] = true;
        ++distinct;
      }
    }
  return distinct;
}

namespace {

std::uint64_t query_n(const McEvent& event) {
  return std::visit([](const auto& q) { return q.n; }, event);
}

void validate(const McEvent& event) {
  if (query_n(event) == 0) throw InvalidArgument("n must be positive");
  if (const auto* p = std::get_if<PowersQuery>(&event); p && p->q.is_diagonal())
    throw InvalidArgument("powers of the diagonal fraction 1/1 are not supported");
  if (const auto* a = std::get_if<AnyOfQuery>(&event); a && a->qs.empty())
    throw InvalidArgument("any-of event needs at least one fraction");
}

bool powers_hit(const RandomSetSample& A, const PowersQuery& p) {
  for (unsigned e = 1;; ++e) {
    const auto qe = p.q.power(e, A.n());
    if (!qe) return false;
    if (p.E.contains(e) && ratio_set_contains(A, *qe)) return true;
  }
}

bool direction_hit(const RandomSetSample& A, const DirectionVector& xs) {
  const auto prim = xs.primitive();
  for (std::uint64_t t = 1; t <= A.n() / prim.max_coord(); ++t) {
    bool all = true;
    for (auto x : prim.coords())
      if (!A.contains(x * t)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

// Value of one trial: an indicator for membership-type events, |A/A|/n^2
// for the cardinality event.
double trial_value(const McEvent& event, const RandomSetSample& A) {
  return std::visit(
      [&](const auto& q) -> double {
        using Q = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<Q, MembershipQuery>) {
          if (q.q.is_diagonal()) return A.size() > 0;
          return ratio_set_contains(A, q.q);
        } else if constexpr (std::is_same_v<Q, PowersQuery>) {
          return powers_hit(A, q);
        } else if constexpr (std::is_same_v<Q, AnyOfQuery>) {
          for (const auto& f : q.qs)
            if (f.is_diagonal() ? A.size() > 0 : ratio_set_contains(A, f)) return 1.0;
          return 0.0;
        } else if constexpr (std::is_same_v<Q, DirectionQuery>) {
          return direction_hit(A, q.xs);
        } else {
          const double n = static_cast<double>(q.n);
          return static_cast<double>(ratio_set_cardinality(A)) / (n * n);
        }
      },
      event);
}

constexpr std::uint64_t kChunk = 4096;

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

EstimateResult mc_estimate(const McEvent& event, double alpha, const McConfig& config) {
  validate(event);
  const bool cardinality = std::holds_alternative<CardinalityQuery>(event);
  if (!cardinality && config.trials < 1000) throw InvalidArgument("Monte Carlo estimates need at least 1000 trials");
  if (cardinality && config.trials < 2) throw InvalidArgument("cardinality estimates need at least 2 trials");
  if (!(config.z > 0.0)) throw InvalidArgument("confidence quantile must be positive");
  const std::uint64_t n = query_n(event);

  const std::uint64_t chunk_size = cardinality ? 1 : kChunk;
  const std::uint64_t chunk_count = (config.trials + chunk_size - 1) / chunk_size;
  std::vector<ChunkSums> chunks(chunk_count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunk_count; c = next++) {
      ChunkSums sums;
      const std::uint64_t end = std::min(config.trials, (c + 1) * chunk_size);
      for (std::uint64_t trial = c * chunk_size; trial < end; ++trial) {
        const double x = trial_value(event, RandomSetSample(n, alpha, config.seed, trial));
        sums.sum += x;
        sums.sum_sq += x * x;
      }
      chunks[c] = sums;
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunk_count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& c : chunks) {
    sum += c.sum;
    sum_sq += c.sum_sq;
  }
  const double trials = static_cast<double>(config.trials);
  EstimateResult result;
  result.estimate = sum / trials;
  result.trials = config.trials;
  result.z = config.z;
  const double variance = cardinality ? std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1.0))
                                      : result.estimate * (1.0 - result.estimate);
  result.half_width = config.z * std::sqrt(variance / trials);
  result.target = config.target;
  if (config.target) {
    const double gap = std::abs(result.estimate - *config.target);
    result.deviation = result.half_width > 0.0 ? gap / result.half_width
                                               : (gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  }
  return result;
}

}  // namespace ratioset
