#include "doctest.h"

#include <cmath>
#include <numeric>
#include <set>

#include "ratioset/errors.hpp"
#include "ratioset/exact_prob.hpp"
#include "ratioset/monte_carlo.hpp"

using namespace ratioset;

TEST_CASE("sample_set: determinism and distribution") {
  const auto a = sample_set(1000, 0.5, 7, 3);
  const auto b = sample_set(1000, 0.5, 7, 3);
  CHECK(a.members() == b.members());
  CHECK(a.members() != sample_set(1000, 0.5, 7, 4).members());
  CHECK(a.members() != sample_set(1000, 0.5, 8, 3).members());
  CHECK(sample_set(200, 0.999999, 1, 0).size() >= 199);

  const double sd = std::sqrt(10000 * 0.25);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto s = sample_set(10000, 0.5, seed, 0);
    CHECK(std::abs(static_cast<double>(s.size()) - 5000.0) <= 4 * sd);
  }
  double total = 0;
  for (std::uint64_t t = 0; t < 200; ++t) total += static_cast<double>(sample_set(500, 0.3, 11, t).size());
  CHECK(total / 200 == doctest::Approx(150).epsilon(0.02));
}

TEST_CASE("ratio_set_contains: examples and scan agreement") {
  CHECK_FALSE(ratio_set_contains(RandomSetSample(10, std::vector<std::uint64_t>{}), ReducedFraction(2, 3)));
  CHECK(ratio_set_contains(RandomSetSample(10, {2, 3}), ReducedFraction(2, 3)));
  CHECK(ratio_set_contains(RandomSetSample(10, {4, 6, 9}), ReducedFraction(2, 3)));
  CHECK_FALSE(ratio_set_contains(RandomSetSample(10, {4, 9}), ReducedFraction(2, 3)));
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    const auto A = sample_set(40, 0.25, 5, trial);
    std::set<std::pair<std::uint64_t, std::uint64_t>> ratios;
    for (auto a : A.members())
      for (auto b : A.members()) ratios.insert({a / std::gcd(a, b), b / std::gcd(a, b)});
    for (std::uint64_t s = 1; s <= 12; ++s)
      for (std::uint64_t r = 1; r <= s; ++r) {
        if (std::gcd(r, s) != 1) continue;
        CHECK(ratio_set_contains(A, ReducedFraction(r, s)) == (ratios.count({r, s}) > 0));
      }
    CHECK(ratio_set_cardinality(A) == ratios.size());
  }
}

TEST_CASE("ratio_set_cardinality: examples") {
  CHECK(ratio_set_cardinality(RandomSetSample(5, {1})) == 1);
  CHECK(ratio_set_cardinality(RandomSetSample(5, {1, 2})) == 3);
  CHECK(ratio_set_cardinality(RandomSetSample(5, {2, 3, 4})) == 7);
  CHECK(ratio_set_cardinality(RandomSetSample(5, std::vector<std::uint64_t>{})) == 0);
}

TEST_CASE("mc_estimate: agrees with exact targets") {
  const double target = prob_in_ratio_set(30, ReducedFraction(2, 3), AlphaParam::exact(1, 2)).value();
  McConfig cfg;
  cfg.trials = 200000;
  cfg.seed = 3;
  cfg.target = target;
  const auto r = mc_estimate(MembershipQuery{30, ReducedFraction(2, 3)}, 0.5, cfg);
  CHECK(r.covers_target());
  REQUIRE(r.deviation.has_value());
  CHECK(*r.deviation <= 1.0);
  CHECK(r.half_width == doctest::Approx(3.89 * std::sqrt(r.estimate * (1 - r.estimate) / 200000)));

  const auto E = ExponentSet::finite({1, 2});
  const double tp = prob_in_ratio_set_powers(30, ReducedFraction(2, 3), E, AlphaParam::exact(1, 2)).value();
  cfg.target = tp;
  CHECK(mc_estimate(PowersQuery{30, ReducedFraction(2, 3), E}, 0.5, cfg).covers_target());

  const std::vector<ReducedFraction> qs{ReducedFraction(2, 3), ReducedFraction(3, 4)};
  cfg.target = prob_bruteforce(any_of_event(30, qs), AlphaParam::exact(1, 2)).value();
  CHECK(mc_estimate(AnyOfQuery{30, qs}, 0.5, cfg).covers_target());
}

TEST_CASE("mc_estimate: bit-identical across thread counts") {
  McConfig cfg;
  cfg.trials = 30000;
  cfg.seed = 42;
  std::vector<EstimateResult> runs;
  for (unsigned threads : {1u, 2u, 3u, 8u}) {
    cfg.threads = threads;
    runs.push_back(mc_estimate(DirectionQuery{40, DirectionVector({2, 3, 4})}, 0.4, cfg));
  }
  for (const auto& r : runs) {
    CHECK(r.estimate == runs[0].estimate);
    CHECK(r.half_width == runs[0].half_width);
  }
  cfg.trials = 3;
  std::vector<double> cards;
  for (unsigned threads : {1u, 3u}) {
    cfg.threads = threads;
    cards.push_back(mc_estimate(CardinalityQuery{200}, 0.5, cfg).estimate);
  }
  CHECK(cards[0] == cards[1]);
}

TEST_CASE("mc_estimate: calibration at 95% over 100 seeds") {
  const double target = prob_in_ratio_set(20, ReducedFraction(1, 2), AlphaParam::exact(1, 3)).value();
  McConfig cfg;
  cfg.trials = 2000;
  cfg.z = 1.96;
  cfg.target = target;
  int covered = 0;
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    cfg.seed = seed;
    covered += mc_estimate(MembershipQuery{20, ReducedFraction(1, 2)}, 1.0 / 3.0, cfg).covers_target();
  }
  CHECK(covered >= 90);
}

TEST_CASE("mc_estimate: input validation") {
  McConfig cfg;
  cfg.trials = 999;
  CHECK_THROWS_AS(mc_estimate(MembershipQuery{30, ReducedFraction(2, 3)}, 0.5, cfg), InvalidArgument);
  cfg.trials = 1000;
  CHECK_THROWS_AS(mc_estimate(MembershipQuery{30, ReducedFraction(2, 3)}, 1.5, cfg), InvalidArgument);
  CHECK_THROWS_AS(mc_estimate(MembershipQuery{0, ReducedFraction(2, 3)}, 0.5, cfg), InvalidArgument);
  cfg.trials = 1;
  CHECK_THROWS_AS(mc_estimate(CardinalityQuery{10}, 0.5, cfg), InvalidArgument);
}
