#include "doctest.h"

#include <cmath>
#include <numeric>

#include "ratioset/errors.hpp"
#include "ratioset/exact_prob.hpp"
#include "ratioset/recurrences.hpp"

using namespace ratioset;

namespace {
Rational R(std::int64_t p, std::int64_t q) { return make_rational(p, q); }
}  // namespace

TEST_CASE("normalize_fraction") {
  const auto a = normalize_fraction(4, 6);
  CHECK(a.fraction == ReducedFraction(2, 3));
  CHECK(a.common_divisor == 2);
  CHECK_FALSE(a.inverted);
  const auto b = normalize_fraction(9, 6);
  CHECK(b.fraction == ReducedFraction(2, 3));
  CHECK(b.inverted);
  CHECK(normalize_fraction(5, 5).fraction.is_diagonal());
  CHECK_THROWS_AS(ReducedFraction(4, 6), InvalidArgument);
  CHECK_THROWS_AS(ReducedFraction(3, 2), InvalidArgument);
  CHECK_THROWS_AS(normalize_fraction(0, 3), InvalidArgument);
}

TEST_CASE("floor_log uses integer arithmetic") {
  CHECK(floor_log(243, 3) == 5);
  CHECK(floor_log(242, 3) == 4);
  CHECK(floor_log(1000, 10) == 3);
  CHECK(floor_log(999, 10) == 2);
  CHECK(floor_log(UINT64_MAX, 2) == 63);
  CHECK(floor_log(1, 7) == 0);
  CHECK(checked_power(10, 19, UINT64_MAX).has_value());
  CHECK_FALSE(checked_power(10, 20, UINT64_MAX).has_value());
}

TEST_CASE("prob_in_ratio_set: examples") {
  const auto half = AlphaParam::exact(1, 2);
  CHECK(prob_in_ratio_set(30, ReducedFraction(2, 3), half).exact_value() == R(15169, 16384));
  CHECK(prob_in_ratio_set(30, ReducedFraction(2, 7), half).exact_value() == R(175, 256));
  for (int k = 1; k <= 9; ++k) {
    const auto a = AlphaParam::exact(k, 10);
    const Rational x = a.rational();
    CHECK(prob_in_ratio_set(30, ReducedFraction(2, 7), a).exact_value() == 1 - pow(1 - x * x, 4));
    CHECK(prob_in_ratio_set(2, ReducedFraction(1, 3), a).exact_value() == 0);
    CHECK(prob_in_ratio_set(17, ReducedFraction(1, 1), a).exact_value() == 1 - pow(1 - x, 17));
  }
  CHECK(prob_in_ratio_set(30, ReducedFraction(2, 3), half).provenance() == Provenance::formula);
}

TEST_CASE("prob_in_ratio_set: equals brute force for n <= 30, s <= 7") {
  for (const auto& alpha : {AlphaParam::exact(1, 4), AlphaParam::exact(1, 2), AlphaParam::exact(3, 4)})
    for (std::uint64_t n = 1; n <= 30; ++n)
      for (std::uint64_t s = 2; s <= 7; ++s)
        for (std::uint64_t r = 1; r < s; ++r) {
          if (std::gcd(r, s) != 1) continue;
          const ReducedFraction q(r, s);
          const auto brute = prob_bruteforce(ratio_event(n, q), alpha);
          CHECK(prob_in_ratio_set(n, q, alpha).exact_value() == brute.exact_value());
          CHECK(brute.provenance() == Provenance::brute_force);
        }
}

TEST_CASE("prob_in_ratio_set: single-term collapse when s^2 > n") {
  const auto alpha = AlphaParam::exact(2, 5);
  const Rational x = alpha.rational();
  for (std::uint64_t n = 1; n <= 1000; n += 37)
    for (std::uint64_t s = 2; s <= 40; ++s) {
      if (s * s <= n) continue;
      const auto p = prob_in_ratio_set(n, ReducedFraction(1, s), alpha).exact_value();
      CHECK(p == 1 - pow(1 - x * x, n / s));
    }
}

TEST_CASE("prob_in_ratio_set: inversion symmetry through normalization") {
  const auto alpha = AlphaParam::exact(1, 3);
  const auto a = prob_in_ratio_set(100, normalize_fraction(6, 4).fraction, alpha).exact_value();
  const auto b = prob_in_ratio_set(100, normalize_fraction(2, 3).fraction, alpha).exact_value();
  CHECK(a == b);
}

TEST_CASE("prob_in_ratio_set: monotone in n and alpha") {
  const ReducedFraction q(2, 3);
  Rational prev = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto p = prob_in_ratio_set(n, q, AlphaParam::exact(1, 3)).exact_value();
    CHECK(p >= prev);
    prev = p;
  }
  prev = 0;
  for (int k = 1; k <= 9; ++k) {
    const auto p = prob_in_ratio_set(100, q, AlphaParam::exact(k, 10)).exact_value();
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("prob_in_ratio_set: float mode agrees with exact and scales") {
  for (std::uint64_t n : {1u, 10u, 300u, 5000u})
    for (std::uint64_t s : {2u, 3u, 7u}) {
      const ReducedFraction q(1, s);
      const auto e = prob_in_ratio_set(n, q, AlphaParam::exact(1, 2));
      const auto f = prob_in_ratio_set(n, q, AlphaParam::floating(0.5));
      CHECK_FALSE(f.is_exact());
      if (e.exact_value() == 0) {
        CHECK(f.value() == 0.0);
        continue;
      }
      CHECK(f.log_complement() == doctest::Approx(log_of(Rational(1 - e.exact_value()))).epsilon(1e-12));
    }
  const auto big = prob_in_ratio_set(1000000000000ULL, ReducedFraction(2, 3), AlphaParam::floating(0.5));
  CHECK(std::isfinite(big.log_complement()));
  CHECK(big.log_complement() < -1e9);
  CHECK(big.value() == 1.0);
}

TEST_CASE("prob_in_ratio_set_powers: examples") {
  const auto half = AlphaParam::exact(1, 2);
  CHECK(prob_in_ratio_set_powers(30, ReducedFraction(2, 7), ExponentSet::all(), half).exact_value() == R(175, 256));
  const auto E = ExponentSet::finite({1, 2});
  Rational product = 1;
  for (std::size_t i = 1; i <= 3; ++i) product *= pow(gamma_E(E, i, R(1, 2)), 30 / static_cast<std::uint64_t>(std::pow(3, i)));
  const auto p = prob_in_ratio_set_powers(30, ReducedFraction(2, 3), E, half).exact_value();
  CHECK(p == 1 - product);
  CHECK(p == prob_bruteforce(powers_event(30, ReducedFraction(2, 3), E), half).exact_value());
  CHECK_THROWS_AS(prob_in_ratio_set_powers(30, ReducedFraction(1, 1), E, half), InvalidArgument);
}

TEST_CASE("prob_in_ratio_set_powers: E = {1} collapses") {
  const auto alpha = AlphaParam::exact(3, 7);
  for (std::uint64_t n = 1; n <= 100; n += 3)
    for (std::uint64_t s = 2; s <= 10; ++s)
      for (std::uint64_t r = 1; r < s; r += 2) {
        if (std::gcd(r, s) != 1) continue;
        const ReducedFraction q(r, s);
        CHECK(prob_in_ratio_set_powers(n, q, ExponentSet::finite({1}), alpha).exact_value() ==
              prob_in_ratio_set(n, q, alpha).exact_value());
      }
}

TEST_CASE("prob_in_ratio_set_powers: equals brute force") {
  const auto alpha = AlphaParam::exact(2, 5);
  for (const auto& E : {ExponentSet::finite({1, 2}), ExponentSet::finite({1, 3}), ExponentSet::all(),
                        ExponentSet::cofinite({2})})
    for (std::uint64_t n : {8u, 16u, 27u, 30u})
      for (const auto& q : {ReducedFraction(1, 2), ReducedFraction(2, 3), ReducedFraction(3, 5)}) {
        const auto p = prob_in_ratio_set_powers(n, q, E, alpha).exact_value();
        CHECK(p == prob_bruteforce(powers_event(n, q, E), alpha).exact_value());
      }
}

TEST_CASE("prob_in_ratio_set_powers: float agrees with exact") {
  const auto E = ExponentSet::finite({1, 3});
  for (std::uint64_t n : {50u, 400u, 3000u}) {
    const auto e = prob_in_ratio_set_powers(n, ReducedFraction(1, 2), E, AlphaParam::exact(1, 3));
    const auto f = prob_in_ratio_set_powers(n, ReducedFraction(1, 2), E, AlphaParam::floating(1.0 / 3.0));
    CHECK(f.log_complement() == doctest::Approx(log_of(Rational(1 - e.exact_value()))).epsilon(1e-10));
  }
}

TEST_CASE("prob_bruteforce: examples and limits") {
  const auto half = AlphaParam::exact(1, 2);
  const Rational h = R(1, 2);
  CHECK(prob_bruteforce(ratio_event(10, ReducedFraction(1, 2)), half).exact_value() ==
        1 - beta(4, h) * beta(2, h) * beta(2, h));
  CHECK(prob_bruteforce(ratio_event(1, ReducedFraction(1, 2)), half).exact_value() == 0);
  CHECK(prob_bruteforce(ratio_event(30, ReducedFraction(2, 3)), half).exact_value() == R(15169, 16384));
  CHECK_THROWS_AS(prob_bruteforce(ratio_event(31, ReducedFraction(2, 3)), half), InvalidArgument);
  // Decimal alphas are evaluated from their exact binary value.
  CHECK(prob_bruteforce(ratio_event(30, ReducedFraction(2, 3)), AlphaParam::floating(0.5)).is_exact());
}

TEST_CASE("membership events") {
  const auto ev = ratio_event(30, ReducedFraction(2, 3));
  CHECK(ev.hyperedges.size() == 10);
  const auto pw = powers_event(30, ReducedFraction(2, 3), ExponentSet::finite({1, 2}));
  CHECK(pw.hyperedges.size() == 13);
  const auto dir = direction_event(28, {2, 3, 4});
  CHECK(dir.hyperedges.size() == 7);
  const auto any = any_of_event(30, {ReducedFraction(2, 3), ReducedFraction(3, 4)});
  CHECK(any.hyperedges.size() == 17);
}
