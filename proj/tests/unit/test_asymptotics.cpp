#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ratioset/asymptotics.hpp"
#include "ratioset/errors.hpp"
#include "ratioset/recurrences.hpp"

using namespace ratioset;

TEST_CASE("char_roots") {
  const auto r = char_roots(0.5);
  const double s5 = std::sqrt(5.0);
  CHECK(r.rho1 == doctest::Approx((1 + s5) / 4).epsilon(1e-15));
  CHECK(r.rho2 == doctest::Approx((1 - s5) / 4).epsilon(1e-15));
  CHECK(r.varrho == doctest::Approx((s5 - 1) / (s5 + 1)).epsilon(1e-15));
  CHECK(r.binet(2) == doctest::Approx(0.75).epsilon(1e-14));
  for (double a : {0.01, 0.1, 0.37, 0.5, 0.9, 0.999}) {
    const auto c = char_roots(a);
    CHECK(std::abs(c.rho1 * c.rho2 + a * (1 - a)) < 1e-12);
    CHECK(c.varrho > 0.0);
    CHECK(c.varrho < 1.0);
    for (std::size_t i = 0; i <= 60; ++i) CHECK(std::abs(c.binet(i) - beta(i, a)) <= 1e-10 * beta(i, a));
  }
  CHECK_THROWS_AS(char_roots(0.0), InvalidArgument);
}

TEST_CASE("delta_series: value at s = 10") {
  const auto d = delta_series(10, AlphaParam::exact(1, 2), 1e-8);
  CHECK(d.value == doctest::Approx(0.0277538).epsilon(1e-5));
  const auto tight = delta_series(10, AlphaParam::exact(1, 2), 1e-14);
  CHECK(std::abs(d.value - tight.value) <= d.tail_bound + 1e-16);
  // Reference from a 40-digit evaluation of the series.
  CHECK(std::abs(tight.value - 0.027753930830174054) < 1e-16);
  CHECK_THROWS_AS(delta_series(1, AlphaParam::exact(1, 2)), InvalidArgument);
}

TEST_CASE("delta_series: tail bound dominates the truncation error") {
  for (const auto& alpha : {AlphaParam::exact(1, 4), AlphaParam::exact(1, 2), AlphaParam::floating(0.8)})
    for (std::uint64_t s : {2u, 3u, 10u}) {
      const auto loose = delta_series(s, alpha, 1e-4);
      const auto tight = delta_series(s, alpha, 1e-15);
      CHECK(std::abs(loose.value - tight.value) <= loose.tail_bound * 1.0001 + 1e-15);
    }
}

TEST_CASE("delta_series: first-term dominance for large s") {
  const double first = -std::log(0.75);
  double prev_err = 1.0;
  for (std::uint64_t s : {10u, 100u, 1000u, 10000u}) {
    const double ratio = delta_series(s, AlphaParam::exact(1, 2)).value * static_cast<double>(s) / first;
    const double err = std::abs(ratio - 1.0);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-3);
}

TEST_CASE("delta_series: partial sums bracket the limit") {
  const auto alpha = AlphaParam::exact(1, 3);
  const auto logs = log_gamma_table(20, alpha);
  const double limit = delta_series(3, alpha, 1e-15).value;
  double sum = 0.0, w = 1.0;
  for (std::size_t i = 1; i <= 20; ++i) {
    w /= 3.0;
    sum -= logs[i - 1] * w;
    if (i % 2 == 1) CHECK(sum >= limit - 1e-15);
    else CHECK(sum <= limit + 1e-15);
  }
}

TEST_CASE("check_corollary") {
  const auto grid = log_spaced_grid(100, 1000000, 8);
  CHECK(grid.front() == 100);
  CHECK(grid.back() == 1000000);
  const auto c = check_corollary(grid, 3, AlphaParam::exact(1, 2));
  CHECK(c.bounded_without_trend);
  CHECK(c.max_deviation < c.bound);

  // s^2 > n: single-term deviation.
  const double l = -std::log(0.75);
  const std::vector<std::uint64_t> small{50, 61, 77, 99};
  const auto single = check_corollary(small, 10, AlphaParam::exact(1, 2));
  for (std::size_t k = 0; k < small.size(); ++k) {
    const double n = static_cast<double>(small[k]);
    const double delta = delta_series(10, AlphaParam::exact(1, 2), 1e-14).value;
    CHECK(single.deviations[k] == doctest::Approx(std::abs(std::floor(n / 10) * l - delta * n)).epsilon(1e-9));
  }
  const std::vector<std::uint64_t> powers{9, 27, 81, 243, 729, 2187, 6561, 19683, 59049, 177147, 531441};
  CHECK(check_corollary(powers, 3, AlphaParam::exact(1, 4)).bounded_without_trend);
}

TEST_CASE("check_alternating") {
  const auto half = check_alternating(AlphaParam::exact(1, 2), 40);
  CHECK(half.passed());
  CHECK(half.values[0] == doctest::Approx(4.0 / 3.0));
  CHECK(half.values[1] == doctest::Approx(10.0 / 9.0));
  CHECK(half.values[2] == doctest::Approx(25.0 / 24.0));
  CHECK(check_alternating(AlphaParam::exact(1, 4), 40).passed());
  const double varrho = char_roots(0.5).varrho;
  for (std::size_t i = 1; i <= 40; ++i) CHECK(half.values[i - 1] - 1 <= 3.0 * std::pow(varrho, static_cast<double>(i)));
}

TEST_CASE("dilog and the cardinality constant") {
  CHECK(dilog(0.0) == 0.0);
  CHECK(dilog(0.75) == doctest::Approx(0.978469392930305).epsilon(1e-12));
  CHECK(dilog(0.5) == doctest::Approx(std::numbers::pi * std::numbers::pi / 12 - std::log(2.0) * std::log(2.0) / 2)
                          .epsilon(1e-13));
  CHECK_THROWS_AS(dilog(1.0), InvalidArgument);
  CHECK(cardinality_constant(0.5) == doctest::Approx(0.19827).epsilon(1e-4));
  CHECK(cardinality_constant(0.5) == doctest::Approx(6 / (std::numbers::pi * std::numbers::pi) / 3 * dilog(0.75)));
  CHECK(cardinality_constant(1e-6) < 1e-11);
  CHECK(cardinality_constant(1 - 1e-9) == doctest::Approx(6 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-6));
}
