#include "doctest.h"

#include <bit>

#include "ratioset/errors.hpp"
#include "ratioset/recurrences.hpp"
#include "ratioset/transfer.hpp"

using namespace ratioset;

namespace {
Rational R(std::int64_t p, std::int64_t q) { return make_rational(p, q); }

const std::vector<ExponentSet>& sample_sets() {
  static const std::vector<ExponentSet> sets{ExponentSet::finite({1}), ExponentSet::finite({1, 2}),
                                             ExponentSet::finite({1, 3}), ExponentSet::finite({1, 2, 5}),
                                             ExponentSet::finite({1, 4, 6})};
  return sets;
}
}  // namespace

TEST_CASE("transfer system: stochastic structure") {
  for (const auto& a : {R(1, 10), R(1, 2), R(7, 9)})
    for (const auto& E : sample_sets()) {
      const auto sys = build_transfer_system(E, a);
      CHECK(sys.window_length == E.max_element() + 1);
      const std::size_t u = sys.state_count();
      Rational total = 0;
      for (const auto& p : sys.initial) total += p;
      CHECK(total == 1);
      for (std::size_t r = 0; r < u; ++r) {
        Rational row = 0;
        for (std::size_t c = 0; c < u; ++c) row += sys.transition(r, c);
        CHECK(row == 1);
      }
      const auto abs = sys.absorbing_state();
      CHECK(sys.transition(abs, abs) == 1);
      CHECK(sys.acceptance[abs] == 0);
    }
}

TEST_CASE("transfer system: initial mass of admissible windows") {
  const Rational a = R(1, 3);
  const auto sys = build_transfer_system(ExponentSet::finite({1, 2}), a);
  for (std::size_t k = 0; k < sys.windows.size(); ++k) {
    const int ones = std::popcount(sys.windows[k]);
    CHECK(sys.initial[k] == pow(a, ones) * pow(1 - a, 3 - ones));
  }
}

TEST_CASE("transfer system: iteration reproduces beta_E") {
  const Rational a = R(2, 5);
  for (const auto& E : sample_sets()) {
    const auto sys = build_transfer_system(E, a);
    const auto table = beta_E_table(E, 20, a);
    for (std::size_t i = sys.window_length; i <= 20; ++i) CHECK(sys.beta(i) == table[i]);
  }
}

TEST_CASE("transfer system: recurrences") {
  for (int k = 1; k <= 9; ++k) {
    const Rational a = R(k, 10), q = 1 - a;
    const auto E1 = ExponentSet::finite({1});
    const auto r1 = recurrence_of(build_transfer_system(E1, a), E1, a);
    CHECK(r1.coefficients == std::vector<Rational>{q, a * q});

    const auto E12 = ExponentSet::finite({1, 2});
    const auto r12 = recurrence_of(build_transfer_system(E12, a), E12, a);
    CHECK(r12.coefficients == std::vector<Rational>{q, 0, a * q * q});
    CHECK(r12.first_index <= 3);

    const auto E13 = ExponentSet::finite({1, 3});
    const auto r13 = recurrence_of(build_transfer_system(E13, a), E13, a);
    CHECK(r13.coefficients == std::vector<Rational>{q, a * q, -a * q * q, a * q * q * q});
    CHECK(r13.first_index <= 4);
  }
}

TEST_CASE("transfer system: recurrence continues the DP") {
  const Rational a = R(3, 8);
  const auto E = ExponentSet::finite({1, 2, 5});
  const auto rec = recurrence_of(build_transfer_system(E, a), E, a);
  const auto table = beta_E_table(E, 45, a);
  for (std::size_t i = std::max(rec.first_index, rec.order()); i <= 45; ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < rec.order(); ++j) v += rec.coefficients[j] * table[i - 1 - j];
    CHECK(v == table[i]);
  }
}

TEST_CASE("transfer system: errors") {
  CHECK_THROWS_AS(build_transfer_system(ExponentSet::all(), R(1, 2)), InvalidArgument);
  CHECK_THROWS_AS(build_transfer_system(ExponentSet::finite({1, 25}), R(1, 2)), CapabilityError);
}

TEST_CASE("characteristic polynomial of a small matrix") {
  RationalMatrix m(2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  // x^2 - 5x - 2, lowest degree first.
  CHECK(characteristic_polynomial(m) == std::vector<Rational>{-2, -5, 1});
}
