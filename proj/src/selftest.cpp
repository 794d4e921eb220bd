#include "ratioset/selftest.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ratioset/asymptotics.hpp"
#include "ratioset/exact_prob.hpp"
#include "ratioset/hypergraph.hpp"
#include "ratioset/ratio_graph.hpp"
#include "ratioset/recurrences.hpp"
#include "ratioset/transfer.hpp"

namespace ratioset {

namespace {

SelfTestItem pass(std::string name) { return {std::move(name), true, {}}; }

SelfTestItem fail(std::string name, const std::string& where, const std::string& expected, const std::string& actual) {
  return {std::move(name), false, where + ": expected " + expected + ", got " + actual};
}

std::vector<Rational> alpha_grid() {
  std::vector<Rational> out;
  for (int k = 1; k <= 9; ++k) out.push_back(make_rational(k, 10));
  return out;
}

SelfTestItem fibonacci_betas(std::size_t last) {
  const std::string name = "beta_i = F_{i+2} / 2^i at alpha = 1/2";
  const auto betas = beta_table(last, Rational(1, 2));
  Integer f0 = 1, f1 = 2;  // F_{i+2}, F_{i+3} at i = 0
  for (std::size_t i = 0; i <= last; ++i) {
    Rational expected(f0, Integer(1) << static_cast<mp_bitcnt_t>(i));
    expected.canonicalize();
    if (betas[i] != expected)
      return fail(name, "i=" + std::to_string(i), to_string(expected), to_string(betas[i]));
    Integer next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  return pass(name);
}

SelfTestItem window_dp_matches_enumeration(std::uint32_t max_e, std::size_t max_i) {
  const std::string name = "beta^(E) window DP equals enumeration (max E <= " + std::to_string(max_e) + ")";
  const Rational alpha(1, 3);
  // Every E = {1} union S for S a subset of {2..max_e}.
  for (std::uint32_t subset = 0; subset < (1u << (max_e - 1)); ++subset) {
    std::vector<std::uint32_t> elems{1};
    for (std::uint32_t e = 2; e <= max_e; ++e)
      if (subset & (1u << (e - 2))) elems.push_back(e);
    const auto E = ExponentSet::finite(elems);
    const auto table = beta_E_table(E, max_i, alpha);
    for (std::size_t i = 0; i <= max_i; ++i) {
      const auto brute = beta_E_bruteforce(E, i, alpha);
      if (table[i] != brute)
        return fail(name, "E={" + E.to_string() + "}, i=" + std::to_string(i), to_string(brute), to_string(table[i]));
    }
  }
  return pass(name);
}

SelfTestItem cofinite_closed_forms(std::size_t max_i) {
  const std::string name = "beta^(N) and beta^(N minus {2}) closed forms";
  const auto all = ExponentSet::all();
  const auto but_two = ExponentSet::cofinite({2});
  for (const auto& a : alpha_grid()) {
    const Rational q = 1 - a;
    const auto t_all = beta_E_table(all, max_i + 1, a);
    const auto t_two = beta_E_table(but_two, max_i + 1, a);
    for (std::size_t i = 1; i <= max_i; ++i) {
      const Rational expected = pow(q, i - 1) * (q + Rational(static_cast<unsigned long>(i)) * a);
      if (t_all[i] != expected) return fail(name, "E=N, i=" + std::to_string(i), to_string(expected), to_string(t_all[i]));
      const Rational shift = Rational(static_cast<unsigned long>(i)) + 1 / a - 1;
      const Rational g_expected = 1 - 1 / (shift * shift);
      const Rational g = t_all[i - 1] * t_all[i + 1] / (t_all[i] * t_all[i]);
      if (g != g_expected) return fail(name, "gamma^(N), i=" + std::to_string(i), to_string(g_expected), to_string(g));
      if (i < 3) continue;
      const Rational ii(static_cast<unsigned long>(i));
      const Rational e2 = pow(q, i - 2) * (q * q + ii * a * q + (ii - 2) * a * a);
      if (t_two[i] != e2) return fail(name, "E=N\\{2}, i=" + std::to_string(i), to_string(e2), to_string(t_two[i]));
      const Rational shift2 = ii + 1 / a - a - 2;
      const Rational g2_expected = 1 - 1 / (shift2 * shift2);
      const Rational g2 = t_two[i - 1] * t_two[i + 1] / (t_two[i] * t_two[i]);
      if (g2 != g2_expected)
        return fail(name, "gamma^(N\\{2}), i=" + std::to_string(i), to_string(g2_expected), to_string(g2));
    }
  }
  return pass(name);
}

SelfTestItem transfer_recurrences() {
  const std::string name = "transfer-matrix recurrences for E = {1,2} and {1,3}";
  for (const auto& a : alpha_grid()) {
    const Rational q = 1 - a;
    struct Case {
      ExponentSet E;
      std::vector<Rational> coeffs;
      std::size_t first;
    };
    const Case cases[] = {
        {ExponentSet::finite({1, 2}), {q, 0, a * q * q}, 3},
        {ExponentSet::finite({1, 3}), {q, a * q, -a * q * q, a * q * q * q}, 4},
    };
    for (const auto& c : cases) {
      const auto sys = build_transfer_system(c.E, a);
      const auto rec = recurrence_of(sys, c.E, a, 20);
      if (rec.coefficients != c.coeffs)
        return fail(name, "E={" + c.E.to_string() + "}, alpha=" + to_string(a), "reference coefficients",
                    "order-" + std::to_string(rec.order()) + " recurrence with different coefficients");
      if (rec.first_index > c.first)
        return fail(name, "E={" + c.E.to_string() + "}", "valid from i=" + std::to_string(c.first),
                    "valid from i=" + std::to_string(rec.first_index));
    }
  }
  return pass(name);
}

SelfTestItem formula_matches_bruteforce(std::uint64_t max_n, const std::vector<AlphaParam>& alphas) {
  const std::string name = "product formula equals brute force (n <= " + std::to_string(max_n) + ")";
  for (const auto& alpha : alphas)
    for (std::uint64_t n = 1; n <= max_n; ++n)
      for (std::uint64_t s = 2; s <= 7; ++s)
        for (std::uint64_t r = 1; r < s; ++r) {
          if (std::gcd(r, s) != 1) continue;
          const ReducedFraction q(r, s);
          const auto formula = prob_in_ratio_set(n, q, alpha).exact_value();
          const auto brute = prob_bruteforce(ratio_event(n, q), alpha).exact_value();
          if (formula != brute)
            return fail(name, "n=" + std::to_string(n) + ", q=" + q.to_string() + ", alpha=" + alpha.to_string(),
                        to_string(brute), to_string(formula));
        }
  return pass(name);
}

SelfTestItem component_counts(std::uint64_t max_n) {
  const std::string name = "component counts satisfy d_i and c_i closed forms";
  for (std::uint64_t s = 2; s <= 10; ++s)
    for (std::uint64_t r = 1; r < s; ++r) {
      if (std::gcd(r, s) != 1) continue;
      for (std::uint64_t n = 1; n <= max_n; n += (n < 200 ? 1 : 97)) {
        const auto dec = components(build_graph(n, ReducedFraction(r, s)));
        if (!dec.closed_forms_hold)
          return fail(name, "n=" + std::to_string(n) + ", q=" + std::to_string(r) + "/" + std::to_string(s),
                      "closed forms hold", "violation");
      }
    }
  return pass(name);
}

SelfTestItem alternating(std::size_t i_max) {
  const std::string name = "gamma_i^{(-1)^i} strictly decreasing to 1";
  for (const auto& a : alpha_grid()) {
    const auto check = check_alternating(AlphaParam::exact(a), i_max);
    if (!check.passed())
      return fail(name, "alpha=" + to_string(a), "strictly decreasing, > 1, contracting",
                  std::string(check.strictly_decreasing ? "" : "not decreasing ") + (check.above_one ? "" : "not above 1 ") +
                      (check.tends_to_one ? "" : "not contracting"));
  }
  return pass(name);
}

SelfTestItem dilog_identity() {
  const std::string name = "Li_2(1/2) = pi^2/12 - log(2)^2 / 2";
  const double expected = std::numbers::pi * std::numbers::pi / 12.0 - std::log(2.0) * std::log(2.0) / 2.0;
  const double actual = dilog(0.5);
  if (std::abs(actual - expected) > 1e-12) return fail(name, "z=1/2", std::to_string(expected), std::to_string(actual));
  return pass(name);
}

SelfTestItem single_fraction_collapse(std::uint64_t max_n) {
  const std::string name = "prob_any_of and prob_direction_hit collapse to the product formula";
  const auto alpha = AlphaParam::exact(1, 2);
  for (std::uint64_t n = 1; n <= max_n; n += 7)
    for (std::uint64_t s = 2; s <= 7; ++s)
      for (std::uint64_t r = 1; r < s; ++r) {
        if (std::gcd(r, s) != 1) continue;
        const ReducedFraction q(r, s);
        const auto formula = prob_in_ratio_set(n, q, alpha).exact_value();
        const auto any = prob_any_of(n, {q}, alpha).exact_value();
        const auto hit = prob_direction_hit(n, DirectionVector({r, s}), alpha).probability.exact_value();
        const std::string where = "n=" + std::to_string(n) + ", q=" + q.to_string();
        if (any != formula) return fail(name, where + " (any-of)", to_string(formula), to_string(any));
        if (hit != formula) return fail(name, where + " (direction)", to_string(formula), to_string(hit));
      }
  return pass(name);
}

}  // namespace

SelfTestItem check_gamma_table(const std::vector<Rational>& gammas) {
  const std::string name = "gamma_i = 1 + (-1)^i / F_{i+2}^2 at alpha = 1/2";
  Integer f_prev = 1, f = 2;  // F_2, F_3 -> F_{i+2} starts at F_3 for i = 1
  for (std::size_t i = 1; i <= gammas.size(); ++i) {
    const Rational expected = 1 + Rational(i % 2 == 0 ? 1 : -1, f * f);
    if (gammas[i - 1] != expected)
      return fail(name, "i=" + std::to_string(i), to_string(expected), to_string(gammas[i - 1]));
    Integer next = f_prev + f;
    f_prev = f;
    f = next;
  }
  return pass(name);
}

std::vector<SelfTestItem> run_selftest(bool quick) {
  std::vector<SelfTestItem> items;
  const std::size_t gamma_count = quick ? 20 : 40;
  std::vector<Rational> gammas;
  for (std::size_t i = 1; i <= gamma_count; ++i) gammas.push_back(gamma(i, Rational(1, 2)));
  items.push_back(check_gamma_table(gammas));
  items.push_back(fibonacci_betas(30));
  items.push_back(window_dp_matches_enumeration(quick ? 4 : 6, quick ? 12 : 20));
  items.push_back(cofinite_closed_forms(quick ? 15 : 30));
  items.push_back(transfer_recurrences());
  std::vector<AlphaParam> alphas{AlphaParam::exact(1, 2)};
  if (!quick) {
    alphas.push_back(AlphaParam::exact(1, 4));
    alphas.push_back(AlphaParam::exact(3, 4));
  }
  items.push_back(formula_matches_bruteforce(quick ? 15 : 30, alphas));
  items.push_back(component_counts(quick ? 1000 : 10000));
  items.push_back(alternating(quick ? 20 : 40));
  items.push_back(dilog_identity());
  items.push_back(single_fraction_collapse(quick ? 50 : 100));
  return items;
}

}  // namespace ratioset
