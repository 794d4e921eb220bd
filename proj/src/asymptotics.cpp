#include "ratioset/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ratioset/errors.hpp"
#include "ratioset/exact_prob.hpp"
#include "ratioset/recurrences.hpp"

namespace ratioset {

double CharacteristicRoots::binet(std::size_t i) const {
  return zeta1 * std::pow(rho1, static_cast<double>(i)) + zeta2 * std::pow(rho2, static_cast<double>(i));
}

CharacteristicRoots char_roots(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie strictly between 0 and 1");
  const double a = 1.0 - alpha;
  const double b = alpha * (1.0 - alpha);
  // Discriminant (1 - alpha)(1 + 3 alpha) > 0: two real roots of opposite sign.
  const double root = std::sqrt(a * a + 4.0 * b);
  CharacteristicRoots cr;
  cr.rho1 = (a + root) / 2.0;
  cr.rho2 = -b / cr.rho1;  // Vieta, avoids cancellation in (a - root) / 2
  cr.varrho = std::abs(cr.rho2 / cr.rho1);
  // beta_0 = beta_1 = 1.
  cr.zeta1 = (1.0 - cr.rho2) / (cr.rho1 - cr.rho2);
  cr.zeta2 = 1.0 - cr.zeta1;
  return cr;
}

DeltaValue delta_series(std::uint64_t s, const AlphaParam& alpha, double rel_tol) {
  if (s < 2) throw InvalidArgument("delta(s) needs s >= 2");
  if (!(rel_tol > 0.0)) throw InvalidArgument("rel_tol must be positive");
  const double varrho = char_roots(alpha.value()).varrho;
  const double ratio = varrho / static_cast<double>(s);

  for (std::size_t length = 64;; length *= 4) {
    const auto logs = log_gamma_table(length, alpha);
    DeltaValue out;
    out.s = s;

    // Decay constant: first index where |log gamma_i| / varrho^i settles.
    double previous = std::abs(logs[0]) / varrho;
    for (std::size_t i = 2; i <= length; ++i) {
      const double scaled = std::abs(logs[i - 1]) / std::pow(varrho, static_cast<double>(i));
      if (std::abs(scaled / previous - 1.0) < 0.1) {
        out.decay_start = i;
        out.decay_constant = 2.0 * scaled;
        break;
      }
      previous = scaled;
    }
    if (out.decay_start == 0) {
      if (length >= 4096) throw std::runtime_error("log gamma_i shows no geometric decay");
      continue;
    }

    double sum = 0.0, carry = 0.0;
    double weight = 1.0;
    for (std::size_t i = 1; i <= length; ++i) {
      weight /= static_cast<double>(s);
      const double term = -logs[i - 1] * weight;
      const double next = sum + term;
      carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
      sum = next;
      if (i < out.decay_start) continue;
      const double tail = out.decay_constant * std::pow(ratio, static_cast<double>(i + 1)) / (1.0 - ratio);
      if (tail <= rel_tol * std::abs(sum + carry) || tail == 0.0) {
        out.value = sum + carry;
        out.truncation_index = i;
        out.tail_bound = tail;
        return out;
      }
    }
    if (length >= 4096) throw std::runtime_error("delta series did not reach the requested tolerance");
  }
}

std::vector<std::uint64_t> log_spaced_grid(std::uint64_t lo, std::uint64_t hi, unsigned per_decade) {
  if (lo == 0 || hi < lo || per_decade == 0) throw InvalidArgument("invalid grid specification");
  std::vector<std::uint64_t> grid;
  const double step = std::log(10.0) / per_decade;
  for (double x = std::log(static_cast<double>(lo)); x <= std::log(static_cast<double>(hi)) + 1e-9; x += step) {
    const auto n = static_cast<std::uint64_t>(std::llround(std::exp(x)));
    if (grid.empty() || grid.back() != n) grid.push_back(std::min(n, hi));
  }
  if (grid.back() != hi) grid.push_back(hi);
  return grid;
}

CorollaryCheck check_corollary(const std::vector<std::uint64_t>& n_grid, std::uint64_t s, const AlphaParam& alpha) {
  if (n_grid.empty()) throw InvalidArgument("empty grid");
  CorollaryCheck out;
  out.n_grid = n_grid;
  const auto delta = delta_series(s, alpha, 1e-14);
  const AlphaParam float_alpha = alpha.as_floating();
  const ReducedFraction q(1, s);
  for (auto n : n_grid) {
    if (n < s) throw InvalidArgument("grid values must be at least s");
    const auto p = prob_in_ratio_set(n, q, float_alpha);
    out.deviations.push_back(std::abs(p.log_complement() + delta.value * static_cast<double>(n)));
  }
  out.max_deviation = *std::max_element(out.deviations.begin(), out.deviations.end());

  const auto logs = log_gamma_table(std::max<std::size_t>(delta.truncation_index, 64), alpha);
  out.bound = 1.0;
  for (double l : logs) out.bound += std::abs(l);

  double mx = 0.0, my = 0.0;
  const double count = static_cast<double>(n_grid.size());
  for (std::size_t k = 0; k < n_grid.size(); ++k) {
    mx += std::log(static_cast<double>(n_grid[k]));
    my += out.deviations[k];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < n_grid.size(); ++k) {
    const double dx = std::log(static_cast<double>(n_grid[k])) - mx;
    sxy += dx * (out.deviations[k] - my);
    sxx += dx * dx;
  }
  out.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const double span = std::log(static_cast<double>(n_grid.back())) - std::log(static_cast<double>(n_grid.front()));
  out.bounded_without_trend = out.max_deviation < out.bound && out.slope * span < out.bound;
  return out;
}

AlternatingCheck check_alternating(const AlphaParam& alpha, std::size_t i_max) {
  if (i_max < 2) throw InvalidArgument("check_alternating needs i_max >= 2");
  const Rational& a = alpha.rational();
  const auto betas = beta_table(i_max + 1, a);
  std::vector<Rational> v;
  for (std::size_t i = 1; i <= i_max; ++i) {
    const Rational g = betas[i - 1] * betas[i + 1] / (betas[i] * betas[i]);
    v.push_back(i % 2 == 1 ? Rational(1 / g) : g);
  }
  AlternatingCheck out;
  out.strictly_decreasing = true;
  out.above_one = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.values.push_back(v[k].get_d());
    if (v[k] <= 1) out.above_one = false;
    if (k > 0 && !(v[k] < v[k - 1])) out.strictly_decreasing = false;
  }
  const Rational contraction = (1 + Rational(char_roots(alpha.value()).varrho)) / 2;
  out.tends_to_one = out.above_one;
  for (std::size_t k = std::max<std::size_t>(1, v.size() / 2); k < v.size() && out.tends_to_one; ++k)
    if (Rational(v[k] - 1) > contraction * Rational(v[k - 1] - 1)) out.tends_to_one = false;
  return out;
}

double dilog(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw InvalidArgument("dilog is evaluated on [0, 1) only");
  double sum = 0.0;
  double power = z;
  for (std::uint64_t k = 1;; ++k) {
    const double kk = static_cast<double>(k);
    sum += power / (kk * kk);
    power *= z;
    const double next = kk + 1.0;
    const double tail = power / (next * next * (1.0 - z));
    if (tail <= 1e-12 && (tail <= 1e-15 * sum || tail <= 1e-300)) return sum;
    if (power == 0.0) return sum;
  }
}

double cardinality_constant(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie strictly between 0 and 1");
  const double eps = 1.0 - alpha * alpha;
  // Li_2(eps) / eps = sum eps^{k-1} / k^2, finite as eps -> 0.
  double ratio = 0.0;
  double power = 1.0;
  for (std::uint64_t k = 1; k < 100000; ++k) {
    const double kk = static_cast<double>(k);
    ratio += power / (kk * kk);
    power *= eps;
    if (power / ((kk + 1) * (kk + 1) * (1.0 - eps)) <= 1e-16 * ratio) break;
  }
  return 6.0 / (std::numbers::pi * std::numbers::pi) * alpha * alpha * ratio;
}

}  // namespace ratioset
