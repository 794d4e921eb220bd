#include "ratioset/transfer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ratioset/errors.hpp"
#include "ratioset/recurrences.hpp"

namespace ratioset {

std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = m.size();
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  RationalMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(m(r, j)) != 0 && sgn(mk(j, c)) != 0) acc += m(r, j) * mk(j, c);
        next(r, c) = acc;
      }
    for (std::size_t d = 0; d < n; ++d) next(d, d) += coeffs[n - k + 1];
    mk = std::move(next);
    Rational trace = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(m(r, j)) != 0 && sgn(mk(j, r)) != 0) trace += m(r, j) * mk(j, r);
    coeffs[n - k] = -trace / Rational(static_cast<unsigned long>(k));
  }
  return coeffs;
}

namespace {

bool admissible(std::uint32_t window, std::size_t length, const ExponentSet& E) {
  for (std::size_t e = 1; e < length; ++e)
    if (E.contains(e) && (window & (window >> e))) return false;
  return true;
}

}  // namespace

TransferSystem build_transfer_system(const ExponentSet& E, const Rational& alpha) {
  if (!E.is_finite()) throw InvalidArgument("transfer systems are built for finite exponent sets only");
  TransferSystem sys;
  const std::size_t m = E.max_element() + 1;
  if (m > 20) throw CapabilityError("transfer window longer than 20 characters");
  sys.window_length = m;
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t w = 0; w <= full; ++w)
    if (admissible(w, m, E)) sys.windows.push_back(w);

  const std::size_t u = sys.state_count();
  const std::size_t absorbing = sys.absorbing_state();
  auto index_of = [&](std::uint32_t w) -> std::size_t {
    auto it = std::lower_bound(sys.windows.begin(), sys.windows.end(), w);
    return (it != sys.windows.end() && *it == w) ? static_cast<std::size_t>(it - sys.windows.begin()) : absorbing;
  };

  const Rational q = 1 - alpha;
  sys.initial.assign(u, Rational(0));
  Rational mass = 0;
  for (std::size_t k = 0; k < sys.windows.size(); ++k) {
    const auto ones = static_cast<std::size_t>(std::popcount(sys.windows[k]));
    sys.initial[k] = pow(alpha, ones) * pow(q, m - ones);
    mass += sys.initial[k];
  }
  sys.initial[absorbing] = 1 - mass;

  sys.transition = RationalMatrix(u);
  for (std::size_t k = 0; k < sys.windows.size(); ++k) {
    // x_1 is the top bit, so shifting left drops it and frees the low bit.
    const std::uint32_t shifted = (sys.windows[k] << 1) & full;
    sys.transition(k, index_of(shifted)) += q;
    sys.transition(k, index_of(shifted | 1)) += alpha;
  }
  sys.transition(absorbing, absorbing) = 1;

  sys.acceptance.assign(u, Rational(1));
  sys.acceptance[absorbing] = 0;
  return sys;
}

Rational TransferSystem::evaluate_steps(std::size_t steps) const {
  std::vector<Rational> row = initial;
  const std::size_t u = state_count();
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<Rational> next(u, Rational(0));
    for (std::size_t r = 0; r < u; ++r) {
      if (sgn(row[r]) == 0) continue;
      for (std::size_t c = 0; c < u; ++c)
        if (sgn(transition(r, c)) != 0) next[c] += row[r] * transition(r, c);
    }
    row = std::move(next);
  }
  Rational total = 0;
  for (std::size_t r = 0; r < u; ++r) total += row[r] * acceptance[r];
  return total;
}

Rational TransferSystem::beta(std::size_t i) const {
  if (i < window_length)
    throw InvalidArgument("the transfer system covers strings of at least " + std::to_string(window_length) +
                          " characters");
  return evaluate_steps(i - window_length);
}

LinearRecurrence recurrence_of(const TransferSystem& system, const ExponentSet& E, const Rational& alpha,
                               std::size_t check_until) {
  const std::size_t t = system.windows.size();
  RationalMatrix transient(t);
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < t; ++c) transient(r, c) = system.transition(r, c);
  auto poly = characteristic_polynomial(transient);
  std::size_t zero_roots = 0;
  while (zero_roots < poly.size() - 1 && sgn(poly[zero_roots]) == 0) ++zero_roots;
  poly.erase(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(zero_roots));

  // x^d - sum c_j x^{d-j}  <=>  beta_i = sum c_j beta_{i-j}.
  LinearRecurrence rec;
  const std::size_t d = poly.size() - 1;
  for (std::size_t j = 1; j <= d; ++j) rec.coefficients.push_back(-poly[d - j]);

  // Cayley-Hamilton guarantees validity once every term lies in the matrix
  // regime past the nilpotent part; scan down for the true start.
  const std::size_t guaranteed = system.window_length + zero_roots + d;
  const std::size_t last = std::max(check_until, guaranteed + d);
  const auto values = beta_E_table(E, last, alpha);
  auto holds_at = [&](std::size_t i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= d; ++j) acc += rec.coefficients[j - 1] * values[i - j];
    return acc == values[i];
  };
  for (std::size_t i = guaranteed; i <= last; ++i)
    if (!holds_at(i)) throw std::logic_error("transfer recurrence disagrees with the window DP");
  std::size_t first = guaranteed;
  while (first > d && holds_at(first - 1)) --first;
  rec.first_index = first;
  return rec;
}

}  // namespace ratioset
