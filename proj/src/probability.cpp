#include "ratioset/probability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ratioset {

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::formula: return "formula";
    case Provenance::component_product: return "component-product";
    case Provenance::brute_force: return "brute-force";
    case Provenance::monte_carlo: return "monte-carlo";
  }
  return "unknown";
}

ProbabilityValue ProbabilityValue::exact(Rational p, Provenance provenance) {
  ProbabilityValue v;
  const Rational complement = 1 - p;
  v.value_ = p.get_d();
  v.log_complement_ = sgn(complement) == 0 ? -std::numeric_limits<double>::infinity() : log_of(complement);
  v.exact_ = std::move(p);
  v.provenance_ = provenance;
  return v;
}

ProbabilityValue ProbabilityValue::from_log_complement(double log_one_minus_p, Provenance provenance) {
  ProbabilityValue v;
  v.log_complement_ = log_one_minus_p;
  v.value_ = -std::expm1(log_one_minus_p);
  v.provenance_ = provenance;
  return v;
}

ProbabilityValue ProbabilityValue::monte_carlo(double estimate, std::uint64_t trials, double half_width) {
  ProbabilityValue v = from_log_complement(std::log1p(-estimate), Provenance::monte_carlo);
  v.value_ = estimate;
  v.mc_ = MonteCarloInfo{trials, half_width};
  return v;
}

const Rational& ProbabilityValue::exact_value() const {
  if (!exact_) throw std::logic_error("probability is not exact");
  return *exact_;
}

double ProbabilityValue::value() const { return value_; }

}  // namespace ratioset
