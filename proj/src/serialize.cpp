#include "ratioset/serialize.hpp"

#include <cmath>

namespace ratioset {

namespace {

// JSON has no infinity; log(1 - P) at P = 1 is reported as null.
Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json probability_json(const ProbabilityValue& p) {
  Json j;
  j["mode"] = to_string(p.mode());
  if (p.is_exact()) {
    j["p"] = to_string(p.exact_value());
    j["one_minus_p"] = to_string(Rational(1 - p.exact_value()));
  } else {
    j["p"] = p.value();
  }
  j["p_float"] = p.value();
  j["log_one_minus_p"] = finite_or_null(p.log_complement());
  j["provenance"] = to_string(p.provenance());
  if (const auto& mc = p.monte_carlo_info()) {
    j["trials"] = mc->trials;
    j["half_width"] = mc->half_width;
  }
  return j;
}

Json probability_record(std::uint64_t n, const ReducedFraction& q, const std::optional<ExponentSet>& E,
                        const AlphaParam& alpha, const ProbabilityValue& p) {
  Json j;
  j["n"] = n;
  j["r"] = q.numerator();
  j["s"] = q.denominator();
  j["E"] = E ? Json(E->to_string()) : Json(nullptr);
  j["alpha"] = alpha.to_string();
  const Json body = probability_json(p);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

Json estimate_json(const EstimateResult& r) {
  Json j;
  j["estimate"] = r.estimate;
  j["trials"] = r.trials;
  j["half_width"] = r.half_width;
  j["z"] = r.z;
  j["target"] = r.target ? Json(*r.target) : Json(nullptr);
  j["deviation_in_half_widths"] = r.deviation ? finite_or_null(*r.deviation) : Json(nullptr);
  if (r.target) j["covers_target"] = r.covers_target();
  return j;
}

Json delta_json(const DeltaValue& d) {
  Json j;
  j["s"] = d.s;
  j["delta"] = d.value;
  j["truncation_index"] = d.truncation_index;
  j["tail_bound"] = d.tail_bound;
  j["decay_constant"] = d.decay_constant;
  j["decay_start"] = d.decay_start;
  return j;
}

Json roots_json(const CharacteristicRoots& r) {
  Json j;
  j["rho1"] = r.rho1;
  j["rho2"] = r.rho2;
  j["varrho"] = r.varrho;
  j["zeta1"] = r.zeta1;
  j["zeta2"] = r.zeta2;
  return j;
}

}  // namespace ratioset
