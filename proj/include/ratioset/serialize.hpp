#pragma once

#include <optional>

#include "json.hpp"

#include "ratioset/asymptotics.hpp"
#include "ratioset/exponent_set.hpp"
#include "ratioset/fraction.hpp"
#include "ratioset/monte_carlo.hpp"
#include "ratioset/probability.hpp"

namespace ratioset {

using Json = nlohmann::ordered_json;

/// Exact values serialize as "p/q" strings, floats as JSON numbers, so the
/// mode of every numeric field is visible.
Json probability_json(const ProbabilityValue& p);

/// {n, r, s, E, alpha, mode, p, provenance, ...}.
Json probability_record(std::uint64_t n, const ReducedFraction& q, const std::optional<ExponentSet>& E,
                        const AlphaParam& alpha, const ProbabilityValue& p);

Json estimate_json(const EstimateResult& r);
Json delta_json(const DeltaValue& d);
Json roots_json(const CharacteristicRoots& r);

}  // namespace ratioset
