#include "ratioset/alpha.hpp"

#include <charconv>
#include <cmath>

#include "ratioset/errors.hpp"

namespace ratioset {

std::string_view to_string(NumericMode mode) {
  return mode == NumericMode::exact ? "exact" : "float";
}

AlphaParam::AlphaParam(Rational exact, NumericMode mode)
    : exact_(std::move(exact)), value_(0.0), mode_(mode) {
  exact_.canonicalize();
  value_ = exact_.get_d();
  if (exact_ <= 0 || exact_ >= 1)
    throw InvalidArgument("alpha must lie strictly between 0 and 1, got " + ratioset::to_string(exact_));
}

AlphaParam AlphaParam::exact(std::int64_t p, std::int64_t q) { return AlphaParam(make_rational(p, q), NumericMode::exact); }

AlphaParam AlphaParam::exact(const Rational& value) { return AlphaParam(value, NumericMode::exact); }

AlphaParam AlphaParam::floating(double value) {
  if (!std::isfinite(value) || value <= 0.0 || value >= 1.0)
    throw InvalidArgument("alpha must lie strictly between 0 and 1");
  return AlphaParam(Rational(value), NumericMode::floating);
}

AlphaParam AlphaParam::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return exact(parse_rational(text));
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw InvalidArgument("malformed alpha: '" + std::string(text) + "'");
  return floating(value);
}

AlphaParam AlphaParam::as_floating() const { return AlphaParam(exact_, NumericMode::floating); }

AlphaParam AlphaParam::as_exact() const { return AlphaParam(exact_, NumericMode::exact); }

std::string AlphaParam::to_string() const {
  if (is_exact()) return ratioset::to_string(exact_);
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value_);
  return std::string(buf, ptr);
}

}  // namespace ratioset
