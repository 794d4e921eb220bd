#include "ratioset/rational.hpp"

#include <cmath>

#include "ratioset/errors.hpp"

namespace ratioset {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q{Integer{std::to_string(num)}, Integer{std::to_string(den)}};
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto valid_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  Integer n{std::string(num[0] == '+' ? num.substr(1) : num)};
  Integer d{std::string(den[0] == '+' ? den.substr(1) : den)};
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  Rational q{n, d};
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of a canonical fraction stay canonical.
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

namespace {

double log_of(const Integer& z) {
  signed long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

double log_of(const Rational& value) {
  if (sgn(value) <= 0) throw InvalidArgument("log of a non-positive rational");
  return log_of(value.get_num()) - log_of(value.get_den());
}

double log1p_of(const Rational& x) {
  if (x <= -1) throw InvalidArgument("log1p of a value <= -1");
  if (abs(x) < Rational(1, 4)) return std::log1p(x.get_d());
  return log_of(Rational(1 + x));
}

}  // namespace ratioset
