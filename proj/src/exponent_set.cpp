#include "ratioset/exponent_set.hpp"

#include <algorithm>
#include <charconv>

#include "ratioset/errors.hpp"

namespace ratioset {

namespace {

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::uint32_t> parse_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw InvalidArgument("malformed exponent list item: '" + std::string(item) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw InvalidArgument("trailing comma in exponent list");
  }
  return out;
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

ExponentSet ExponentSet::finite(std::vector<std::uint32_t> elements) {
  sort_unique(elements);
  if (elements.empty()) throw InvalidArgument("exponent set must be nonempty");
  if (elements.front() == 0) throw InvalidArgument("exponents must be positive");
  if (elements.front() != 1) throw InvalidArgument("exponent set must contain 1");
  return ExponentSet(Kind::finite, std::move(elements));
}

ExponentSet ExponentSet::cofinite(std::vector<std::uint32_t> excluded) {
  sort_unique(excluded);
  if (!excluded.empty() && excluded.front() == 0) throw InvalidArgument("exponents must be positive");
  if (!excluded.empty() && excluded.front() == 1) throw InvalidArgument("exponent set must contain 1");
  return ExponentSet(Kind::cofinite, std::move(excluded));
}

ExponentSet ExponentSet::parse(std::string_view text) {
  if (text == "all" || text == "N") return all();
  constexpr std::string_view prefix = "all-except:";
  if (text.starts_with(prefix)) return cofinite(parse_list(text.substr(prefix.size())));
  if (text.empty()) throw InvalidArgument("empty exponent set");
  return finite(parse_list(text));
}

bool ExponentSet::contains(std::uint64_t e) const {
  if (e == 0) return false;
  const bool listed = e <= UINT32_MAX && std::binary_search(listed_.begin(), listed_.end(), static_cast<std::uint32_t>(e));
  return is_finite() ? listed : !listed;
}

std::uint32_t ExponentSet::max_element() const {
  if (!is_finite()) throw InvalidArgument("cofinite exponent set has no maximum");
  return listed_.back();
}

std::vector<std::uint32_t> ExponentSet::members_up_to(std::uint64_t bound) const {
  std::vector<std::uint32_t> out;
  if (is_finite()) {
    for (auto e : listed_)
      if (e <= bound) out.push_back(e);
    return out;
  }
  for (std::uint64_t e = 1; e <= bound; ++e)
    if (contains(e)) out.push_back(static_cast<std::uint32_t>(e));
  return out;
}

std::string ExponentSet::to_string() const {
  if (is_finite()) return join(listed_);
  if (listed_.empty()) return "all";
  return "all-except:" + join(listed_);
}

}  // namespace ratioset
