#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ratioset {

/// A finite or cofinite set E of positive integers with 1 in E.
///
/// Finite sets list their members; cofinite sets list the (finite) excluded
/// integers. Both lists are kept sorted and duplicate-free.
class ExponentSet {
 public:
  enum class Kind { finite, cofinite };

  /// Throws InvalidArgument if empty, contains 0, or lacks 1.
  static ExponentSet finite(std::vector<std::uint32_t> elements);
  /// All positive integers except `excluded`. Throws if 1 or 0 is excluded.
  static ExponentSet cofinite(std::vector<std::uint32_t> excluded);
  /// The whole of N.
  static ExponentSet all() { return cofinite({}); }

  /// "1,2,5" (finite), "all" or "all-except:2,4" (cofinite).
  static ExponentSet parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool contains(std::uint64_t e) const;

  /// Members (finite) or excluded integers (cofinite).
  const std::vector<std::uint32_t>& listed() const { return listed_; }

  /// Largest member; only meaningful for finite sets.
  std::uint32_t max_element() const;

  /// Members of E that are at most `bound`, ascending.
  std::vector<std::uint32_t> members_up_to(std::uint64_t bound) const;

  /// Canonical text form, parseable by parse().
  std::string to_string() const;

  bool operator==(const ExponentSet&) const = default;

 private:
  ExponentSet(Kind kind, std::vector<std::uint32_t> listed) : kind_(kind), listed_(std::move(listed)) {}

  Kind kind_;
  std::vector<std::uint32_t> listed_;
};

}  // namespace ratioset
