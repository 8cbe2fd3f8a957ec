#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace growthlab {

/// Nonnegative exact ratio used for card multipliers.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Ratio one() { return {1, 1}; }
  Ratio normalized() const;
  bool is_one() const { return num == den; }

  /// floor(value * num / den)
  std::int64_t scale_floor(std::int64_t value) const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// "p/q", "p", or a plain decimal like "0.75".
  static std::optional<Ratio> parse(std::string_view text);
  /// Canonical text: "p" when den == 1, otherwise "p/q" in lowest terms.
  std::string to_string() const;

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
};

}  // namespace growthlab
