#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mpld {

/// Exact decimal stitch weight alpha = numerator / 10^decimals.
///
/// Costs are never held in binary floating point. A cost is the integer pair
/// (conflicts, stitches); it is compared through the scaled integer
/// 10^decimals * conflicts + numerator * stitches and printed digit-exact.
class StitchWeight {
public:
  /// alpha = 0.1
  StitchWeight() = default;

  /// Parses a non-negative decimal literal such as "0.1", "1", "0.25".
  /// Throws ParseError on anything else (signs, exponents, > 9 decimals).
  static StitchWeight parse(std::string_view text);

  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }
  int decimals() const { return decimals_; }

  std::int64_t scaled(std::int64_t conflicts, std::int64_t stitches) const {
    return denominator_ * conflicts + numerator_ * stitches;
  }

  /// conflicts + alpha * stitches as an exact decimal with at least one
  /// fractional digit: (0, 4) -> "0.4", (1, 205) -> "21.5", (1, 0) -> "1.0".
  std::string format(std::int64_t conflicts, std::int64_t stitches) const;

  /// Nearest double to the exact decimal cost; prints back identically.
  double to_double(std::int64_t conflicts, std::int64_t stitches) const;

  std::string to_string() const;
  double value() const { return static_cast<double>(numerator_) / static_cast<double>(denominator_); }

  friend bool operator==(const StitchWeight&, const StitchWeight&) = default;

private:
  std::int64_t numerator_ = 1;
  std::int64_t denominator_ = 10;
  int decimals_ = 1;
};

} // namespace mpld
