#include "mpld/weight.hpp"

#include "mpld/errors.hpp"

#include <cctype>
#include <string>

namespace mpld {

namespace {

std::string format_scaled(std::int64_t scaled, int decimals) {
  const bool negative = scaled < 0;
  std::string digits = std::to_string(negative ? -scaled : scaled);
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<std::size_t>(decimals + 1 - static_cast<int>(digits.size())), '0');
  }
  std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
  std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(decimals));
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (frac.empty()) frac = "0";
  return (negative ? "-" : "") + whole + "." + frac;
}

} // namespace

StitchWeight StitchWeight::parse(std::string_view text) {
  if (text.empty()) throw ParseError("stitch weight: empty value");
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int decimals = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_dot) throw ParseError("stitch weight: more than one '.' in '" + std::string(text) + "'");
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("stitch weight: '" + std::string(text) + "' is not a non-negative decimal");
    }
    seen_digit = true;
    const int d = ch - '0';
    if (seen_dot) {
      if (++decimals > 9) throw ParseError("stitch weight: at most 9 decimal places supported");
      frac = frac * 10 + d;
    } else {
      if (whole > 1'000'000) throw ParseError("stitch weight: value too large");
      whole = whole * 10 + d;
    }
  }
  if (!seen_digit) throw ParseError("stitch weight: '" + std::string(text) + "' has no digits");

  StitchWeight w;
  w.decimals_ = decimals;
  w.denominator_ = 1;
  for (int i = 0; i < decimals; ++i) w.denominator_ *= 10;
  w.numerator_ = whole * w.denominator_ + frac;
  return w;
}

std::string StitchWeight::format(std::int64_t conflicts, std::int64_t stitches) const {
  return format_scaled(scaled(conflicts, stitches), decimals_);
}

double StitchWeight::to_double(std::int64_t conflicts, std::int64_t stitches) const {
  return std::stod(format(conflicts, stitches));
}

std::string StitchWeight::to_string() const {
  return format_scaled(numerator_, decimals_);
}

} // namespace mpld
