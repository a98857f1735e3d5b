#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace spaf {

/// An exact positive decimal capacity.
///
/// Capacities are only ever compared and ordered by the solvers, so they are
/// kept as exact decimals (significant digits plus a power-of-ten exponent)
/// instead of doubles. Two literals that denote the same value ("5", "5.0",
/// "0.5e1") compare equal. The literal the value was parsed from is kept for
/// output.
class Capacity {
 public:
  /// Parses a decimal literal such as "5", "2.50", ".5" or "1e3".
  /// Throws std::invalid_argument on malformed text and std::domain_error
  /// when the value is not strictly positive.
  static Capacity parse(std::string_view literal);

  const std::string& literal() const { return literal_; }

  /// Canonical decimal text; equal values have identical canonical text.
  std::string canonical() const;

  double to_double() const;

  friend std::strong_ordering operator<=>(const Capacity& a, const Capacity& b);
  friend bool operator==(const Capacity& a, const Capacity& b) {
    return a.digits_ == b.digits_ && a.exponent_ == b.exponent_;
  }

 private:
  Capacity() = default;

  // value = 0.d1d2d3... * 10^exponent_, with d1 != 0 and no trailing zeros
  std::string digits_;
  std::int64_t exponent_ = 0;
  std::string literal_;
};

}  // namespace spaf
