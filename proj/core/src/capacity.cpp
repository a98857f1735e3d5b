#include "spaf/capacity.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace spaf {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Exponents beyond this are rejected rather than risking overflow.
constexpr std::size_t kMaxExponentDigits = 9;

}  // namespace

Capacity Capacity::parse(std::string_view literal) {
  const std::string text(literal);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < literal.size() && (literal[pos] == '+' || literal[pos] == '-')) {
    negative = literal[pos] == '-';
    ++pos;
  }

  std::string int_part;
  while (pos < literal.size() && is_digit(literal[pos])) int_part += literal[pos++];
  std::string frac_part;
  if (pos < literal.size() && literal[pos] == '.') {
    ++pos;
    while (pos < literal.size() && is_digit(literal[pos])) frac_part += literal[pos++];
  }
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("malformed capacity '" + text + "'");
  }

  std::int64_t exp10 = 0;
  if (pos < literal.size() && (literal[pos] == 'e' || literal[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < literal.size() && (literal[pos] == '+' || literal[pos] == '-')) {
      exp_negative = literal[pos] == '-';
      ++pos;
    }
    std::string exp_digits;
    while (pos < literal.size() && is_digit(literal[pos])) exp_digits += literal[pos++];
    if (exp_digits.empty()) throw std::invalid_argument("malformed capacity '" + text + "'");
    if (exp_digits.size() > kMaxExponentDigits) {
      throw std::invalid_argument("capacity exponent out of range in '" + text + "'");
    }
    exp10 = std::stoll(exp_digits);
    if (exp_negative) exp10 = -exp10;
  }
  if (pos != literal.size()) throw std::invalid_argument("malformed capacity '" + text + "'");

  Capacity c;
  c.digits_ = int_part + frac_part;
  c.exponent_ = static_cast<std::int64_t>(int_part.size()) + exp10;
  std::size_t lead = 0;
  while (lead < c.digits_.size() && c.digits_[lead] == '0') ++lead;
  c.digits_.erase(0, lead);
  c.exponent_ -= static_cast<std::int64_t>(lead);
  while (!c.digits_.empty() && c.digits_.back() == '0') c.digits_.pop_back();

  if (c.digits_.empty() || negative) {
    throw std::domain_error("non-positive capacity '" + text + "'");
  }
  c.literal_ = text;
  return c;
}

std::string Capacity::canonical() const {
  const auto len = static_cast<std::int64_t>(digits_.size());
  if (exponent_ >= -20 && exponent_ <= 40) {
    if (exponent_ <= 0) return "0." + std::string(static_cast<std::size_t>(-exponent_), '0') + digits_;
    if (exponent_ >= len) return digits_ + std::string(static_cast<std::size_t>(exponent_ - len), '0');
    return digits_.substr(0, static_cast<std::size_t>(exponent_)) + "." +
           digits_.substr(static_cast<std::size_t>(exponent_));
  }
  std::string out(1, digits_[0]);
  if (len > 1) out += "." + digits_.substr(1);
  return out + "e" + std::to_string(exponent_ - 1);
}

double Capacity::to_double() const { return std::strtod(canonical().c_str(), nullptr); }

std::strong_ordering operator<=>(const Capacity& a, const Capacity& b) {
  if (a.exponent_ != b.exponent_) return a.exponent_ <=> b.exponent_;
  const int cmp = a.digits_.compare(b.digits_);
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace spaf
