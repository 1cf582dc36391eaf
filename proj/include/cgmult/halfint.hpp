#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cgmult/rational.hpp"

namespace cgm {

/// Element of (1/2)Z stored as its doubled value, so all arithmetic is exact
/// integer arithmetic.
class HalfInt {
public:
  HalfInt() = default;
  explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  static HalfInt from_int(std::int64_t k) { return HalfInt(2 * k); }

  std::int64_t twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  bool is_zero() const { return twice_ == 0; }

  HalfInt operator-() const { return HalfInt(-twice_); }
  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend auto operator<=>(HalfInt a, HalfInt b) = default;

  HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  /// Exact square as a rational (x^2 = twice^2 / 4).
  Rational square() const { return Rational(twice_ * twice_, 4); }
  Rational to_rational() const { return Rational(twice_, 2); }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }

  /// Prints "3", "-2", "1/2", "-3/2"; parse() round-trips bit-exactly.
  std::string str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  static HalfInt parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("HalfInt: empty literal");
    auto slash = s.find('/');
    if (slash == std::string::npos) return HalfInt(2 * std::stoll(s));
    if (s.substr(slash + 1) != "2")
      throw std::invalid_argument("HalfInt: denominator must be 2 in '" + s + "'");
    std::int64_t num = std::stoll(s.substr(0, slash));
    if (num % 2 == 0)
      throw std::invalid_argument("HalfInt: non-reduced literal '" + s + "'");
    return HalfInt(num);
  }

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

private:
  std::int64_t twice_ = 0;
};

}  // namespace cgm
