#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace contq {

/// Exact rational coordinate on the real line. Always stored reduced with
/// positive denominator; arithmetic goes through 128-bit intermediates and
/// throws on (desk-scale-impossible) overflow rather than wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d);

  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(-num, den); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
};

/// Midpoint, used to pick representative coordinates inside open cells.
Rational midpoint(const Rational& a, const Rational& b);

}  // namespace contq
