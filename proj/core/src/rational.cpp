#include "contq/rational.hpp"

#include <numeric>

namespace contq {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)),
                  std::stoll(text.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
  __int128 d = (__int128)a.den * b.den;
  return Rational(checked(n), checked(d));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  __int128 n = (__int128)a.num * b.num;
  __int128 d = (__int128)a.den * b.den;
  return Rational(checked(n), checked(d));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw std::invalid_argument("rational division by zero");
  __int128 n = (__int128)a.num * b.den;
  __int128 d = (__int128)a.den * b.num;
  return Rational(checked(n), checked(d));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = (__int128)a.num * b.den;
  __int128 rhs = (__int128)b.num * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

}  // namespace contq
