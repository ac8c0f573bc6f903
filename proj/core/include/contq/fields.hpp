#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "contq/errors.hpp"

namespace contq {

/// Runtime description of the coefficient field: GF(p) or the rationals.
struct FieldSpec {
  enum class Kind { prime, rationals };
  Kind kind = Kind::prime;
  std::uint32_t p = 32003;

  static FieldSpec gf(std::uint32_t p) { return FieldSpec{Kind::prime, p}; }
  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string str() const {
    return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// GF(p). Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (!is_prime(p)) throw error(errc::schema_error, "p is not prime");
  }

  FieldSpec spec() const { return FieldSpec::gf(static_cast<std::uint32_t>(p_)); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(m);
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const {
    if (a == 0) throw error(errc::schema_error, "inverse of zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const { return from_int(std::stoll(s)); }

  std::uint64_t modulus() const { return p_; }

 private:
  std::uint64_t p_;
};

/// Exact rationals backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  RationalField() = default;
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const {
    Elem e(static_cast<long>(v));
    return e;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw error(errc::schema_error, "inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

  std::string str(const Elem& a) const {
    Elem c(a);
    c.canonicalize();
    return c.get_str();
  }
  Elem parse(const std::string& s) const {
    Elem e(s);
    e.canonicalize();
    return e;
  }

 private:
  const Elem& inv_guard(const Elem& b) const {
    if (is_zero(b)) throw error(errc::schema_error, "division by zero");
    return b;
  }
};

}  // namespace contq
