#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "sutwist/rational.hpp"

namespace sutwist {

/// A torsion point of the circle group, written additively: the angle a
/// stands for exp(2 pi i a). Multiplication in the circle is addition here,
/// complex conjugation is negation. The stored value is always in [0, 1).
class UnitAngle {
 public:
  UnitAngle() = default;
  explicit UnitAngle(const Rational& r) : v_(r - Rational(r.floor())) {}
  UnitAngle(long p, long q) : UnitAngle(Rational(p, q)) {}

  static UnitAngle parse(std::string_view text) {
    return UnitAngle(Rational::parse(text));
  }

  const Rational& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  /// Order of the point in the circle group.
  const mpz_class& order() const { return v_.den(); }

  UnitAngle operator-() const { return UnitAngle(-v_); }
  UnitAngle& operator+=(const UnitAngle& o) { return *this = UnitAngle(v_ + o.v_); }
  UnitAngle& operator-=(const UnitAngle& o) { return *this = UnitAngle(v_ - o.v_); }
  friend UnitAngle operator+(UnitAngle a, const UnitAngle& b) { return a += b; }
  friend UnitAngle operator-(UnitAngle a, const UnitAngle& b) { return a -= b; }

  UnitAngle scaled(long k) const { return UnitAngle(v_ * Rational(k)); }
  UnitAngle scaled(const mpz_class& k) const {
    return UnitAngle(v_ * Rational(k));
  }

  /// The square root in [0, 1/2): p/q maps to p/(2q).
  UnitAngle halve() const { return UnitAngle(v_ / Rational(2)); }

  friend bool operator==(const UnitAngle&, const UnitAngle&) = default;
  friend std::strong_ordering operator<=>(const UnitAngle& a,
                                          const UnitAngle& b) {
    return a.v_ <=> b.v_;
  }

  std::string str() const { return v_.str(); }

 private:
  Rational v_;
};

}  // namespace sutwist
