#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sutwist {

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integers convert implicitly
  Rational(long n, long d);
  explicit Rational(mpq_class v);
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  /// Largest integer not exceeding the value.
  mpz_class floor() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  /// Integer power; negative exponents invert (value must be nonzero).
  Rational pow(long e) const;

  /// Exact square root when both numerator and denominator are squares.
  std::optional<Rational> sqrt() const;

  /// Always "p/q", including integers ("3/1", "0/1").
  std::string str() const;

 private:
  mpq_class v_{0};
};

}  // namespace sutwist
