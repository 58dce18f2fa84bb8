#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sutwist/angle.hpp"
#include "sutwist/rational.hpp"

namespace sutwist {

/// Laurent polynomial in q^{1/2} with integer coefficients. Exponents are
/// stored doubled, so q^{1/2} has key 1 and q^{-1} has key -2.
class HalfLaurent {
 public:
  using Terms = std::map<int, std::int64_t>;

  HalfLaurent() = default;
  HalfLaurent(std::int64_t c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_[0] = c;
  }

  static HalfLaurent monomial(std::int64_t coeff, int doubled_exp);
  /// q^{e/2}
  static HalfLaurent q_half_power(int doubled_exp) {
    return monomial(1, doubled_exp);
  }
  static HalfLaurent from_terms(const std::vector<std::pair<std::int64_t, int>>& pairs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_half_integer_powers() const;
  std::size_t size() const { return terms_.size(); }

  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

  /// Exact value at q = q0 > 0. Throws NonSquareBase when a half-integer
  /// power meets a q0 that is not the square of a rational.
  Rational eval(const Rational& q0) const;

  /// e.g. "q^2 - q^-2", "-2q^1/2 + 1"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void add_term(int e, std::int64_t c);
  Terms terms_;
};

/// The q-integer [m]_q = q^{m-1} + q^{m-3} + ... + q^{1-m}.
HalfLaurent quantum_integer(int m);

/// Finite sum of terms mult * exp(2 pi i angle) * q^{e/2}. Terms with equal
/// (angle, exponent) are merged. Since -1 = exp(pi i), a term whose angle
/// lies in [1/2, 1) is stored with the angle shifted by -1/2 and the
/// multiplicity negated, so every stored angle is in [0, 1/2).
class CycloLaurent {
 public:
  struct Key {
    UnitAngle angle;
    int doubled_exp = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, std::int64_t>;

  CycloLaurent() = default;
  CycloLaurent(std::int64_t c) { add(UnitAngle(), 0, c); }  // NOLINT

  static CycloLaurent term(std::int64_t mult, const UnitAngle& angle,
                           int doubled_exp) {
    CycloLaurent r;
    r.add(angle, doubled_exp, mult);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const UnitAngle& angle, int doubled_exp, std::int64_t mult);

  CycloLaurent operator-() const;
  CycloLaurent& operator+=(const CycloLaurent& o);
  CycloLaurent& operator-=(const CycloLaurent& o);
  friend CycloLaurent operator+(CycloLaurent a, const CycloLaurent& b) { return a += b; }
  friend CycloLaurent operator-(CycloLaurent a, const CycloLaurent& b) { return a -= b; }
  friend CycloLaurent operator*(const CycloLaurent& a, const CycloLaurent& b);
  friend bool operator==(const CycloLaurent&, const CycloLaurent&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace sutwist
