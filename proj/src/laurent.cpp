#include "sutwist/laurent.hpp"

#include <sstream>

#include "sutwist/error.hpp"

namespace sutwist {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "Laurent coefficient addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "Laurent coefficient product overflow");
  return r;
}

int checked_exp_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "Laurent exponent overflow");
  return r;
}

std::string exponent_str(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return std::to_string(e2) + "/2";
}

}  // namespace

HalfLaurent HalfLaurent::monomial(std::int64_t coeff, int doubled_exp) {
  HalfLaurent r;
  r.add_term(doubled_exp, coeff);
  return r;
}

HalfLaurent HalfLaurent::from_terms(
    const std::vector<std::pair<std::int64_t, int>>& pairs) {
  HalfLaurent r;
  for (auto [c, e] : pairs) r.add_term(e, c);
  return r;
}

void HalfLaurent::add_term(int e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool HalfLaurent::has_half_integer_powers() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return true;
  return false;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = checked_mul(c, -1);
  return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(checked_exp_add(ea, eb), checked_mul(ca, cb));
  return r;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  return *this = *this * o;
}

Rational HalfLaurent::eval(const Rational& q0) const {
  if (q0.sign() <= 0)
    throw Error(ErrorKind::InvalidInput,
                "evaluation point must be positive, got " + q0.str());
  if (is_zero()) return Rational(0);
  // Evaluate in powers of a base b with q^{e/2} = b^{e * step / 2}.
  Rational base = q0;
  int halve = 2;
  if (has_half_integer_powers()) {
    auto s = q0.sqrt();
    if (!s)
      throw Error(ErrorKind::NonSquareBase,
                  "half-integer power of q at non-square q0 = " + q0.str());
    base = *s;
    halve = 1;
  }
  Rational sum;
  for (const auto& [e, c] : terms_)
    sum += Rational(c) * base.pow(e / halve);
  return sum;
}

std::string HalfLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "q";
    if (e != 2) os << "^" << exponent_str(e);
  }
  return os.str();
}

HalfLaurent quantum_integer(int m) {
  if (m < 1)
    throw Error(ErrorKind::InvalidInput,
                "q-integer index must be >= 1, got " + std::to_string(m));
  HalfLaurent r;
  for (int k = m - 1; k >= 1 - m; k -= 2) r += HalfLaurent::q_half_power(2 * k);
  return r;
}

void CycloLaurent::add(const UnitAngle& angle, int doubled_exp,
                       std::int64_t mult) {
  if (mult == 0) return;
  static const UnitAngle half(1, 2);
  UnitAngle a = angle;
  if (a.value() >= half.value()) {
    a -= half;
    mult = checked_mul(mult, -1);
  }
  Key k{a, doubled_exp};
  auto [it, inserted] = terms_.try_emplace(k, mult);
  if (!inserted) {
    it->second = checked_add(it->second, mult);
    if (it->second == 0) terms_.erase(it);
  }
}

CycloLaurent CycloLaurent::operator-() const {
  CycloLaurent r;
  for (const auto& [k, m] : terms_) r.terms_[k] = checked_mul(m, -1);
  return r;
}

CycloLaurent& CycloLaurent::operator+=(const CycloLaurent& o) {
  for (const auto& [k, m] : o.terms_) add(k.angle, k.doubled_exp, m);
  return *this;
}

CycloLaurent& CycloLaurent::operator-=(const CycloLaurent& o) {
  for (const auto& [k, m] : o.terms_)
    add(k.angle, k.doubled_exp, checked_mul(m, -1));
  return *this;
}

CycloLaurent operator*(const CycloLaurent& a, const CycloLaurent& b) {
  CycloLaurent r;
  for (const auto& [ka, ma] : a.terms_)
    for (const auto& [kb, mb] : b.terms_)
      r.add(ka.angle + kb.angle, checked_exp_add(ka.doubled_exp, kb.doubled_exp),
            checked_mul(ma, mb));
  return r;
}

std::string CycloLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : terms_) {
    std::int64_t mag = m < 0 ? -m : m;
    if (first) {
      if (m < 0) os << "-";
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = true;
    if (mag != 1) {
      os << mag;
      bare = false;
    }
    if (!k.angle.is_zero()) {
      os << "e(" << k.angle.str() << ")";
      bare = false;
    }
    if (k.doubled_exp != 0) {
      os << "q";
      if (k.doubled_exp != 2) os << "^" << exponent_str(k.doubled_exp);
      bare = false;
    }
    if (bare) os << "1";
  }
  return os.str();
}

}  // namespace sutwist
