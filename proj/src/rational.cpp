#include "sutwist/rational.hpp"

#include <cctype>

#include "sutwist/error.hpp"

namespace sutwist {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(ns, true) || !valid_int(ds, false))
    throw Error(ErrorKind::InvalidInput,
                "malformed rational '" + std::string(text) + "'");
  if (ns[0] == '+') ns.erase(0, 1);
  mpz_class n(ns), d(ds);
  if (d == 0)
    throw Error(ErrorKind::InvalidInput,
                "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero())
      throw Error(ErrorKind::InvalidInput, "negative power of zero");
    return Rational(mpq_class(den(), num())).pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(num().get_mpz_t()) ||
      !mpz_perfect_square_p(den().get_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  return num().get_str() + "/" + den().get_str();
}

}  // namespace sutwist
