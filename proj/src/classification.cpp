#include "sutwist/classification.hpp"

#include <string>

#include "sutwist/error.hpp"

namespace sutwist::classify {
namespace {

UnitAngle tau_interval(const TauVector& tau, int from, int to_exclusive) {
  UnitAngle s;
  for (int k = from; k < to_exclusive; ++k) s += tau[k];
  return s;
}

void require_same_rank(int a, int b) {
  if (a != b)
    throw Error(ErrorKind::RankMismatch,
                "n = " + std::to_string(a) + " vs n = " + std::to_string(b));
}

}  // namespace

SkewBicharacter::SkewBicharacter(int n, std::vector<UnitAngle> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (n_ < 2) throw Error(ErrorKind::InvalidInput, "omega needs n >= 2");
  if (a_.size() != std::size_t(n_) * std::size_t(n_))
    throw Error(ErrorKind::InvalidInput,
                "omega must be " + std::to_string(n_) + "x" + std::to_string(n_));
  for (int i = 1; i <= n_; ++i) {
    if (!(*this)(i, i).is_zero())
      throw Error(ErrorKind::InvalidInput,
                  "omega_" + std::to_string(i) + std::to_string(i) +
                      " must be 0 (diagonal of a skew bicharacter)");
    for (int j = i + 1; j <= n_; ++j)
      if ((*this)(j, i) != -(*this)(i, j))
        throw Error(ErrorKind::InvalidInput,
                    "omega is not antisymmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
  }
  for (int j = 1; j <= n_; ++j) {
    UnitAngle s;
    for (int i = 1; i <= n_; ++i) s += (*this)(i, j);
    if (!s.is_zero())
      throw Error(ErrorKind::InvalidInput,
                  "column " + std::to_string(j) + " of omega sums to " + s.str() +
                      ", must be trivial on L_1 + ... + L_n");
  }
}

SkewBicharacter SkewBicharacter::zero(int n) {
  return SkewBicharacter(n, std::vector<UnitAngle>(std::size_t(n) * std::size_t(n)));
}

SkewBicharacter SkewBicharacter::from_upper_block(int n,
                                                  const std::vector<UnitAngle>& upper) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "omega needs n >= 2");
  const std::size_t m = std::size_t(n - 1);
  if (upper.size() != m * (m - 1) / 2)
    throw Error(ErrorKind::InvalidInput, "upper block has wrong number of entries");
  std::vector<UnitAngle> a(std::size_t(n) * std::size_t(n));
  auto at = [&](int i, int j) -> UnitAngle& {
    return a[std::size_t((i - 1) * n + (j - 1))];
  };
  std::size_t t = 0;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      at(i, j) = upper[t++];
      at(j, i) = -at(i, j);
    }
  for (int j = 1; j <= n - 1; ++j) {
    UnitAngle s;
    for (int i = 1; i <= n - 1; ++i) s += at(i, j);
    at(n, j) = -s;
    at(j, n) = s;
  }
  return SkewBicharacter(n, std::move(a));
}

SkewBicharacter SkewBicharacter::operator-() const {
  auto a = a_;
  for (auto& x : a) x = -x;
  return SkewBicharacter(n_, std::move(a));
}

ParamTuple::ParamTuple(int n_, Rational q_, TauVector tau_, SkewBicharacter omega_)
    : n(n_), q(std::move(q_)), tau(std::move(tau_)), omega(std::move(omega_)) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n must be >= 2");
  if (q.sign() <= 0)
    throw Error(ErrorKind::InvalidInput, "q must be positive, got " + q.str());
  if (q >= Rational(1))
    throw Error(ErrorKind::NonKacDomain,
                "q = " + q.str() + " is outside (0,1); the non-Kac classification "
                "needs 0 < q < 1");
  require_same_rank(n, tau.n());
  require_same_rank(n, omega.n());
}

const UnitAngle& PairMatrix::at(int i, int j) const {
  // Offset of row i among pairs (i, j), 1 <= i < j <= n-1.
  const int m = n - 1;
  const int before = (i - 1) * m - (i - 1) * i / 2;
  return entries[std::size_t(before + (j - i - 1))];
}

std::string_view to_string(IsoCase c) {
  switch (c) {
    case IsoCase::None: return "none";
    case IsoCase::Direct: return "direct";
    case IsoCase::Mirror: return "mirror";
  }
  return "none";
}

UnitAngle central_invariant(const TauVector& tau) {
  UnitAngle s;
  for (int i = 1; i < tau.n(); ++i) s += tau[i].scaled(i);
  return s;
}

PairMatrix pair_invariant(const ParamTuple& p) {
  PairMatrix m{p.n, {}};
  for (int i = 1; i <= p.n - 1; ++i)
    for (int j = i + 1; j <= p.n - 1; ++j)
      m.entries.push_back(p.omega(i, j).scaled(2) + tau_interval(p.tau, i, j));
  return m;
}

PairMatrix mirror_invariant(const ParamTuple& p) {
  const int n = p.n;
  PairMatrix m{n, {}};
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      UnitAngle s;
      for (int k = i; k < j; ++k) s += p.tau[n - k];
      m.entries.push_back(p.omega(n - i + 1, n - j + 1).scaled(2) - s);
    }
  return m;
}

ParamTuple theta_transform(const ParamTuple& p) {
  const int n = p.n;
  std::vector<UnitAngle> tau(std::size_t(n - 1));
  for (int i = 1; i <= n - 1; ++i) tau[std::size_t(i - 1)] = -p.tau[n - i];
  std::vector<UnitAngle> w(std::size_t(n) * std::size_t(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      w[std::size_t((i - 1) * n + (j - 1))] = p.omega(n - i + 1, n - j + 1);
  return ParamTuple(n, p.q, TauVector(n, std::move(tau)),
                    SkewBicharacter(n, std::move(w)));
}

IsoCase is_isomorphic(const ParamTuple& p1, const ParamTuple& p2) {
  require_same_rank(p1.n, p2.n);
  if (p1.q != p2.q) return IsoCase::None;
  if (central_invariant(p1.tau) != central_invariant(p2.tau)) return IsoCase::None;
  const auto m1 = pair_invariant(p1);
  if (m1 == pair_invariant(p2)) return IsoCase::Direct;
  if (m1 == mirror_invariant(p2)) return IsoCase::Mirror;
  return IsoCase::None;
}

ParamTuple canonical_form(const ParamTuple& p) {
  const int n = p.n;
  std::vector<UnitAngle> tau(std::size_t(n - 1));
  tau[0] = central_invariant(p.tau);
  TauVector tau_k(n, std::move(tau));

  const auto direct = pair_invariant(p);
  const auto mirror = mirror_invariant(p);
  const PairMatrix& target = mirror < direct ? mirror : direct;

  std::vector<UnitAngle> upper;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      upper.push_back((target.at(i, j) - tau_interval(tau_k, i, j)).halve());
  return ParamTuple(n, p.q, std::move(tau_k),
                    SkewBicharacter::from_upper_block(n, upper));
}

bool h2_equal(const SkewBicharacter& a, const SkewBicharacter& b) {
  require_same_rank(a.n(), b.n());
  for (std::size_t t = 0; t < a.angles().size(); ++t)
    if (a.angles()[t].scaled(2) != b.angles()[t].scaled(2)) return false;
  return true;
}

ParamTuple twist_compose(const ParamTuple& p, const SkewBicharacter& extra) {
  require_same_rank(p.n, extra.n());
  auto w = p.omega.angles();
  for (std::size_t t = 0; t < w.size(); ++t) w[t] += extra.angles()[t];
  return ParamTuple(p.n, p.q, p.tau, SkewBicharacter(p.n, std::move(w)));
}

}  // namespace sutwist::classify
