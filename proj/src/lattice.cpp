#include "sutwist/lattice.hpp"

#include <array>
#include <string>

#include "sutwist/error.hpp"

namespace sutwist::lattice {

WeightVec::WeightVec(std::vector<long> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw Error(ErrorKind::InvalidInput, "weight needs n >= 2 coordinates");
}

WeightVec WeightVec::basis(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidInput, "basis index out of range");
  auto w = zero(n);
  w.coords_[std::size_t(i - 1)] = 1;
  return w;
}

WeightVec WeightVec::simple_root(int n, int i) {
  if (i < 1 || i >= n)
    throw Error(ErrorKind::InvalidInput, "simple root index out of range");
  auto w = zero(n);
  w.coords_[std::size_t(i - 1)] = 1;
  w.coords_[std::size_t(i)] = -1;
  return w;
}

WeightVec WeightVec::shift(int n) {
  return WeightVec(std::vector<long>(std::size_t(n), 1));
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (o.rank() != rank())
    throw Error(ErrorKind::RankMismatch, "adding weights of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

WeightVec WeightVec::scaled(long k) const {
  auto w = *this;
  for (auto& x : w.coords_) x *= k;
  return w;
}

TauVector::TauVector(int n, std::vector<UnitAngle> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 2) throw Error(ErrorKind::InvalidInput, "tau needs n >= 2");
  if (entries_.size() != std::size_t(n_ - 1))
    throw Error(ErrorKind::InvalidInput,
                "tau must have n-1 = " + std::to_string(n_ - 1) + " entries, got " +
                    std::to_string(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (n_ % entries_[i].order() != 0)
      throw Error(ErrorKind::InvalidInput,
                  "tau_" + std::to_string(i + 1) + " = " + entries_[i].str() +
                      " is not an n-th root of unity for n = " + std::to_string(n_));
}

long weight_norm(const WeightVec& lambda) {
  const int n = lambda.rank();
  long r = (n - 1) * lambda[0];
  for (int i = 1; i < n; ++i) r -= lambda[std::size_t(i)];
  return r;
}

int class_mod_Q(const WeightVec& lambda) {
  const long n = lambda.rank();
  long s = 0;
  for (long x : lambda.coords()) s += x;
  return static_cast<int>(((s % n) + n) % n);
}

QCoordinates q_coordinates(const WeightVec& lambda) {
  const int n = lambda.rank();
  QCoordinates out;
  out.k = class_mod_Q(lambda);
  std::vector<long> rep = lambda.coords();
  rep[0] -= out.k;
  long s = 0;
  for (long x : rep) s += x;
  const long m = s / n;  // exact: s is divisible by n
  for (auto& x : rep) x -= m;
  out.a.resize(std::size_t(n - 1));
  long partial = 0;
  for (int i = 0; i < n - 1; ++i) {
    partial += rep[std::size_t(i)];
    out.a[std::size_t(i)] = partial;
  }
  return out;
}

UnitAngle c_tau_eval(const TauVector& tau, const WeightVec& lambda,
                     const WeightVec& mu) {
  if (lambda.rank() != tau.n() || mu.rank() != tau.n())
    throw Error(ErrorKind::RankMismatch, "weights and tau disagree on n");
  const auto a = q_coordinates(lambda).a;
  const long norm = weight_norm(mu);
  UnitAngle r;
  for (int i = 1; i < tau.n(); ++i)
    r += tau[i].scaled(-a[std::size_t(i - 1)] * norm);
  return r;
}

PairCochain c_tau(TauVector tau) {
  return [tau = std::move(tau)](const WeightVec& l, const WeightVec& m) {
    return c_tau_eval(tau, l, m);
  };
}

UnitAngle coboundary3(const PairCochain& c, const WeightVec& lambda,
                      const WeightVec& mu, const WeightVec& nu) {
  return c(mu, nu) - c(lambda + mu, nu) + c(lambda, mu + nu) - c(lambda, mu);
}

Descent descend_to_PQ(const PairCochain& c, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "descent needs n >= 2");
  Descent out{cohomology::Cochain(cohomology::FiniteAbelianGroup::cyclic(n), 3), 0};
  std::vector<WeightVec> section;
  for (int k = 0; k < n; ++k) section.push_back(WeightVec::basis(n, 1).scaled(k));
  std::vector<WeightVec> perturbations;
  for (int i = 1; i < n; ++i) perturbations.push_back(WeightVec::simple_root(n, i));
  perturbations.push_back(WeightVec::shift(n));

  std::array<std::size_t, 3> idx{};
  for (idx[0] = 0; idx[0] < std::size_t(n); ++idx[0])
    for (idx[1] = 0; idx[1] < std::size_t(n); ++idx[1])
      for (idx[2] = 0; idx[2] < std::size_t(n); ++idx[2]) {
        std::array<WeightVec, 3> args{section[idx[0]], section[idx[1]],
                                      section[idx[2]]};
        const UnitAngle base = coboundary3(c, args[0], args[1], args[2]);
        out.cocycle.at(idx) = base;
        for (int slot = 0; slot < 3; ++slot)
          for (const auto& p : perturbations) {
            auto moved = args;
            moved[std::size_t(slot)] += p;
            ++out.spot_checks;
            if (coboundary3(c, moved[0], moved[1], moved[2]) != base)
              throw Error(ErrorKind::NotDescendable,
                          "coboundary changes when argument " +
                              std::to_string(slot + 1) + " of (" +
                              std::to_string(idx[0]) + "," + std::to_string(idx[1]) +
                              "," + std::to_string(idx[2]) +
                              ") is shifted by a root-lattice element");
          }
      }
  return out;
}

}  // namespace sutwist::lattice
