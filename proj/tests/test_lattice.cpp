#include <doctest.h>

#include <random>

#include "sutwist/cohomology.hpp"
#include "sutwist/error.hpp"
#include "sutwist/lattice.hpp"

using namespace sutwist;
using namespace sutwist::lattice;

namespace {

WeightVec random_weight(std::mt19937& rng, int n) {
  std::vector<long> c(std::size_t(n), 0);
  for (auto& x : c) x = long(rng() % 11) - 5;
  return WeightVec(c);
}

TauVector random_tau(std::mt19937& rng, int n) {
  std::vector<UnitAngle> e;
  for (int i = 1; i < n; ++i) e.emplace_back(long(rng() % unsigned(n)), n);
  return TauVector(n, e);
}

UnitAngle weighted_sum(const TauVector& tau) {
  Rational s;
  for (int i = 1; i < tau.n(); ++i) s += Rational(i) * tau[i].value();
  return UnitAngle(s);
}

}  // namespace

TEST_CASE("weight norm") {
  CHECK(weight_norm(WeightVec::basis(3, 1)) == 2);
  CHECK(weight_norm(WeightVec::shift(3)) == 0);
  CHECK(weight_norm(WeightVec::simple_root(3, 1)) == 3);
  CHECK(weight_norm(WeightVec::basis(4, 3)) == -1);
  std::mt19937 rng(43);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + int(rng() % 4);
    const auto l = random_weight(rng, n);
    CHECK(weight_norm(l + WeightVec::shift(n)) == weight_norm(l));
  }
}

TEST_CASE("class modulo the root lattice") {
  for (int i = 1; i < 4; ++i) CHECK(class_mod_Q(WeightVec::simple_root(4, i)) == 0);
  CHECK(class_mod_Q(WeightVec::basis(3, 1)) == 1);
  CHECK(class_mod_Q(WeightVec::shift(5)) == 0);
  CHECK(class_mod_Q(WeightVec({-1, 0, 0})) == 2);
}

TEST_CASE("coordinates relative to the section") {
  auto c = q_coordinates(WeightVec::simple_root(3, 1));
  CHECK(c.k == 0);
  CHECK(c.a == std::vector<long>{1, 0});
  c = q_coordinates(WeightVec::zero(3));
  CHECK(c.k == 0);
  CHECK(c.a == std::vector<long>{0, 0});
  c = q_coordinates(WeightVec::basis(3, 1));
  CHECK(c.k == 1);
  CHECK(c.a == std::vector<long>{0, 0});

  std::mt19937 rng(47);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + int(rng() % 4);
    const auto l = random_weight(rng, n);
    const auto qc = q_coordinates(l);
    auto rebuilt = WeightVec::basis(n, 1).scaled(qc.k);
    for (int i = 1; i < n; ++i) rebuilt += WeightVec::simple_root(n, i).scaled(qc.a[std::size_t(i - 1)]);
    // Differ by a multiple of (1, ..., 1).
    const long d = l[0] - rebuilt[0];
    for (int i = 0; i < n; ++i) CHECK(l[std::size_t(i)] - rebuilt[std::size_t(i)] == d);
    CHECK(q_coordinates(l + WeightVec::shift(n).scaled(3)).a == qc.a);
  }
}

TEST_CASE("c_tau values and recursions") {
  const TauVector tau(3, {UnitAngle(1, 3), UnitAngle()});
  const auto mu = WeightVec({2, -1, 4});
  CHECK(c_tau_eval(tau, WeightVec::zero(3), mu).is_zero());
  CHECK(c_tau_eval(tau, WeightVec::simple_root(3, 1), WeightVec::basis(3, 1)) == UnitAngle(1, 3));

  std::mt19937 rng(53);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + int(rng() % 4);
    const auto tv = random_tau(rng, n);
    const auto l = random_weight(rng, n), m = random_weight(rng, n);
    const auto base = c_tau_eval(tv, l, m);
    for (int i = 1; i < n; ++i) {
      const auto a = WeightVec::simple_root(n, i);
      CHECK(c_tau_eval(tv, l + a, m) == base - tv[i].scaled(weight_norm(m)));
      CHECK(c_tau_eval(tv, l, m + a) == base);
    }
    CHECK(c_tau_eval(tv, l + WeightVec::shift(n), m) == base);
    CHECK(c_tau_eval(tv, l, m + WeightVec::shift(n)) == base);
    // Only |mu| mod n matters.
    const auto m2 = m + WeightVec::basis(n, 1).scaled(n);
    CHECK(c_tau_eval(tv, l, m2) == base);
    for (int k = 0; k < n; ++k)
      CHECK(c_tau_eval(tv, WeightVec::basis(n, 1).scaled(k), m).is_zero());
  }
}

TEST_CASE("lattice coboundary") {
  const PairCochain zero = [](const WeightVec&, const WeightVec&) { return UnitAngle(); };
  const auto l = WeightVec({1, 0, 2}), m = WeightVec({0, 3, 1}), v = WeightVec({2, 2, 0});
  CHECK(coboundary3(zero, l, m, v).is_zero());
  const PairCochain bilinear = [](const WeightVec& a, const WeightVec& b) {
    return UnitAngle(Rational(a[0] * b[1] - 2 * a[2] * b[0], 7));
  };
  CHECK(coboundary3(bilinear, l, m, v).is_zero());

  // n = 2, tau = (1/2): the descended value at (1, 1, 1) comes from the lattice.
  const TauVector tau(2, {UnitAngle(1, 2)});
  const auto L1 = WeightVec::basis(2, 1);
  const auto d = descend_to_PQ(c_tau(tau), 2);
  CHECK(d.cocycle.at(1, 1, 1) == coboundary3(c_tau(tau), L1, L1, L1));
  CHECK(cohomology::cohomologous(d.cocycle, cohomology::standard_cyclic_3cocycle(2, 1)).has_value());
}

TEST_CASE("descent to P/Q") {
  std::mt19937 rng(59);
  for (int n = 2; n <= 5; ++n) {
    const auto d = descend_to_PQ(c_tau(random_tau(rng, n)), n);
    CHECK(d.spot_checks > 0);
    CHECK(cohomology::is_cocycle(d.cocycle));
  }
  const PairCochain zero = [](const WeightVec&, const WeightVec&) { return UnitAngle(); };
  CHECK(descend_to_PQ(zero, 3).cocycle.is_zero());
  for (int n = 2; n <= 5; ++n) {
    const PairCochain cubic = [n](const WeightVec& a, const WeightVec& b) {
      const long x = weight_norm(a);
      return UnitAngle(Rational(x * x * weight_norm(b), 2L * n * n));
    };
    try {
      (void)descend_to_PQ(cubic, n);
      FAIL("expected NotDescendable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotDescendable);
    }
  }
}

TEST_CASE("descended classes follow the weighted tau sum") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<TauVector> taus;
    std::vector<int> digits(std::size_t(n - 1), 0);
    while (true) {
      std::vector<UnitAngle> e;
      for (int x : digits) e.emplace_back(x, n);
      taus.emplace_back(n, e);
      std::size_t p = 0;
      while (p < digits.size() && ++digits[p] == n) digits[p++] = 0;
      if (p == digits.size()) break;
    }
    std::vector<cohomology::Cochain> phis;
    for (const auto& t : taus) phis.push_back(descend_to_PQ(c_tau(t), n).cocycle);
    for (std::size_t a = 0; a < taus.size(); a += 1 + taus.size() / 9)
      for (std::size_t b = 0; b < taus.size(); ++b)
        CHECK(cohomology::cohomologous(phis[a], phis[b]).has_value() ==
              (weighted_sum(taus[a]) == weighted_sum(taus[b])));
  }
}

TEST_CASE("invalid tau vectors are rejected") {
  CHECK_THROWS_AS(TauVector(3, {UnitAngle(1, 2), UnitAngle()}), Error);
  CHECK_THROWS_AS(TauVector(3, {UnitAngle()}), Error);
  CHECK_THROWS_AS(WeightVec({1}), Error);
}
