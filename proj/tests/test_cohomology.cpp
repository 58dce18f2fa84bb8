#include <doctest.h>

#include <random>

#include "sutwist/cohomology.hpp"
#include "sutwist/error.hpp"

using namespace sutwist;
using namespace sutwist::cohomology;

namespace {

Cochain random_cochain(std::mt19937& rng, const FiniteAbelianGroup& g, int degree, int den = 12) {
  std::size_t cells = 1;
  for (int d = 0; d < degree; ++d) cells *= g.order();
  std::vector<UnitAngle> t;
  for (std::size_t i = 0; i < cells; ++i) t.emplace_back(long(rng() % unsigned(den)), den);
  return Cochain(g, degree, t);
}

std::vector<FiniteAbelianGroup> sample_groups() {
  return {FiniteAbelianGroup({2}), FiniteAbelianGroup({3}), FiniteAbelianGroup({4}),
          FiniteAbelianGroup({2, 2})};
}

// Sum over j in <x> of phi(x, j, x); unchanged by adding coboundaries when x
// has order 2.
UnitAngle order_two_invariant(const Cochain& phi, std::size_t x) {
  return phi.at(x, 0, x) + phi.at(x, x, x);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("group element arithmetic") {
  FiniteAbelianGroup g({2, 3});
  CHECK(g.order() == 6);
  const int r[] = {1, 2};
  const auto x = g.encode(r);
  CHECK(g.decode(x) == std::vector<int>{1, 2});
  CHECK(g.decode(g.add(x, x)) == std::vector<int>{0, 1});
  CHECK(g.add(x, g.neg(x)) == 0);
}

TEST_CASE("coboundary examples") {
  const auto z2 = FiniteAbelianGroup::cyclic(2);
  CHECK(coboundary(Cochain(z2, 1)).is_zero());
  const UnitAngle x(1, 5);
  Cochain b(z2, 1, {UnitAngle(), x});
  CHECK(coboundary(b).at(1, 1) == x.scaled(2));
}

TEST_CASE("the differential squares to zero") {
  std::mt19937 rng(23);
  for (const auto& g : sample_groups())
    for (int t = 0; t < 10; ++t) {
      CHECK(coboundary(coboundary(random_cochain(rng, g, 1))).is_zero());
      CHECK(is_cocycle(coboundary(random_cochain(rng, g, 2))));
    }
}

TEST_CASE("cocycle recognition") {
  for (int k = 2; k <= 5; ++k)
    for (int j = 0; j < k; ++j) CHECK(is_cocycle(standard_cyclic_3cocycle(k, j)));
  std::mt19937 rng(29);
  int failures = 0;
  for (int t = 0; t < 20; ++t) failures += !is_cocycle(random_cochain(rng, FiniteAbelianGroup::cyclic(3), 3));
  CHECK(failures >= 18);
  // A bicharacter (a, b) -> ab/6 on Z/6.
  const auto z6 = FiniteAbelianGroup::cyclic(6);
  std::vector<UnitAngle> t;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t.emplace_back(a * b, 6);
  CHECK(is_cocycle(Cochain(z6, 2, t)));
}

TEST_CASE("standard cyclic representatives") {
  CHECK(standard_cyclic_3cocycle(4, 0).is_zero());
  const auto phi = standard_cyclic_3cocycle(3, 1);
  CHECK(phi.at(1, 2, 1) == UnitAngle(1, 3));
  CHECK(phi.at(1, 1, 1) == UnitAngle());
  CHECK_THROWS_AS(standard_cyclic_3cocycle(3, 3), Error);
}

TEST_CASE("cohomologous witnesses") {
  const auto phi = standard_cyclic_3cocycle(3, 1);
  auto w = cohomologous(phi, phi);
  REQUIRE(w);
  CHECK(coboundary(*w).is_zero());

  const auto psi = aut_pullback(phi);
  w = cohomologous(phi, psi);
  REQUIRE(w);
  CHECK(coboundary(*w) == phi - psi);
  CHECK(coboundary(negation_witness(3, 1)) == phi - psi);

  const auto k = klein_cocycles();
  CHECK_FALSE(cohomologous(k[0], k[1]).has_value());
  CHECK_FALSE(cohomologous(standard_cyclic_3cocycle(3, 1), standard_cyclic_3cocycle(3, 2)));
}

TEST_CASE("cohomologous rejects mismatched inputs") {
  const auto phi = standard_cyclic_3cocycle(3, 1);
  CHECK(kind_of([&] { (void)cohomologous(phi, Cochain(FiniteAbelianGroup::cyclic(3), 2)); }) ==
        ErrorKind::DegreeMismatch);
  CHECK(kind_of([&] { (void)cohomologous(phi, standard_cyclic_3cocycle(4, 1)); }) ==
        ErrorKind::GroupMismatch);
  std::mt19937 rng(31);
  Cochain bad = random_cochain(rng, FiniteAbelianGroup::cyclic(3), 3);
  while (is_cocycle(bad)) bad = random_cochain(rng, FiniteAbelianGroup::cyclic(3), 3);
  CHECK(kind_of([&] { (void)cohomologous(phi, bad); }) == ErrorKind::NotCocycle);
}

TEST_CASE("cohomologous behaves as an equivalence relation") {
  std::mt19937 rng(37);
  const auto g = FiniteAbelianGroup::cyclic(4);
  std::vector<Cochain> sample;
  for (int j = 0; j < 4; ++j)
    for (int t = 0; t < 3; ++t)
      sample.push_back(standard_cyclic_3cocycle(4, j) + coboundary(random_cochain(rng, g, 2)));
  for (const auto& a : sample)
    for (const auto& b : sample) {
      const auto ab = cohomologous(a, b);
      const auto ba = cohomologous(b, a);
      CHECK(ab.has_value() == ba.has_value());
      if (ab) CHECK(coboundary(-*ab) == b - a);
      for (const auto& c : sample) {
        const auto bc = cohomologous(b, c);
        if (ab && bc) {
          CHECK(cohomologous(a, c).has_value());
          CHECK(coboundary(*ab + *bc) == a - c);
        }
      }
    }
}

TEST_CASE("2-cocycles on cyclic groups are coboundaries") {
  for (auto [m, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const auto g = FiniteAbelianGroup::cyclic(m);
    const std::size_t cells = std::size_t(m * m);
    std::vector<int> digits(cells, 0);
    int cocycles = 0;
    while (true) {
      std::vector<UnitAngle> t;
      for (int d : digits) t.emplace_back(d, k);
      Cochain c(g, 2, t);
      if (is_cocycle(c)) {
        ++cocycles;
        auto w = CoboundarySolver(g, 1).preimage(c);
        REQUIRE(w);
        CHECK(coboundary(*w) == c);
      }
      std::size_t p = 0;
      while (p < cells && ++digits[p] == k) digits[p++] = 0;
      if (p == cells) break;
    }
    CHECK(cocycles > 1);
  }
}

TEST_CASE("Klein-four cocycles") {
  const auto k = klein_cocycles();
  const auto& g = k[0].group();
  const int e10[] = {1, 0}, e01[] = {0, 1}, e11[] = {1, 1};
  const auto a = g.encode(e10), b = g.encode(e01), c = g.encode(e11);
  CHECK(k[2].at(a, a, b) == UnitAngle(1, 2));
  for (const auto& phi : k) CHECK(is_cocycle(phi));

  // Characters of U+, U-, V.
  const auto wp = g.encode(KleinCharacters::plus), wm = g.encode(KleinCharacters::minus),
             wv = g.encode(KleinCharacters::vector);
  CHECK(k[0].at(wp, wp, wp) == UnitAngle(1, 2));
  CHECK(k[0].at(wv, wv, wv) == UnitAngle(1, 2));
  CHECK(k[0].at(wm, wm, wm).is_zero());
  CHECK(k[1].at(wp, wp, wp).is_zero());
  CHECK(k[1].at(wm, wm, wm) == UnitAngle(1, 2));
  CHECK(k[2].at(wv, wv, wv) == UnitAngle(1, 2));

  // Restriction to the three order-two subgroups separates all eight classes.
  std::vector<std::array<UnitAngle, 3>> seen;
  for (int m = 0; m < 8; ++m) {
    Cochain phi(g, 3);
    for (int i = 0; i < 3; ++i)
      if (m >> i & 1) phi = phi + k[std::size_t(i)];
    std::array<UnitAngle, 3> inv{order_two_invariant(phi, a), order_two_invariant(phi, b),
                                 order_two_invariant(phi, c)};
    for (const auto& s : seen) CHECK(s != inv);
    seen.push_back(inv);
  }
}

TEST_CASE("negation pullback") {
  const auto z3 = FiniteAbelianGroup::cyclic(3);
  CHECK(aut_pullback(Cochain(z3, 3)).is_zero());
  const auto phi = standard_cyclic_3cocycle(3, 1);
  CHECK(aut_pullback(phi).at(1, 2, 1) == UnitAngle(2, 3));
  CHECK(aut_pullback(aut_pullback(phi)) == phi);
  for (int n = 3; n <= 5; ++n)
    for (int j = 0; j < n; ++j) {
      const auto f = standard_cyclic_3cocycle(n, j);
      CHECK(coboundary(negation_witness(n, j)) == f - aut_pullback(f));
    }
}

TEST_CASE("cyclic class invariant agrees with the solver") {
  CHECK(cyclic_class_invariant(Cochain(FiniteAbelianGroup::cyclic(3), 3)) == 0);
  CHECK(cyclic_class_invariant(standard_cyclic_3cocycle(3, 1)) == 1);
  CHECK(cyclic_class_invariant(standard_cyclic_3cocycle(4, 2)) == 2);
  std::mt19937 rng(41);
  for (int k = 2; k <= 5; ++k) {
    const auto g = FiniteAbelianGroup::cyclic(k);
    for (int t = 0; t < 6; ++t) {
      const int j = int(rng() % unsigned(k));
      const auto phi = standard_cyclic_3cocycle(k, j) + coboundary(random_cochain(rng, g, 2));
      const int idx = cyclic_class_invariant(phi);
      CHECK(idx == j);
      CHECK(cohomologous(phi, standard_cyclic_3cocycle(k, idx)).has_value());
    }
  }
  CHECK(kind_of([] { (void)cyclic_class_invariant(klein_cocycles()[0]); }) == ErrorKind::NotCyclic);
}
