#include <doctest.h>

#include <bit>

#include "sutwist/error.hpp"
#include "sutwist/spin.hpp"

using namespace sutwist;
using namespace sutwist::spin;

namespace {

SpinOperator e_matrix(int n, std::initializer_list<std::tuple<int, int, int>> entries) {
  SpinOperator m(std::size_t(2 * n), std::size_t(2 * n));
  for (auto [r, c, v] : entries) m.add(std::size_t(r - 1), std::size_t(c - 1), v);
  return m;
}

// Operator on S from a composition of wedge/contraction steps, rightmost first.
struct Step {
  bool is_wedge;
  int i;
};
SpinOperator compose(int n, std::vector<Step> steps, int sign) {
  const std::size_t d = std::size_t(1) << n;
  SpinOperator m(d, d);
  for (unsigned X = 0; X < d; ++X) {
    int s = sign;
    unsigned Y = X;
    bool alive = true;
    for (auto it = steps.rbegin(); it != steps.rend() && alive; ++it) {
      auto r = it->is_wedge ? wedge(it->i, Y) : contract(it->i, Y);
      if (!r) alive = false;
      else {
        s *= r->sign;
        Y = r->mask;
      }
    }
    if (alive) m.add(Y, X, s);
  }
  return m;
}

SpinOperator restrict_odd(int n, const SpinOperator& full) {
  SubsetBasis b(n, Parity::Odd);
  SpinOperator out(b.size(), b.size());
  for (std::size_t c = 0; c < b.size(); ++c)
    for (const auto& [r, v] : full.column(b.mask(c))) out.add(*b.index_of(unsigned(r)), c, v);
  return out;
}

std::vector<int> root2(int n, int i) {
  std::vector<int> a(std::size_t(n), 0);
  if (i < n) {
    a[std::size_t(i - 1)] = 2;
    a[std::size_t(i)] = -2;
  } else {
    a[std::size_t(n - 2)] = 2;
    a[std::size_t(n - 1)] = 2;
  }
  return a;
}

// Cartan matrix of D_n: chain 1 - ... - (n-1), node n joined to n-2.
int cartan(int n, int i, int j) {
  if (i == j) return 2;
  auto joined = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return (b < n && b == a + 1) || (b == n && a == n - 2);
  };
  return joined(i, j) ? -1 : 0;
}

// The displayed X_n, Y_n satisfy [X_n, Y_n] = -H_n.
int bracket_sign(int n, int i) { return i == n ? -1 : 1; }

// Independent restatement of the index formulas.
long I_oracle(int i, unsigned X, int n) {
  long I1 = 0;
  int size = 0, below_i = 0;
  const int base = i <= n ? i : i - n;
  for (int k = 1; k <= n; ++k)
    if (X >> (k - 1) & 1u) {
      I1 += k;
      ++size;
      if (k < base) ++below_i;
    }
  I1 -= long(size) * n;
  return i <= n ? I1 + below_i - (i - 1) : I1 + below_i - (n - 1);
}

unsigned bits(std::initializer_list<int> xs) {
  unsigned m = 0;
  for (int x : xs) m |= 1u << (x - 1);
  return m;
}

std::uint32_t odd_index(int n, unsigned mask) {
  return static_cast<std::uint32_t>(*SubsetBasis(n, Parity::Odd).index_of(mask));
}

const HalfLaurent q_half = HalfLaurent::q_half_power(1);

}  // namespace

TEST_CASE("subset bases") {
  SubsetBasis odd(3, Parity::Odd), even(3, Parity::Even), full(3, Parity::Full);
  CHECK(odd.size() == 4);
  CHECK(even.size() == 4);
  CHECK(full.size() == 8);
  CHECK(odd.masks() == std::vector<unsigned>{1, 2, 4, 7});
  CHECK_FALSE(odd.index_of(3).has_value());
  CHECK(*full.index_of(5) == 5);
  CHECK(SubsetBasis(5, Parity::Odd).size() == 16);
}

TEST_CASE("wedge and contraction signs") {
  // e_2 ^ e_{1,3} = -e_{1,2,3}
  auto r = wedge(2, bits({1, 3}));
  REQUIRE(r);
  CHECK(r->sign == -1);
  CHECK(r->mask == bits({1, 2, 3}));
  CHECK_FALSE(wedge(1, bits({1})).has_value());
  r = contract(3, bits({1, 2, 3}));
  REQUIRE(r);
  CHECK(r->sign == 1);
  CHECK(r->mask == bits({1, 2}));
  CHECK_FALSE(contract(2, bits({1})).has_value());
}

TEST_CASE("Clifford relations on basis pairs") {
  for (int n : {3, 5}) {
    const auto id = SpinOperator::identity(std::size_t(1) << n);
    for (int a = 1; a <= 2 * n; ++a)
      for (int b = 1; b <= 2 * n; ++b) {
        const int form = std::abs(a - b) == n ? 1 : 0;
        CHECK(clifford_product(n, a, b) + clifford_product(n, b, a) == id.scaled(-2 * form));
      }
  }
}

TEST_CASE("quadratic elements act by half-integers on e_X") {
  const int n = 3;
  for (int i = 1; i <= n; ++i) {
    const auto m = clifford_quadratic_doubled(n, n + i, i);
    for (unsigned X = 0; X < 8u; ++X) {
      for (unsigned Y = 0; Y < 8u; ++Y)
        if (X != Y) CHECK(m.at(Y, X).is_zero());
      CHECK(m.at(X, X) == HalfLaurent((X >> (i - 1) & 1u) ? 1 : -1));
    }
  }
}

TEST_CASE("spin generators agree with the compact formulas") {
  for (int n : {3, 5}) {
    const auto S = build_spin_rep(n, Mode::Classical, Parity::Full);
    const auto U = build_spin_rep(n, Mode::Classical, Parity::Odd);
    for (int i = 1; i < n; ++i) {
      const auto x = compose(n, {{false, i + 1}, {true, i}}, -1);
      const auto y = compose(n, {{false, i}, {true, i + 1}}, -1);
      CHECK(S.X[std::size_t(i - 1)] == x);
      CHECK(S.Y[std::size_t(i - 1)] == y);
      CHECK(U.X[std::size_t(i - 1)] == restrict_odd(n, x));
    }
    CHECK(S.X[std::size_t(n - 1)] == compose(n, {{true, n}, {true, n - 1}}, 1));
    CHECK(S.Y[std::size_t(n - 1)] == compose(n, {{false, n}, {false, n - 1}}, 1));
  }
}

TEST_CASE("vector representation matches the displayed matrices") {
  const int n = 3;
  const auto V = build_vector_rep(n, Mode::Quantum);
  CHECK(V.X[0] == e_matrix(n, {{1, 2, 1}, {5, 4, -1}}));
  CHECK(V.X[1] == e_matrix(n, {{2, 3, 1}, {6, 5, -1}}));
  CHECK(V.X[2] == e_matrix(n, {{2, 6, 1}, {3, 5, -1}}));
  CHECK(V.Y[0] == e_matrix(n, {{2, 1, 1}, {4, 5, -1}}));
  CHECK(V.Y[1] == e_matrix(n, {{3, 2, 1}, {5, 6, -1}}));
  CHECK(V.Y[2] == e_matrix(n, {{5, 3, 1}, {6, 2, -1}}));
}

TEST_CASE("vector representation weights") {
  for (int n : {3, 5}) {
    const auto V = build_vector_rep(n, Mode::Quantum);
    CHECK(V.H(1).at(0, 0) == HalfLaurent(1));
    for (int i = 1; i <= n; ++i) {
      CHECK(V.X[std::size_t(i - 1)].column(0).empty());
      CHECK(commutator(V.X[std::size_t(i - 1)], V.Y[std::size_t(i - 1)]) ==
            V.H(i).scaled(bracket_sign(n, i)));
      const auto K = V.K_half(i);
      for (std::size_t b = 0; b < V.dim(); ++b) {
        const auto k = K.at(b, b);
        CHECK((k == HalfLaurent(1) || k == q_half || k == HalfLaurent::q_half_power(-1)));
      }
    }
  }
  CHECK(build_vector_rep(3, Mode::Classical).K_half(1) == SpinOperator::identity(6));
}

TEST_CASE("spin representation weights") {
  const int n = 3;
  const auto S = build_spin_rep(n, Mode::Classical, Parity::Full);
  for (std::size_t b = 0; b < S.dim(); ++b)
    for (int k = 1; k <= n; ++k)
      CHECK(S.weights2[b][std::size_t(k - 1)] == ((S.masks[b] >> (k - 1) & 1u) ? 1 : -1));
  const auto U = build_spin_rep(n, Mode::Classical, Parity::Odd);
  const auto top = *SubsetBasis(n, Parity::Odd).index_of(bits({1, 2, 3}));
  for (int i = 1; i <= n; ++i) CHECK(U.X[std::size_t(i - 1)].column(top).empty());
  const auto Um = build_spin_rep(n, Mode::Classical, Parity::Even);
  const auto bottom = *SubsetBasis(n, Parity::Even).index_of(0);
  CHECK(Um.weights2[bottom] == std::vector<int>{-1, -1, -1});
  for (int i = 1; i <= n; ++i) CHECK(Um.Y[std::size_t(i - 1)].column(bottom).empty());
}

TEST_CASE("generators shift weights by simple roots and obey the D_n Cartan matrix") {
  for (int n : {3, 5}) {
    const auto V = build_vector_rep(n, Mode::Classical);
    const auto S = build_spin_rep(n, Mode::Classical, Parity::Full);
    for (const Representation* R : {&V, &S})
      for (int i = 1; i <= n; ++i) {
        const auto a = root2(n, i);
        const auto& X = R->X[std::size_t(i - 1)];
        const auto& Y = R->Y[std::size_t(i - 1)];
        for (std::size_t c = 0; c < R->dim(); ++c) {
          for (const auto& [r, v] : X.column(c))
            for (int k = 0; k < n; ++k)
              CHECK(R->weights2[r][std::size_t(k)] == R->weights2[c][std::size_t(k)] + a[std::size_t(k)]);
          for (const auto& [r, v] : Y.column(c))
            for (int k = 0; k < n; ++k)
              CHECK(R->weights2[r][std::size_t(k)] == R->weights2[c][std::size_t(k)] - a[std::size_t(k)]);
        }
        CHECK(commutator(X, Y) == R->H(i).scaled(bracket_sign(n, i)));
        for (int j = 1; j <= n; ++j) {
          CHECK(commutator(R->H(i), R->X[std::size_t(j - 1)]) ==
                R->X[std::size_t(j - 1)].scaled(cartan(n, j, i)));
          if (i != j) CHECK(commutator(X, R->Y[std::size_t(j - 1)]).is_zero());
        }
      }
  }
}

TEST_CASE("coproducts") {
  const int n = 3;
  const auto U = build_spin_rep(n, Mode::Quantum, Parity::Odd);
  const auto V = build_vector_rep(n, Mode::Quantum);
  const Representation* uv[] = {&U, &V};
  // K^{1/2} multiplies the factor eigenvalues.
  TensorVector w{{U.dim(), V.dim()}, {}};
  w.add({3, 0}, 1);
  const auto kw = apply_coproduct({GenKind::KHalf, 1}, uv, w);
  CHECK(kw.at({3, 0}) == HalfLaurent::q_half_power(U.h(1, 3) + V.h(1, 0)));

  // Classical limit: X x 1 + 1 x X.
  const auto Uc = build_spin_rep(n, Mode::Classical, Parity::Odd);
  const auto Vc = build_vector_rep(n, Mode::Classical);
  const Representation* uvc[] = {&Uc, &Vc};
  for (int i = 1; i <= n; ++i) {
    const auto D = coproduct_action({GenKind::X, i}, uvc);
    SpinOperator expect(D.rows(), D.cols());
    const auto& xu = Uc.X[std::size_t(i - 1)];
    const auto& xv = Vc.X[std::size_t(i - 1)];
    for (std::size_t a = 0; a < Uc.dim(); ++a)
      for (std::size_t b = 0; b < Vc.dim(); ++b) {
        const std::size_t col = a * Vc.dim() + b;
        for (const auto& [r, v] : xu.column(a)) expect.add(r * Vc.dim() + b, col, v);
        for (const auto& [r, v] : xv.column(b)) expect.add(a * Vc.dim() + r, col, v);
      }
    CHECK(D == expect);
  }

  const Representation* mixed[] = {&U, &Vc};
  try {
    (void)coproduct_action({GenKind::X, 1}, mixed);
    FAIL("expected ModeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModeMismatch);
  }
}

TEST_CASE("coproducts respect the generator relations on tensor products") {
  // [Delta X_i, Delta Y_i] = [H_i]_{q^{1/2}} style identity checked through
  // K: Delta(K^{1/2}) Delta(X_i) Delta(K^{-1/2}) = q Delta(X_i).
  const int n = 3;
  const auto U = build_spin_rep(n, Mode::Quantum, Parity::Odd);
  const Representation* uu[] = {&U, &U};
  for (int i = 1; i <= n; ++i) {
    const auto K = coproduct_action({GenKind::KHalf, i}, uu);
    const auto Kinv = coproduct_action({GenKind::KHalfInv, i}, uu);
    const auto X = coproduct_action({GenKind::X, i}, uu);
    CHECK(K * Kinv == SpinOperator::identity(K.rows()));
    CHECK(K * X * Kinv == X.scaled(HalfLaurent::q_half_power(2)));
  }
}

TEST_CASE("sigma index") {
  const int n = 3;
  CHECK(sigma_index(1, bits({1, 2, 3}), n, Mode::Classical).I == n * (n + 1) / 2 - n * n);
  CHECK(sigma_index(1, bits({1}), n, Mode::Classical).coeff == HalfLaurent(1));
  CHECK(sigma_index(1, bits({1, 2, 3}), n, Mode::Classical).coeff == HalfLaurent(-1));
  CHECK(sigma_index(1, bits({1, 2, 3}), n, Mode::Quantum).coeff == HalfLaurent::monomial(-1, -6));
  for (int nn : {3, 5})
    for (int i = 1; i <= 2 * nn; ++i)
      for (unsigned X = 0; X < (1u << nn); ++X)
        CHECK(sigma_index(i, X, nn, Mode::Classical).I == I_oracle(i, X, nn));
}

TEST_CASE("tilde e vectors") {
  const int n = 3;
  const auto one = odd_index(n, bits({1})), all = odd_index(n, bits({1, 2, 3}));
  TensorVector want{{4, 4}, {}};
  want.add({one, all}, 1);
  want.add({all, one}, -1);
  CHECK(tilde_e(1, n, Mode::Classical) == want);
  TensorVector wantq{{4, 4}, {}};
  wantq.add({one, all}, HalfLaurent::q_half_power(-4));
  wantq.add({all, one}, HalfLaurent::monomial(-1, -6));
  CHECK(tilde_e(1, n, Mode::Quantum) == wantq);

  const auto U = build_spin_rep(n, Mode::Classical, Parity::Odd);
  const Representation* uu[] = {&U, &U};
  for (int i = 1; i <= n; ++i) {
    std::vector<int> li(std::size_t(n), 0);
    li[std::size_t(i - 1)] = 2;
    CHECK(tensor_weight(tilde_e(i, n, Mode::Classical), uu) == li);
    li[std::size_t(i - 1)] = -2;
    CHECK(tensor_weight(tilde_e(n + i, n, Mode::Classical), uu) == li);
  }
}

TEST_CASE("tilde e_1 is a highest weight vector") {
  for (int n : {3, 5})
    for (auto mode : {Mode::Classical, Mode::Quantum}) {
      const auto U = build_spin_rep(n, mode, Parity::Odd);
      const Representation* uu[] = {&U, &U};
      for (int i = 1; i <= n; ++i)
        CHECK(apply_coproduct({GenKind::X, i}, uu, tilde_e(1, n, mode)).is_zero());
    }
}

TEST_CASE("V embeds into U+ x U+") {
  CHECK(check_V_intertwiner(3, Mode::Classical).ok);
  CHECK(check_V_intertwiner(3, Mode::Quantum).ok);
  CHECK(check_V_intertwiner(5, Mode::Classical).ok);
  CHECK(check_V_intertwiner(5, Mode::Quantum).ok);
}

TEST_CASE("a flipped sign in tilde e_1 breaks the intertwiner") {
  for (auto mode : {Mode::Classical, Mode::Quantum}) {
    const int n = 3;
    std::vector<TensorVector> images;
    for (int a = 1; a <= 2 * n; ++a) images.push_back(tilde_e(a, n, mode));
    auto& first = images[0].entries.begin()->second;
    first = -first;
    const auto rep = check_V_intertwiner(n, mode, images);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.counterexample.empty());
  }
}

TEST_CASE("g and h embeddings") {
  const int n = 3;
  for (auto mode : {Mode::Classical, Mode::Quantum}) {
    const auto U = build_spin_rep(n, mode, Parity::Odd);
    const Representation* uuu[] = {&U, &U, &U};
    const auto [g, h] = embeddings_g_h(n, mode);
    for (int i = 1; i <= n; ++i) {
      CHECK(apply_coproduct({GenKind::Y, i}, uuu, g).is_zero());
      CHECK(apply_coproduct({GenKind::Y, i}, uuu, h).is_zero());
    }
    CHECK(tensor_weight(g, uuu) == std::vector<int>{-1, -1, -1});
  }
  const auto [g, h] = embeddings_g_h(n, Mode::Classical);
  CHECK(g.entries.size() == h.entries.size());
  for (const auto& [k, c] : g.entries) CHECK(h.at({k[1], k[2], k[0]}) == c);
}

TEST_CASE("classical pairing closed form") {
  CHECK(pairing_gh(3, Mode::Classical) == HalfLaurent(6));
  CHECK(pairing_gh(5, Mode::Classical) == HalfLaurent(-20));
  CHECK(pairing_gh(7, Mode::Classical) == HalfLaurent(42));
  CHECK(pairing_closed_form(7) == 42);
}

TEST_CASE("quantum pairing by brute force over ordered pairs") {
  for (int n : {3, 5}) {
    const auto p = pairing_gh(n, Mode::Quantum);
    const int sign = ((n + 1) / 2) % 2 == 0 ? 1 : -1;
    for (const auto& [e, c] : p.terms()) CHECK((c > 0 ? 1 : -1) == sign);
    for (const Rational q0 : {Rational(1, 4), Rational(1, 2), Rational(3), Rational(2, 7)}) {
      Rational brute;
      const unsigned full = (1u << n) - 1u;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const unsigned Xij = full & ~bits({i, j});
          const long e = i - j + I_oracle(n + i, Xij, n) + I_oracle(n + j, bits({i}), n);
          brute += Rational(sign) * q0.pow(e);
        }
      CHECK(p.eval(q0) == brute);
      CHECK(brute.sign() == sign);
    }
  }
}

TEST_CASE("null space") {
  std::vector<std::vector<Rational>> rows{{Rational(1), Rational(2), Rational(3)},
                                          {Rational(2), Rational(4), Rational(6)}};
  const auto ker = nullspace(rows, 3);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(v[0] + Rational(2) * v[1] + Rational(3) * v[2] == Rational(0));
  CHECK(nullspace({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}, 2).empty());
}

TEST_CASE("invariant vector of U+ x V x U+") {
  for (const Rational q0 : {Rational(1), Rational(1, 4)}) {
    const auto inv = invariant_f(3, q0);
    CHECK_FALSE(inv.f.is_zero());
    const auto U = build_spin_rep(3, Mode::Quantum, Parity::Odd);
    const Representation* u4[] = {&U, &U, &U, &U};
    for (int i = 1; i <= 3; ++i) {
      CHECK(apply_coproduct({GenKind::X, i}, u4, inv.f, q0).is_zero());
      CHECK(apply_coproduct({GenKind::Y, i}, u4, inv.f, q0).is_zero());
    }
  }
  CHECK_THROWS_AS(invariant_f(5, Rational(1)), Error);
  try {
    (void)invariant_f(3, Rational(1, 2));
    FAIL("expected NonSquareBase");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSquareBase);
  }
}

TEST_CASE("the composite map on U+ is a nonzero scalar") {
  for (const Rational q0 : {Rational(1), Rational(1, 4), Rational(4)}) {
    const auto r = theorem_a1_check(3, q0);
    CHECK(r.nonzero);
    CHECK(r.scalar);
    CHECK_FALSE(r.scalar_value.is_zero());
  }
}

TEST_CASE("spin modules need odd rank") {
  CHECK_THROWS_AS(build_spin_rep(4, Mode::Classical, Parity::Odd), Error);
  CHECK_THROWS_AS(tilde_e(1, 2, Mode::Classical), Error);
}
