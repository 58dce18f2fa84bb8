#include "sutwist/spin.hpp"

#include <bit>
#include <sstream>

#include "sutwist/error.hpp"

namespace sutwist::spin {

namespace {

void require_odd(int n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorKind::InvalidInput, "spin modules need odd n >= 3, got " +
                                             std::to_string(n));
}

int below(unsigned X, int i) { return std::popcount(X & ((1u << (i - 1)) - 1u)); }

bool parity_accepts(Parity p, unsigned mask) {
  const bool odd = std::popcount(mask) % 2 == 1;
  return p == Parity::Full || (p == Parity::Odd) == odd;
}

// Integer form (e_a, e_b)_Q with e_{n+i} dual to e_i.
int form(int n, int a, int b) { return (a - b == n || b - a == n) ? 1 : 0; }

std::optional<SignedSubset> clifford_op(int n, int a, unsigned X) {
  return a <= n ? wedge(a, X) : contract(a - n, X);
}

int clifford_sign(int n, int a) { return a <= n ? 1 : -1; }

HalfLaurent halved(const HalfLaurent& v) {
  HalfLaurent out;
  for (const auto& [e, c] : v.terms()) {
    if (c % 2 != 0)
      throw Error(ErrorKind::InvalidInput, "odd entry in a doubled quadratic element");
    out += HalfLaurent::monomial(c / 2, e);
  }
  return out;
}

std::string gen_name(const Generator& g) {
  switch (g.kind) {
    case GenKind::X: return "X_" + std::to_string(g.i);
    case GenKind::Y: return "Y_" + std::to_string(g.i);
    case GenKind::KHalf: return "K^{1/2}_" + std::to_string(g.i);
    case GenKind::KHalfInv: return "K^{-1/2}_" + std::to_string(g.i);
  }
  return "?";
}

Mode common_mode(std::span<const Representation* const> reps) {
  if (reps.empty()) throw Error(ErrorKind::InvalidInput, "empty tensor product");
  for (const auto* r : reps)
    if (r->mode != reps.front()->mode)
      throw Error(ErrorKind::ModeMismatch, "tensor factors built in different modes");
  return reps.front()->mode;
}

template <class C, class Conv>
BasicTensorVector<C> apply_impl(const Generator& g,
                                std::span<const Representation* const> reps,
                                const BasicTensorVector<C>& v, Conv conv) {
  const bool quantum = common_mode(reps) == Mode::Quantum;
  const std::size_t m = reps.size();
  BasicTensorVector<C> out{v.dims, {}};
  for (const auto& [key, c] : v.entries) {
    if (key.size() != m)
      throw Error(ErrorKind::InvalidInput, "tensor key length differs from factor count");
    if (g.kind == GenKind::KHalf || g.kind == GenKind::KHalfInv) {
      if (!quantum) {
        out.add(key, c);
        continue;
      }
      int e = 0;
      for (std::size_t r = 0; r < m; ++r) e += reps[r]->h(g.i, key[r]);
      if (g.kind == GenKind::KHalfInv) e = -e;
      out.add(key, c * conv(HalfLaurent::q_half_power(e)));
      continue;
    }
    for (std::size_t p = 0; p < m; ++p) {
      const auto& col = reps[p]->op(g.kind, g.i).column(key[p]);
      if (col.empty()) continue;
      int e = 0;
      if (quantum)
        for (std::size_t r = 0; r < m; ++r) {
          if (r < p) e += reps[r]->h(g.i, key[r]);
          if (r > p) e -= reps[r]->h(g.i, key[r]);
        }
      for (const auto& [row, val] : col) {
        auto k2 = key;
        k2[p] = static_cast<std::uint32_t>(row);
        out.add(k2, c * conv(val * HalfLaurent::q_half_power(e)));
      }
    }
  }
  return out;
}

TensorVector scaled(const TensorVector& v, const HalfLaurent& c) {
  TensorVector out{v.dims, {}};
  for (const auto& [k, x] : v.entries) out.add(k, x * c);
  return out;
}

TensorVector plus(TensorVector a, const TensorVector& b) {
  for (const auto& [k, x] : b.entries) a.add(k, x);
  return a;
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::Quantum ? "quantum" : "classical"; }

SubsetBasis::SubsetBasis(int n, Parity parity) : n_(n), parity_(parity) {
  if (n < 1 || n > 20) throw Error(ErrorKind::InvalidInput, "subset basis size out of range");
  lookup_.assign(std::size_t(1) << n, -1);
  for (unsigned m = 0; m < (1u << n); ++m)
    if (parity_accepts(parity, m)) {
      lookup_[m] = static_cast<int>(masks_.size());
      masks_.push_back(m);
    }
}

std::optional<std::size_t> SubsetBasis::index_of(unsigned mask) const {
  if (mask >= lookup_.size() || lookup_[mask] < 0) return std::nullopt;
  return static_cast<std::size_t>(lookup_[mask]);
}

std::optional<SignedSubset> wedge(int i, unsigned X) {
  const unsigned bit = 1u << (i - 1);
  if (X & bit) return std::nullopt;
  return SignedSubset{below(X, i) % 2 ? -1 : 1, X | bit};
}

std::optional<SignedSubset> contract(int i, unsigned X) {
  const unsigned bit = 1u << (i - 1);
  if (!(X & bit)) return std::nullopt;
  return SignedSubset{below(X, i) % 2 ? -1 : 1, X & ~bit};
}

SpinOperator::SpinOperator(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SpinOperator SpinOperator::identity(std::size_t dim) {
  SpinOperator m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.add(i, i, 1);
  return m;
}

SpinOperator SpinOperator::diagonal(const std::vector<HalfLaurent>& d) {
  SpinOperator m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.add(i, i, d[i]);
  return m;
}

std::size_t SpinOperator::nonzeros() const {
  std::size_t s = 0;
  for (const auto& c : cols_) s += c.size();
  return s;
}

void SpinOperator::add(std::size_t row, std::size_t col, const HalfLaurent& v) {
  if (row >= rows_ || col >= cols_.size())
    throw Error(ErrorKind::InvalidInput, "operator index out of range");
  if (v.is_zero()) return;
  auto& c = cols_[col];
  auto [it, fresh] = c.try_emplace(row, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

HalfLaurent SpinOperator::at(std::size_t row, std::size_t col) const {
  const auto& c = cols_.at(col);
  auto it = c.find(row);
  return it == c.end() ? HalfLaurent() : it->second;
}

SpinOperator& SpinOperator::operator+=(const SpinOperator& o) {
  if (o.rows_ != rows_ || o.cols() != cols())
    throw Error(ErrorKind::InvalidInput, "operator shapes differ");
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : o.cols_[c]) add(r, c, v);
  return *this;
}

SpinOperator& SpinOperator::operator-=(const SpinOperator& o) {
  return *this += o.scaled(-1);
}

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidInput, "operator shapes differ");
  SpinOperator out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (const auto& [k, bv] : b.column(c))
      for (const auto& [r, av] : a.column(k)) out.add(r, c, av * bv);
  return out;
}

SpinOperator SpinOperator::scaled(const HalfLaurent& c) const {
  SpinOperator out(rows_, cols());
  for (std::size_t col = 0; col < cols(); ++col)
    for (const auto& [r, v] : cols_[col]) out.add(r, col, v * c);
  return out;
}

SpinOperator commutator(const SpinOperator& a, const SpinOperator& b) {
  return a * b - b * a;
}

int h_of_weight(const std::vector<int>& w2, int i) {
  const int n = static_cast<int>(w2.size());
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidInput, "generator index out of range");
  if (i < n) return (w2[std::size_t(i - 1)] - w2[std::size_t(i)]) / 2;
  return (w2[std::size_t(n - 2)] + w2[std::size_t(n - 1)]) / 2;
}

int Representation::h(int i, std::size_t b) const { return h_of_weight(weights2[b], i); }

SpinOperator Representation::H(int i) const {
  std::vector<HalfLaurent> d;
  for (std::size_t b = 0; b < dim(); ++b) d.emplace_back(h(i, b));
  return SpinOperator::diagonal(d);
}

SpinOperator Representation::K_half(int i, int sign) const {
  if (mode == Mode::Classical) return SpinOperator::identity(dim());
  std::vector<HalfLaurent> d;
  for (std::size_t b = 0; b < dim(); ++b) d.push_back(HalfLaurent::q_half_power(sign * h(i, b)));
  return SpinOperator::diagonal(d);
}

const SpinOperator& Representation::op(GenKind kind, int i) const {
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidInput, "generator index out of range");
  if (kind == GenKind::X) return X[std::size_t(i - 1)];
  if (kind == GenKind::Y) return Y[std::size_t(i - 1)];
  throw Error(ErrorKind::InvalidInput, "K generators are diagonal and not stored");
}

std::pair<int, int> generator_pair(GenKind kind, int i, int n) {
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidInput, "generator index out of range");
  if (kind == GenKind::X) return i < n ? std::pair{n + i + 1, i} : std::pair{n, n - 1};
  if (kind == GenKind::Y) return i < n ? std::pair{n + i, i + 1} : std::pair{2 * n, 2 * n - 1};
  throw Error(ErrorKind::InvalidInput, "K generators have no wedge form");
}

SpinOperator vector_wedge_action(int n, int a, int b) {
  const std::size_t d = std::size_t(2 * n);
  SpinOperator m(d, d);
  for (int c = 1; c <= 2 * n; ++c) {
    if (int f = form(n, b, c)) m.add(std::size_t(a - 1), std::size_t(c - 1), -f);
    if (int f = form(n, a, c)) m.add(std::size_t(b - 1), std::size_t(c - 1), f);
  }
  return m;
}

SpinOperator clifford_product(int n, int a, int b) {
  const std::size_t d = std::size_t(1) << n;
  SpinOperator m(d, d);
  const int s = 2 * clifford_sign(n, a) * clifford_sign(n, b);
  for (unsigned X = 0; X < d; ++X) {
    auto r1 = clifford_op(n, b, X);
    if (!r1) continue;
    auto r2 = clifford_op(n, a, r1->mask);
    if (!r2) continue;
    m.add(r2->mask, X, s * r1->sign * r2->sign);
  }
  return m;
}

SpinOperator clifford_quadratic_doubled(int n, int a, int b) {
  auto m = clifford_product(n, a, b);
  if (int f = form(n, a, b)) m += SpinOperator::identity(m.rows()).scaled(f);
  return m;
}

Representation build_vector_rep(int n, Mode mode) {
  require_odd(n);
  Representation r{n, mode, "V", {}, {}, {}, {}};
  for (int a = 1; a <= 2 * n; ++a) {
    std::vector<int> w(std::size_t(n), 0);
    if (a <= n)
      w[std::size_t(a - 1)] = 2;
    else
      w[std::size_t(a - n - 1)] = -2;
    r.weights2.push_back(std::move(w));
  }
  for (int i = 1; i <= n; ++i) {
    auto [xa, xb] = generator_pair(GenKind::X, i, n);
    auto [ya, yb] = generator_pair(GenKind::Y, i, n);
    r.X.push_back(vector_wedge_action(n, xa, xb));
    r.Y.push_back(vector_wedge_action(n, ya, yb));
  }
  return r;
}

Representation build_spin_rep(int n, Mode mode, Parity parity) {
  require_odd(n);
  SubsetBasis basis(n, parity);
  Representation r{n, mode, parity == Parity::Odd ? "U+" : parity == Parity::Even ? "U-" : "S",
                   {}, {}, {}, basis.masks()};
  for (unsigned m : basis.masks()) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) w[std::size_t(k - 1)] = (m >> (k - 1)) & 1u ? 1 : -1;
    r.weights2.push_back(std::move(w));
  }
  auto restrict_to = [&](const SpinOperator& full) {
    SpinOperator out(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (const auto& [row, v] : full.column(basis.mask(c))) {
        auto idx = basis.index_of(static_cast<unsigned>(row));
        if (!idx) throw Error(ErrorKind::InvalidInput, "generator leaves the parity subspace");
        out.add(*idx, c, v);
      }
    return out;
  };
  for (int i = 1; i <= n; ++i) {
    auto [xa, xb] = generator_pair(GenKind::X, i, n);
    auto [ya, yb] = generator_pair(GenKind::Y, i, n);
    r.X.push_back(restrict_to(clifford_quadratic_doubled(n, xa, xb)));
    r.Y.push_back(restrict_to(clifford_quadratic_doubled(n, ya, yb)));
  }
  for (auto* ops : {&r.X, &r.Y})
    for (auto& m : *ops) {
      SpinOperator half(m.rows(), m.cols());
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [row, v] : m.column(c)) half.add(row, c, halved(v));
      m = std::move(half);
    }
  return r;
}

RationalTensor evaluate(const TensorVector& v, const Rational& q0) {
  RationalTensor out{v.dims, {}};
  for (const auto& [k, c] : v.entries) out.add(k, c.eval(q0));
  return out;
}

std::optional<std::vector<int>> tensor_weight(const TensorVector& v,
                                              std::span<const Representation* const> reps) {
  std::optional<std::vector<int>> w;
  for (const auto& [k, c] : v.entries) {
    std::vector<int> s(reps.front()->weights2.front().size(), 0);
    for (std::size_t r = 0; r < reps.size(); ++r)
      for (std::size_t j = 0; j < s.size(); ++j) s[j] += reps[r]->weights2[k[r]][j];
    if (w && *w != s) return std::nullopt;
    w = std::move(s);
  }
  return w;
}

TensorVector apply_coproduct(const Generator& g, std::span<const Representation* const> reps,
                             const TensorVector& v) {
  return apply_impl(g, reps, v, [](const HalfLaurent& x) { return x; });
}

RationalTensor apply_coproduct(const Generator& g, std::span<const Representation* const> reps,
                               const RationalTensor& v, const Rational& q0) {
  return apply_impl(g, reps, v, [&](const HalfLaurent& x) { return x.eval(q0); });
}

SpinOperator coproduct_action(const Generator& g, std::span<const Representation* const> reps) {
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (const auto* r : reps) {
    dims.push_back(r->dim());
    total *= r->dim();
  }
  auto encode = [&](const TensorVector::Key& k) {
    std::size_t idx = 0;
    for (std::size_t r = 0; r < dims.size(); ++r) idx = idx * dims[r] + k[r];
    return idx;
  };
  SpinOperator out(total, total);
  for (std::size_t col = 0; col < total; ++col) {
    TensorVector::Key k(dims.size());
    std::size_t rest = col;
    for (std::size_t r = dims.size(); r-- > 0;) {
      k[r] = static_cast<std::uint32_t>(rest % dims[r]);
      rest /= dims[r];
    }
    TensorVector unit{dims, {}};
    unit.add(k, 1);
    for (const auto& [k2, c] : apply_coproduct(g, reps, unit).entries) out.add(encode(k2), col, c);
  }
  return out;
}

SigmaValue sigma_index(int i, unsigned X, int n, Mode mode) {
  if (i < 1 || i > 2 * n) throw Error(ErrorKind::InvalidInput, "sigma index out of range");
  long I1 = -static_cast<long>(std::popcount(X)) * n;
  for (int k = 1; k <= n; ++k)
    if ((X >> (k - 1)) & 1u) I1 += k;
  const long I = i <= n ? I1 + below(X, i) - (i - 1) : I1 + below(X, i - n) - (n - 1);
  const int sign = I % 2 == 0 ? 1 : -1;
  if (mode == Mode::Classical) return {I, HalfLaurent(sign)};
  return {I, HalfLaurent::monomial(sign, static_cast<int>(2 * I))};
}

TensorVector tilde_e(int i, int n, Mode mode) {
  require_odd(n);
  if (i < 1 || i > 2 * n) throw Error(ErrorKind::InvalidInput, "tilde_e index out of range");
  const SubsetBasis U(n, Parity::Odd);
  TensorVector out{{U.size(), U.size()}, {}};
  const unsigned full = (1u << n) - 1u;
  const int base = i <= n ? i : i - n;
  const unsigned bit = 1u << (base - 1);
  const unsigned rest = full & ~bit;
  const int outer = i <= n ? 1 : (base % 2 == 0 ? 1 : -1);
  for (unsigned S = 0; S <= full; ++S) {
    if (S & ~rest) continue;
    const unsigned Xp = i <= n ? (S | bit) : S;
    const unsigned Xpp = i <= n ? ((rest & ~S) | bit) : (rest & ~S);
    if (std::popcount(Xp) % 2 == 0) continue;
    auto s = sigma_index(i, Xp, n, mode);
    out.add({static_cast<std::uint32_t>(*U.index_of(Xp)),
             static_cast<std::uint32_t>(*U.index_of(Xpp))},
            s.coeff * HalfLaurent(outer));
  }
  return out;
}

IntertwinerReport check_V_intertwiner(int n, Mode mode) {
  std::vector<TensorVector> images;
  for (int a = 1; a <= 2 * n; ++a) images.push_back(tilde_e(a, n, mode));
  return check_V_intertwiner(n, mode, images);
}

IntertwinerReport check_V_intertwiner(int n, Mode mode,
                                      const std::vector<TensorVector>& images) {
  const auto V = build_vector_rep(n, mode);
  const auto U = build_spin_rep(n, mode, Parity::Odd);
  if (images.size() != V.dim())
    throw Error(ErrorKind::InvalidInput, "need one image per vector basis element");
  const Representation* reps[] = {&U, &U};
  for (GenKind kind : {GenKind::X, GenKind::Y, GenKind::KHalf})
    for (int i = 1; i <= n; ++i) {
      const Generator g{kind, i};
      const SpinOperator vop = kind == GenKind::KHalf ? V.K_half(i) : V.op(kind, i);
      for (std::size_t a = 0; a < V.dim(); ++a) {
        TensorVector lhs{images[a].dims, {}};
        for (const auto& [r, c] : vop.column(a)) lhs = plus(lhs, scaled(images[r], c));
        const auto rhs = apply_coproduct(g, reps, images[a]);
        if (lhs != rhs) {
          std::ostringstream os;
          os << gen_name(g) << " on e_" << (a + 1) << " (" << to_string(mode) << ")";
          return {false, os.str()};
        }
      }
    }
  return {};
}

GH embeddings_g_h(int n, Mode mode) {
  const SubsetBasis U(n, Parity::Odd);
  GH out{{{U.size(), U.size(), U.size()}, {}}, {{U.size(), U.size(), U.size()}, {}}};
  const bool quantum = mode == Mode::Quantum;
  for (int i = 1; i <= n; ++i) {
    const auto single = static_cast<std::uint32_t>(*U.index_of(1u << (i - 1)));
    const auto t = tilde_e(n + i, n, mode);
    const HalfLaurent wg = quantum ? HalfLaurent::q_half_power(2 * i) : HalfLaurent(1);
    const HalfLaurent wh = quantum ? HalfLaurent::q_half_power(-2 * i) : HalfLaurent(1);
    for (const auto& [k, c] : t.entries) {
      out.g.add({single, k[0], k[1]}, wg * c);
      out.h.add({k[0], k[1], single}, wh * c);
    }
  }
  return out;
}

HalfLaurent pairing_gh(int n, Mode mode) {
  const auto [g, h] = embeddings_g_h(n, mode);
  HalfLaurent s;
  for (const auto& [k, c] : g.entries) s += c * h.at(k);
  return s;
}

long pairing_closed_form(int n) {
  const long v = static_cast<long>(n) * (n - 1);
  return ((n + 1) / 2) % 2 == 0 ? v : -v;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      const Rational f = rows[o][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!rows[r][k].is_zero()) rows[o][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(ncols);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

InvariantF invariant_f(int n, const Rational& q0) {
  require_odd(n);
  if (n != 3) throw Error(ErrorKind::InvalidInput, "invariant_f is implemented for n = 3");
  if (q0.sign() <= 0) throw Error(ErrorKind::InvalidInput, "q0 must be positive");
  const auto V = build_vector_rep(n, Mode::Quantum);
  const auto U = build_spin_rep(n, Mode::Quantum, Parity::Odd);
  const Representation* reps[] = {&U, &V, &U};
  const std::vector<std::size_t> dims{U.dim(), V.dim(), U.dim()};
  const std::size_t total = dims[0] * dims[1] * dims[2];
  auto decode = [&](std::size_t idx) {
    RationalTensor::Key k(3);
    k[2] = static_cast<std::uint32_t>(idx % dims[2]);
    idx /= dims[2];
    k[1] = static_cast<std::uint32_t>(idx % dims[1]);
    k[0] = static_cast<std::uint32_t>(idx / dims[1]);
    return k;
  };
  auto encode = [&](const RationalTensor::Key& k) {
    return (std::size_t(k[0]) * dims[1] + k[1]) * dims[2] + k[2];
  };

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  std::vector<std::vector<Rational>> rows;
  for (GenKind kind : {GenKind::X, GenKind::Y})
    for (int i = 1; i <= n; ++i) {
      const std::size_t gid = std::size_t(kind == GenKind::X ? i : n + i);
      for (std::size_t col = 0; col < total; ++col) {
        RationalTensor unit{dims, {}};
        unit.add(decode(col), 1);
        for (const auto& [k, c] : apply_coproduct({kind, i}, reps, unit, q0).entries) {
          auto [it, fresh] = row_of.try_emplace({gid, encode(k)}, rows.size());
          if (fresh) rows.emplace_back(total);
          rows[it->second][col] += c;
        }
      }
    }
  const auto ker = nullspace(std::move(rows), total);
  if (ker.size() != 1)
    throw Error(ErrorKind::MultiplicityNotOne,
                "invariant space of U+ x V x U+ has dimension " + std::to_string(ker.size()));

  InvariantF out{{dims, {}}, {{U.dim(), U.dim(), U.dim(), U.dim()}, {}}};
  std::optional<Rational> lead;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (ker[0][idx].is_zero()) continue;
    if (!lead) lead = ker[0][idx];
    out.kernel_vector.add(decode(idx), ker[0][idx] / *lead);
  }
  std::vector<RationalTensor> images;
  for (int a = 1; a <= 2 * n; ++a) images.push_back(evaluate(tilde_e(a, n, Mode::Quantum), q0));
  for (const auto& [k, c] : out.kernel_vector.entries)
    for (const auto& [t, tc] : images[k[1]].entries) out.f.add({k[0], t[0], t[1], k[2]}, c * tc);
  return out;
}

A1Result theorem_a1_check(int n, const Rational& q0) {
  const auto inv = invariant_f(n, q0);
  const std::size_t d = inv.f.dims.front();
  std::map<RationalTensor::Key, std::vector<std::pair<std::uint32_t, Rational>>> by_prefix;
  for (const auto& [k, c] : inv.f.entries) by_prefix[{k[0], k[1], k[2]}].push_back({k[3], c});
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
  for (const auto& [k, c] : inv.f.entries) {
    auto it = by_prefix.find({k[1], k[2], k[3]});
    if (it == by_prefix.end()) continue;
    for (const auto& [x, c2] : it->second) M[k[0]][x] += c * c2;
  }
  A1Result res;
  res.dim = d;
  res.scalar = true;
  res.scalar_value = M[0][0];
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t x = 0; x < d; ++x) {
      if (!M[a][x].is_zero()) res.nonzero = true;
      if (a == x ? M[a][x] != res.scalar_value : !M[a][x].is_zero()) res.scalar = false;
    }
  return res;
}

}  // namespace sutwist::spin
