#include "sutwist/cohomology.hpp"

#include <string>

#include "sutwist/error.hpp"

namespace sutwist::cohomology {
namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Alternating bar differential evaluated pointwise. args has degree+1
// entries; c has the given degree.
UnitAngle differential_at(const Cochain& c, std::span<const std::size_t> args) {
  const auto& g = c.group();
  const int k = c.degree();
  std::vector<std::size_t> sub(static_cast<std::size_t>(k));
  UnitAngle sum;
  // i = 0: drop the first argument.
  for (int t = 0; t < k; ++t) sub[t] = args[t + 1];
  sum += c.at(sub);
  // 1 <= i <= k: merge arguments i-1 and i.
  for (int i = 1; i <= k; ++i) {
    int p = 0;
    for (int t = 0; t <= k; ++t) {
      if (t == i) continue;
      if (t == i - 1)
        sub[p++] = g.add(args[t], args[t + 1]);
      else
        sub[p++] = args[t];
    }
    if (i % 2 == 1)
      sum -= c.at(sub);
    else
      sum += c.at(sub);
  }
  // i = k + 1: drop the last argument.
  for (int t = 0; t < k; ++t) sub[t] = args[t];
  if ((k + 1) % 2 == 1)
    sum -= c.at(sub);
  else
    sum += c.at(sub);
  return sum;
}

void tuple_from_index(std::size_t idx, std::size_t order,
                      std::vector<std::size_t>& out) {
  for (std::size_t t = out.size(); t-- > 0;) {
    out[t] = idx % order;
    idx /= order;
  }
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw Error(ErrorKind::InvalidInput, "group needs at least one factor");
  for (int k : factors_) {
    if (k < 1)
      throw Error(ErrorKind::InvalidInput,
                  "cyclic factor order must be >= 1, got " + std::to_string(k));
    order_ *= static_cast<std::size_t>(k);
  }
}

std::vector<int> FiniteAbelianGroup::decode(std::size_t g) const {
  std::vector<int> r(factors_.size());
  for (std::size_t t = factors_.size(); t-- > 0;) {
    r[t] = static_cast<int>(g % static_cast<std::size_t>(factors_[t]));
    g /= static_cast<std::size_t>(factors_[t]);
  }
  return r;
}

std::size_t FiniteAbelianGroup::encode(std::span<const int> residues) const {
  if (residues.size() != factors_.size())
    throw Error(ErrorKind::InvalidInput, "element has wrong number of components");
  std::size_t g = 0;
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    int k = factors_[t];
    int r = ((residues[t] % k) + k) % k;
    g = g * static_cast<std::size_t>(k) + static_cast<std::size_t>(r);
  }
  return g;
}

std::size_t FiniteAbelianGroup::add(std::size_t g, std::size_t h) const {
  if (factors_.size() == 1) return (g + h) % order_;
  auto a = decode(g), b = decode(h);
  for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
  return encode(a);
}

std::size_t FiniteAbelianGroup::neg(std::size_t g) const {
  if (factors_.size() == 1) return (order_ - g) % order_;
  auto a = decode(g);
  for (int& x : a) x = -x;
  return encode(a);
}

Cochain::Cochain(FiniteAbelianGroup group, int degree)
    : group_(std::move(group)), degree_(degree) {
  if (degree_ < 1 || degree_ > 4)
    throw Error(ErrorKind::DegreeMismatch,
                "cochain degree must be in 1..4, got " + std::to_string(degree_));
  table_.resize(ipow(group_.order(), degree_));
}

Cochain::Cochain(FiniteAbelianGroup group, int degree,
                 std::vector<UnitAngle> table)
    : Cochain(std::move(group), degree) {
  if (table.size() != table_.size())
    throw Error(ErrorKind::InvalidInput,
                "cochain table has " + std::to_string(table.size()) +
                    " entries, expected " + std::to_string(table_.size()));
  table_ = std::move(table);
}

std::size_t Cochain::index(std::span<const std::size_t> args) const {
  if (args.size() != static_cast<std::size_t>(degree_))
    throw Error(ErrorKind::DegreeMismatch, "wrong number of cochain arguments");
  std::size_t idx = 0;
  for (std::size_t a : args) idx = idx * group_.order() + a;
  return idx;
}

const UnitAngle& Cochain::at(std::size_t g, std::size_t h) const {
  std::array<std::size_t, 2> a{g, h};
  return at(std::span<const std::size_t>(a));
}

const UnitAngle& Cochain::at(std::size_t g, std::size_t h, std::size_t l) const {
  std::array<std::size_t, 3> a{g, h, l};
  return at(std::span<const std::size_t>(a));
}

bool Cochain::is_zero() const {
  for (const auto& a : table_)
    if (!a.is_zero()) return false;
  return true;
}

Cochain Cochain::operator-() const {
  Cochain r = *this;
  for (auto& a : r.table_) a = -a;
  return r;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (!(a.group_ == b.group_))
    throw Error(ErrorKind::GroupMismatch, "adding cochains on different groups");
  if (a.degree_ != b.degree_)
    throw Error(ErrorKind::DegreeMismatch, "adding cochains of different degree");
  Cochain r = a;
  for (std::size_t i = 0; i < r.table_.size(); ++i) r.table_[i] += b.table_[i];
  return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

namespace {

Cochain coboundary_any(const Cochain& c) {
  Cochain out(c.group(), c.degree() + 1);
  std::vector<std::size_t> args(static_cast<std::size_t>(c.degree() + 1));
  const std::size_t n = out.table().size();
  for (std::size_t idx = 0; idx < n; ++idx) {
    tuple_from_index(idx, c.group().order(), args);
    out.at(args) = differential_at(c, args);
  }
  return out;
}

}  // namespace

Cochain coboundary(const Cochain& c) {
  if (c.degree() != 1 && c.degree() != 2)
    throw Error(ErrorKind::DegreeMismatch,
                "coboundary defined for degree 1 or 2, got " +
                    std::to_string(c.degree()));
  return coboundary_any(c);
}

bool is_cocycle(const Cochain& c) {
  if (c.degree() != 2 && c.degree() != 3)
    throw Error(ErrorKind::DegreeMismatch,
                "cocycle test defined for degree 2 or 3, got " +
                    std::to_string(c.degree()));
  std::vector<std::size_t> args(static_cast<std::size_t>(c.degree() + 1));
  const std::size_t n = ipow(c.group().order(), c.degree() + 1);
  for (std::size_t idx = 0; idx < n; ++idx) {
    tuple_from_index(idx, c.group().order(), args);
    if (!differential_at(c, args).is_zero()) return false;
  }
  return true;
}

IntMatrix differential_matrix(const FiniteAbelianGroup& g, int degree) {
  if (degree < 1 || degree > 3)
    throw Error(ErrorKind::DegreeMismatch, "differential degree must be in 1..3");
  const std::size_t cols = ipow(g.order(), degree);
  const std::size_t rows = cols * g.order();
  IntMatrix d(rows, cols);
  Cochain probe(g, degree);
  std::vector<std::size_t> args(static_cast<std::size_t>(degree + 1));
  std::vector<std::size_t> sub(static_cast<std::size_t>(degree));
  for (std::size_t r = 0; r < rows; ++r) {
    tuple_from_index(r, g.order(), args);
    for (std::size_t t = 0; t < sub.size(); ++t) sub[t] = args[t + 1];
    d(r, probe.index(sub)) += 1;
    for (int i = 1; i <= degree; ++i) {
      int p = 0;
      for (int t = 0; t <= degree; ++t) {
        if (t == i) continue;
        sub[p++] = t == i - 1 ? g.add(args[t], args[t + 1]) : args[t];
      }
      d(r, probe.index(sub)) += i % 2 == 1 ? -1 : 1;
    }
    for (std::size_t t = 0; t < sub.size(); ++t) sub[t] = args[t];
    d(r, probe.index(sub)) += (degree + 1) % 2 == 1 ? -1 : 1;
  }
  return d;
}

CoboundarySolver::CoboundarySolver(FiniteAbelianGroup group, int source_degree)
    : group_(std::move(group)),
      degree_(source_degree),
      snf_(smith_normal_form(differential_matrix(group_, source_degree))) {}

std::optional<Cochain> CoboundarySolver::preimage(const Cochain& target) const {
  if (!(target.group() == group_))
    throw Error(ErrorKind::GroupMismatch, "target lives on a different group");
  if (target.degree() != degree_ + 1)
    throw Error(ErrorKind::DegreeMismatch,
                "target degree must be " + std::to_string(degree_ + 1));
  std::vector<Rational> t;
  t.reserve(target.table().size());
  for (const auto& a : target.table()) t.push_back(a.value());
  auto x = solve_mod_one(snf_, t);
  if (!x) return std::nullopt;
  std::vector<UnitAngle> table;
  table.reserve(x->size());
  for (const auto& v : *x) table.emplace_back(v);
  Cochain b(group_, degree_, std::move(table));
  // The solve is exact; this guards the Smith bookkeeping itself.
  if (!(coboundary_any(b) == target))
    throw Error(ErrorKind::InvalidInput, "internal: witness failed verification");
  return b;
}

std::optional<Cochain> cohomologous(const Cochain& phi, const Cochain& psi) {
  if (phi.degree() != psi.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "cocycles of degree " + std::to_string(phi.degree()) + " and " +
                    std::to_string(psi.degree()));
  if (!(phi.group() == psi.group()))
    throw Error(ErrorKind::GroupMismatch, "cocycles live on different groups");
  if (phi.degree() < 2 || phi.degree() > 3)
    throw Error(ErrorKind::DegreeMismatch, "cohomology compared in degree 2 or 3");
  if (!is_cocycle(phi)) throw Error(ErrorKind::NotCocycle, "first argument");
  if (!is_cocycle(psi)) throw Error(ErrorKind::NotCocycle, "second argument");
  CoboundarySolver solver(phi.group(), phi.degree() - 1);
  return solver.preimage(phi - psi);
}

Cochain standard_cyclic_3cocycle(int k, int j) {
  if (k < 1 || j < 0 || j >= k)
    throw Error(ErrorKind::InvalidInput,
                "need 0 <= j < k, got k=" + std::to_string(k) +
                    " j=" + std::to_string(j));
  auto g = FiniteAbelianGroup::cyclic(k);
  Cochain c(g, 3);
  const UnitAngle step(j, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a + b < k) continue;
      for (int l = 0; l < k; ++l)
        c.at(std::array<std::size_t, 3>{std::size_t(a), std::size_t(b),
                                        std::size_t(l)}) = step.scaled(l);
    }
  return c;
}

std::array<Cochain, 3> klein_cocycles() {
  FiniteAbelianGroup g({2, 2});
  std::array<Cochain, 3> out{Cochain(g, 3), Cochain(g, 3), Cochain(g, 3)};
  const UnitAngle half(1, 2);
  std::array<std::size_t, 3> args{};
  for (args[0] = 0; args[0] < 4; ++args[0])
    for (args[1] = 0; args[1] < 4; ++args[1])
      for (args[2] = 0; args[2] < 4; ++args[2]) {
        auto x = g.decode(args[0]), y = g.decode(args[1]), z = g.decode(args[2]);
        out[0].at(args) = half.scaled(x[0] * y[0] * z[0]);
        out[1].at(args) = half.scaled(x[1] * y[1] * z[1]);
        out[2].at(args) = half.scaled(x[0] * y[0] * z[1]);
      }
  return out;
}

Cochain aut_pullback(const Cochain& phi) {
  if (phi.degree() != 3)
    throw Error(ErrorKind::DegreeMismatch, "pullback defined on 3-cochains");
  const auto& g = phi.group();
  Cochain out(g, 3);
  std::array<std::size_t, 3> a{}, na{};
  for (a[0] = 0; a[0] < g.order(); ++a[0])
    for (a[1] = 0; a[1] < g.order(); ++a[1])
      for (a[2] = 0; a[2] < g.order(); ++a[2]) {
        for (int t = 0; t < 3; ++t) na[t] = g.neg(a[t]);
        out.at(a) = phi.at(na);
      }
  return out;
}

int cyclic_class_invariant(const Cochain& phi) {
  if (phi.group().factors().size() != 1)
    throw Error(ErrorKind::NotCyclic, "group has more than one cyclic factor");
  if (phi.degree() != 3)
    throw Error(ErrorKind::DegreeMismatch, "class invariant needs a 3-cocycle");
  if (!is_cocycle(phi)) throw Error(ErrorKind::NotCocycle, "input is not a 3-cocycle");
  const int k = phi.group().factors()[0];
  if (k == 1) return 0;
  UnitAngle sum;
  for (int j = 0; j < k; ++j) sum += phi.at(1 % k, std::size_t(j), 1 % k);
  Rational scaled = sum.value() * Rational(k);
  if (!scaled.is_integer())
    throw Error(ErrorKind::NotCocycle, "class sum is not k-torsion");
  return static_cast<int>(scaled.num().get_si() % k);
}

Cochain negation_witness(int n, int j) {
  if (n < 1 || j < 0 || j >= n)
    throw Error(ErrorKind::InvalidInput, "need 0 <= j < n");
  Cochain b(FiniteAbelianGroup::cyclic(n), 2);
  const UnitAngle step(j, n);
  for (int a = 0; a < n; ++a) {
    // floor(a/n) + floor(-a/n) on the canonical lift a in [0, n).
    Rational fa(a, n);
    long carry = mpz_class(fa.floor() + (-fa).floor()).get_si();
    for (int c = 0; c < n; ++c)
      b.at(std::array<std::size_t, 2>{std::size_t(a), std::size_t(c)}) =
          step.scaled(carry * -c);
  }
  return b;
}

}  // namespace sutwist::cohomology
