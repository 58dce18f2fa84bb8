#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sutwist/laurent.hpp"
#include "sutwist/rational.hpp"

namespace sutwist::spin {

enum class Mode { Classical, Quantum };
enum class Parity { Odd, Even, Full };

std::string to_string(Mode m);

/// Subsets X of {1..n} as bitmasks (bit i-1 <-> i), in increasing mask order.
class SubsetBasis {
 public:
  SubsetBasis(int n, Parity parity);

  int n() const { return n_; }
  Parity parity() const { return parity_; }
  std::size_t size() const { return masks_.size(); }
  unsigned mask(std::size_t index) const { return masks_[index]; }
  const std::vector<unsigned>& masks() const { return masks_; }
  /// Position of `mask` in this basis; nullopt if the parity excludes it.
  std::optional<std::size_t> index_of(unsigned mask) const;

 private:
  int n_;
  Parity parity_;
  std::vector<unsigned> masks_;
  std::vector<int> lookup_;
};

/// e_i ^ e_X and e_i -| e_X with sign (-1)^{#{k in X : k < i}}.
struct SignedSubset {
  int sign;
  unsigned mask;
};
std::optional<SignedSubset> wedge(int i, unsigned X);
std::optional<SignedSubset> contract(int i, unsigned X);

/// Sparse square or rectangular matrix over HalfLaurent, stored by column.
class SpinOperator {
 public:
  using Column = std::map<std::size_t, HalfLaurent>;

  SpinOperator(std::size_t rows, std::size_t cols);
  static SpinOperator identity(std::size_t dim);
  static SpinOperator diagonal(const std::vector<HalfLaurent>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  void add(std::size_t row, std::size_t col, const HalfLaurent& v);
  HalfLaurent at(std::size_t row, std::size_t col) const;
  const Column& column(std::size_t col) const { return cols_[col]; }

  SpinOperator& operator+=(const SpinOperator& o);
  SpinOperator& operator-=(const SpinOperator& o);
  friend SpinOperator operator+(SpinOperator a, const SpinOperator& b) { return a += b; }
  friend SpinOperator operator-(SpinOperator a, const SpinOperator& b) { return a -= b; }
  friend SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);
  SpinOperator scaled(const HalfLaurent& c) const;
  friend bool operator==(const SpinOperator&, const SpinOperator&) = default;

 private:
  std::size_t rows_;
  std::vector<Column> cols_;
};

SpinOperator commutator(const SpinOperator& a, const SpinOperator& b);

enum class GenKind { X, Y, KHalf, KHalfInv };
struct Generator {
  GenKind kind;
  int i;  // 1..n
};

/// A representation of the Spin(2n) generators X_i, Y_i (i = 1..n) on a
/// weight basis. Weights are stored doubled in L-coordinates.
struct Representation {
  int n = 0;
  Mode mode = Mode::Classical;
  std::string label;
  std::vector<std::vector<int>> weights2;
  std::vector<SpinOperator> X, Y;
  std::vector<unsigned> masks;  // subset per basis element for spin modules

  std::size_t dim() const { return weights2.size(); }
  /// Eigenvalue of H_i on basis element b.
  int h(int i, std::size_t b) const;
  SpinOperator H(int i) const;
  /// q^{+-H_i/2}; the identity in classical mode.
  SpinOperator K_half(int i, int sign = 1) const;
  const SpinOperator& op(GenKind kind, int i) const;
};

/// H_i eigenvalue of a doubled weight.
int h_of_weight(const std::vector<int>& w2, int i);

/// Generator wedge pairs (a, b), 1-based indices into e_1..e_{2n}:
/// X_i = e_a ^ e_b.
std::pair<int, int> generator_pair(GenKind kind, int i, int n);

/// (xi ^ eta) zeta = -(eta, zeta) xi + (xi, zeta) eta on V.
SpinOperator vector_wedge_action(int n, int a, int b);
/// c(e_a) c(e_b) on the full spinor space S; integer entries.
SpinOperator clifford_product(int n, int a, int b);
/// 2 (e_a ^ e_b) acting on S = c(e_a) c(e_b) + (e_a, e_b)_Q.
SpinOperator clifford_quadratic_doubled(int n, int a, int b);

Representation build_vector_rep(int n, Mode mode);
Representation build_spin_rep(int n, Mode mode, Parity parity);

/// Sparse vector in a tensor product, keyed by per-factor basis indices.
template <class C>
struct BasicTensorVector {
  using Key = std::vector<std::uint32_t>;
  std::vector<std::size_t> dims;
  std::map<Key, C> entries;

  void add(const Key& k, const C& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = entries.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) entries.erase(it);
    }
  }
  bool is_zero() const { return entries.empty(); }
  C at(const Key& k) const {
    auto it = entries.find(k);
    return it == entries.end() ? C() : it->second;
  }
  friend bool operator==(const BasicTensorVector&, const BasicTensorVector&) = default;
};

using TensorVector = BasicTensorVector<HalfLaurent>;
using RationalTensor = BasicTensorVector<Rational>;

RationalTensor evaluate(const TensorVector& v, const Rational& q0);
/// Sum of the factor weights (doubled) of every term; nullopt if the terms
/// disagree or the vector is zero.
std::optional<std::vector<int>> tensor_weight(
    const TensorVector& v, std::span<const Representation* const> reps);

using Converter = std::function<Rational(const HalfLaurent&)>;

/// Iterated coproduct of a generator applied to a tensor vector:
/// X -> sum_p K^{1/2} x ... x K^{1/2} x X x K^{-1/2} x ... x K^{-1/2},
/// K^{1/2} grouplike.
TensorVector apply_coproduct(const Generator& g,
                             std::span<const Representation* const> reps,
                             const TensorVector& v);
RationalTensor apply_coproduct(const Generator& g,
                               std::span<const Representation* const> reps,
                               const RationalTensor& v, const Rational& q0);

/// The coproduct as an operator on the linearized tensor product (first
/// factor most significant).
SpinOperator coproduct_action(const Generator& g,
                              std::span<const Representation* const> reps);

struct SigmaValue {
  long I;
  HalfLaurent coeff;  // (-1)^I classically, (-q)^I in quantum mode
};
SigmaValue sigma_index(int i, unsigned X, int n, Mode mode);

/// tilde e_i in U+ x U+, i in 1..2n, keyed by positions in the odd basis.
TensorVector tilde_e(int i, int n, Mode mode);

struct IntertwinerReport {
  bool ok = true;
  std::string counterexample;
};
/// Checks T g_V = Delta(g) T for every X_i, Y_i, K_i^{1/2}, with T e_a = tilde_e(a).
IntertwinerReport check_V_intertwiner(int n, Mode mode);
/// Same check with caller-supplied images of e_1..e_{2n}.
IntertwinerReport check_V_intertwiner(int n, Mode mode,
                                      const std::vector<TensorVector>& images);

struct GH {
  TensorVector g, h;
};
GH embeddings_g_h(int n, Mode mode);
HalfLaurent pairing_gh(int n, Mode mode);
/// (-1)^{(n+1)/2} n (n-1)
long pairing_closed_form(int n);

/// Basis of the null space of a dense rational matrix with `ncols` columns.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t ncols);

struct InvariantF {
  RationalTensor kernel_vector;  // in U+ x V x U+
  RationalTensor f;              // in U+^{x4}
};
/// Throws MultiplicityNotOne unless the invariants of U+ x V x U+ are a line.
InvariantF invariant_f(int n, const Rational& q0);

struct A1Result {
  bool nonzero = false;
  bool scalar = false;
  Rational scalar_value;
  std::size_t dim = 0;
};
/// (iota x f^*)(f x iota) as a matrix on U+.
A1Result theorem_a1_check(int n, const Rational& q0);

}  // namespace sutwist::spin
