#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sutwist/angle.hpp"
#include "sutwist/smith.hpp"

namespace sutwist::cohomology {

/// Z/k_1 + ... + Z/k_r. Elements are encoded as mixed-radix indices in
/// [0, order()), with the first factor most significant.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> factors);
  static FiniteAbelianGroup cyclic(int k) { return FiniteAbelianGroup({k}); }

  const std::vector<int>& factors() const { return factors_; }
  std::size_t order() const { return order_; }

  std::vector<int> decode(std::size_t g) const;
  std::size_t encode(std::span<const int> residues) const;

  std::size_t add(std::size_t g, std::size_t h) const;
  std::size_t neg(std::size_t g) const;

  friend bool operator==(const FiniteAbelianGroup& a,
                         const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  std::size_t order_ = 1;
};

/// Circle-valued k-cochain on a finite abelian group, stored densely in
/// row-major tuple order. Angle notation throughout: the multiplicative
/// cocycle identities become alternating sums.
class Cochain {
 public:
  Cochain(FiniteAbelianGroup group, int degree);
  Cochain(FiniteAbelianGroup group, int degree, std::vector<UnitAngle> table);

  const FiniteAbelianGroup& group() const { return group_; }
  int degree() const { return degree_; }
  const std::vector<UnitAngle>& table() const { return table_; }

  std::size_t index(std::span<const std::size_t> args) const;
  const UnitAngle& at(std::span<const std::size_t> args) const {
    return table_[index(args)];
  }
  UnitAngle& at(std::span<const std::size_t> args) { return table_[index(args)]; }
  const UnitAngle& at(std::size_t g) const { return table_[g]; }
  const UnitAngle& at(std::size_t g, std::size_t h) const;
  const UnitAngle& at(std::size_t g, std::size_t h, std::size_t l) const;

  bool is_zero() const;

  Cochain operator-() const;
  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  FiniteAbelianGroup group_;
  int degree_;
  std::vector<UnitAngle> table_;
};

/// Bar-complex differential for degree 1 or 2.
Cochain coboundary(const Cochain& c);

/// Degree 2 or 3.
bool is_cocycle(const Cochain& c);

/// Integer matrix of the bar differential from degree-k to degree-(k+1)
/// cochains, rows and columns in row-major tuple order.
IntMatrix differential_matrix(const FiniteAbelianGroup& g, int degree);

/// Decides whether a degree-(k+1) cochain is a coboundary, reusing one Smith
/// decomposition of the degree-k differential for many targets.
class CoboundarySolver {
 public:
  CoboundarySolver(FiniteAbelianGroup group, int source_degree);

  const FiniteAbelianGroup& group() const { return group_; }
  int source_degree() const { return degree_; }

  /// A cochain b with coboundary(b) = target, or nullopt.
  std::optional<Cochain> preimage(const Cochain& target) const;

 private:
  FiniteAbelianGroup group_;
  int degree_;
  SmithForm snf_;
};

/// Witness b with coboundary(b) = phi - psi, or nullopt when the classes
/// differ. Both inputs must be cocycles of equal degree on the same group.
std::optional<Cochain> cohomologous(const Cochain& phi, const Cochain& psi);

/// (a, b, c) -> (j/k) * floor((a + b)/k) * c on canonical lifts in [0, k).
Cochain standard_cyclic_3cocycle(int k, int j);

/// The three generating 3-cocycles on Z/2 + Z/2, elements (a, a'):
/// abc/2, a'b'c'/2 and abc'/2.
std::array<Cochain, 3> klein_cocycles();

/// Central characters of U+, U- and V in Z/2 + Z/2.
struct KleinCharacters {
  static constexpr std::array<int, 2> plus{1, 0};
  static constexpr std::array<int, 2> minus{0, 1};
  static constexpr std::array<int, 2> vector{1, 1};
};

/// Precomposition of a 3-cochain with negation in every argument.
Cochain aut_pullback(const Cochain& phi);

/// k * sum_j phi(1, j, 1) mod k, the index of the standard representative
/// cohomologous to a 3-cocycle on Z/k.
int cyclic_class_invariant(const Cochain& phi);

/// The explicit 2-cochain (a, b) -> (j/n)(floor(a/n) + floor(-a/n))(-b) on
/// canonical lifts, whose coboundary is phi^j minus its negation pullback.
Cochain negation_witness(int n, int j);

}  // namespace sutwist::cohomology
