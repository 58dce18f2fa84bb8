#pragma once

#include <string_view>
#include <vector>

#include "sutwist/angle.hpp"
#include "sutwist/lattice.hpp"
#include "sutwist/rational.hpp"

namespace sutwist::classify {

using lattice::TauVector;

/// n x n angle matrix of a skew-symmetric bicharacter on Z^n that is
/// trivial on L_1 + ... + L_n: zero diagonal, antisymmetric, every column
/// summing to zero. Indices are 1-based.
class SkewBicharacter {
 public:
  SkewBicharacter(int n, std::vector<UnitAngle> row_major);
  static SkewBicharacter zero(int n);
  /// Builds the unique matrix with the given entries for 1 <= i < j <= n-1
  /// (row-major over those pairs); row and column n follow from the
  /// column-sum constraint.
  static SkewBicharacter from_upper_block(int n, const std::vector<UnitAngle>& upper);

  int n() const { return n_; }
  const UnitAngle& operator()(int i, int j) const {
    return a_[std::size_t((i - 1) * n_ + (j - 1))];
  }
  const std::vector<UnitAngle>& angles() const { return a_; }

  SkewBicharacter operator-() const;
  friend bool operator==(const SkewBicharacter&, const SkewBicharacter&) = default;

 private:
  int n_;
  std::vector<UnitAngle> a_;
};

/// The classification datum (n, q, tau, omega) with 0 < q < 1.
struct ParamTuple {
  int n;
  Rational q;
  TauVector tau;
  SkewBicharacter omega;

  ParamTuple(int n, Rational q, TauVector tau, SkewBicharacter omega);
  friend bool operator==(const ParamTuple&, const ParamTuple&) = default;
};

/// Angles M_ij for 1 <= i < j <= n-1, row-major. Empty for n = 2.
struct PairMatrix {
  int n;
  std::vector<UnitAngle> entries;

  const UnitAngle& at(int i, int j) const;
  friend bool operator==(const PairMatrix&, const PairMatrix&) = default;
  /// Row-major lexicographic order on angle values.
  friend auto operator<=>(const PairMatrix& a, const PairMatrix& b) {
    return a.entries <=> b.entries;
  }
};

enum class IsoCase { None, Direct, Mirror };
std::string_view to_string(IsoCase c);

/// sum_i i * tau_i
UnitAngle central_invariant(const TauVector& tau);

/// M_ij = 2 omega_ij + sum_{k=i}^{j-1} tau_k
PairMatrix pair_invariant(const ParamTuple& p);

/// M'_ij = 2 omega_{n-i+1,n-j+1} - sum_{k=i}^{j-1} tau_{n-k}
PairMatrix mirror_invariant(const ParamTuple& p);

/// Diagram flip: tau_i -> -tau_{n-i}, omega_ij -> omega_{n-i+1,n-j+1}.
ParamTuple theta_transform(const ParamTuple& p);

/// Direct wins when both cases hold. Throws RankMismatch for different n.
IsoCase is_isomorphic(const ParamTuple& p1, const ParamTuple& p2);

/// Representative with tau concentrated in the first slot and omega rebuilt
/// from the lexicographically smaller of the pair and mirror invariants.
ParamTuple canonical_form(const ParamTuple& p);

/// Equal classes in H^2: all doubled angles agree.
bool h2_equal(const SkewBicharacter& a, const SkewBicharacter& b);

/// Twist by another skew bicharacter: omega angles add entrywise.
ParamTuple twist_compose(const ParamTuple& p, const SkewBicharacter& extra);

}  // namespace sutwist::classify
