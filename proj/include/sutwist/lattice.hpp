#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sutwist/angle.hpp"
#include "sutwist/cohomology.hpp"

namespace sutwist::lattice {

/// A weight of SU(n) lifted to Z^n in the basis L_1..L_n. Lifts differing by
/// a multiple of (1,...,1) name the same weight; every function below is
/// invariant under that shift.
class WeightVec {
 public:
  explicit WeightVec(std::vector<long> coords);
  static WeightVec zero(int n) { return WeightVec(std::vector<long>(std::size_t(n), 0)); }
  static WeightVec basis(int n, int i);        // L_i, 1-based
  static WeightVec simple_root(int n, int i);  // L_i - L_{i+1}, 1-based
  static WeightVec shift(int n);               // (1, ..., 1)

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<long>& coords() const { return coords_; }
  long operator[](std::size_t i) const { return coords_[i]; }

  WeightVec& operator+=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  WeightVec scaled(long k) const;
  friend bool operator==(const WeightVec&, const WeightVec&) = default;

 private:
  std::vector<long> coords_;
};

/// (tau_1, ..., tau_{n-1}), each an n-th root of unity.
class TauVector {
 public:
  TauVector(int n, std::vector<UnitAngle> entries);
  static TauVector trivial(int n) {
    return TauVector(n, std::vector<UnitAngle>(std::size_t(n - 1)));
  }

  int n() const { return n_; }
  const std::vector<UnitAngle>& entries() const { return entries_; }
  /// 1-based, 1 <= i <= n-1.
  const UnitAngle& operator[](int i) const { return entries_[std::size_t(i - 1)]; }
  friend bool operator==(const TauVector&, const TauVector&) = default;

 private:
  int n_;
  std::vector<UnitAngle> entries_;
};

/// |lambda| = (n-1) lambda_1 - lambda_2 - ... - lambda_n.
long weight_norm(const WeightVec& lambda);

/// Residue of sum(lambda_i) in [0, n): the image in P/Q = Z/n.
int class_mod_Q(const WeightVec& lambda);

struct QCoordinates {
  int k = 0;             // class in Z/n
  std::vector<long> a;   // lambda = k L_1 + sum a_i alpha_i mod (1,...,1)
};

/// Coordinates relative to the section s(k) = k L_1.
QCoordinates q_coordinates(const WeightVec& lambda);

/// c_tau(lambda, mu) = -|mu| * sum_i a_i(lambda) tau_i, normalized to vanish
/// on the section points k L_1.
UnitAngle c_tau_eval(const TauVector& tau, const WeightVec& lambda,
                     const WeightVec& mu);

using PairCochain = std::function<UnitAngle(const WeightVec&, const WeightVec&)>;

PairCochain c_tau(TauVector tau);

/// c(mu, nu) - c(lambda + mu, nu) + c(lambda, mu + nu) - c(lambda, mu).
UnitAngle coboundary3(const PairCochain& c, const WeightVec& lambda,
                      const WeightVec& mu, const WeightVec& nu);

struct Descent {
  cohomology::Cochain cocycle;  // on Z/n, tabulated at k L_1
  std::size_t spot_checks = 0;  // perturbed evaluations compared
};

/// Tabulates the coboundary of c on the section points and checks, for
/// every table entry, every argument slot and every perturbation by a
/// simple root or by (1,...,1), that the value does not move. Throws
/// NotDescendable on the first mismatch.
Descent descend_to_PQ(const PairCochain& c, int n);

}  // namespace sutwist::lattice
