#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sutwist/classification.hpp"
#include "sutwist/laurent.hpp"

namespace sutwist::presentation {

/// Matrix coefficient v_{row,col}, 1-based.
struct GenSymbol {
  int row = 1, col = 1;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

using Word = std::vector<GenSymbol>;

struct RelationTerm {
  CycloLaurent coeff;
  Word word;  // empty word is the unit
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// sum of terms = 0. `family` labels the index pattern that produced it.
struct RelationPoly {
  std::string family;
  std::vector<RelationTerm> terms;

  /// Terms sorted by word with equal words merged and zero terms dropped.
  RelationPoly normalized() const;
  friend bool operator==(const RelationPoly&, const RelationPoly&) = default;
};

/// Multiplicities of z_1..z_n on the left and right of
/// (pi x id x pi) Delta^(2); v_ij has left e_i and right e_j.
struct BiDegree {
  std::vector<long> left, right;

  static BiDegree of(const GenSymbol& g, int n);
  static BiDegree of(const Word& w, int n);
  BiDegree& operator+=(const BiDegree& o);
  friend BiDegree operator+(BiDegree a, const BiDegree& b) { return a += b; }
  friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

/// The four exchange families followed by the determinant relation.
std::vector<RelationPoly> generate_relations(const classify::ParamTuple& p);

/// sum_sigma tau^{m(sigma)} (-q)^{inv(sigma)} conj(omega(1..n))
/// omega(sigma(1)..sigma(n)) v_{1 sigma(1)} ... v_{n sigma(n)} - 1.
RelationPoly quantum_det_relation(const classify::ParamTuple& p);

/// m(sigma)_i = sum_{k=2}^n (k-1) m^{(k, sigma(k))}_i; sigma is 1-based
/// (sigma[k-1] = sigma(k)).
std::vector<long> det_multi_index(const std::vector<int>& sigma);

/// Laurent polynomials in z_1..z_n modulo z_1 ... z_n = 1, with monomials
/// normalized to a zero last exponent.
using TorusPolynomial = std::map<std::vector<int>, CycloLaurent>;

/// Image of the relation under v_ij -> delta_ij z_i.
TorusPolynomial torus_character_residue(const RelationPoly& r, int n);

/// The angle omega_{ik} - omega_{jl} of x ._omega y = omega_ik conj(omega_jl) xy,
/// extended bilinearly to arbitrary bidegrees.
UnitAngle twisted_product_coeff(const classify::SkewBicharacter& omega,
                                const BiDegree& x, const BiDegree& y);

enum class Format { Json, Latex };

inline constexpr std::string_view kStarStructureNote =
    "*-structure: the invertible matrix (v_ij) is required to be unitary "
    "(recorded as metadata, not verified)";

std::string serialize(const std::vector<RelationPoly>& rels, Format format);
std::vector<RelationPoly> parse_relations_json(std::string_view text);

}  // namespace sutwist::presentation
