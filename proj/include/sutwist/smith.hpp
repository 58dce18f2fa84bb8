#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sutwist/rational.hpp"

namespace sutwist {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * A * V = S with U, V unimodular and S diagonal, S(i,i) = d_i > 0 for
/// i < rank, each d_i dividing d_{i+1}, zero elsewhere.
struct SmithForm {
  IntMatrix left;   // U, rows x rows
  IntMatrix right;  // V, cols x cols
  std::vector<mpz_class> diagonal;  // d_0 .. d_{rank-1}
  std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Solves A x = t over Q/Z, where t is read modulo 1. Returns one solution
/// with entries in [0, 1) or nullopt when t is not in the image of A. The
/// existence test is the divisibility criterion: rows of U past the rank
/// span the integer left kernel of A, and t is in the image exactly when
/// those rows pair with t to integers.
std::optional<std::vector<Rational>> solve_mod_one(
    const SmithForm& snf, const std::vector<Rational>& target);

}  // namespace sutwist
