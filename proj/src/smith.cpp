#include "sutwist/smith.hpp"

#include <utility>

#include "sutwist/error.hpp"

namespace sutwist {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::InvalidInput, "matrix shape mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

namespace {

struct Work {
  IntMatrix s, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < s.cols(); ++c) std::swap(s(i, c), s(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < s.rows(); ++r) std::swap(s(r, i), s(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_j -= f * row_i
  void sub_row(std::size_t j, std::size_t i, const mpz_class& f) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(j, c) -= f * s(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(j, c) -= f * u(i, c);
  }
  // col_j -= f * col_i
  void sub_col(std::size_t j, std::size_t i, const mpz_class& f) {
    for (std::size_t r = 0; r < s.rows(); ++r) s(r, j) -= f * s(r, i);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) -= f * v(r, i);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Work w{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    // Pivot on the smallest nonzero magnitude in the trailing block.
    for (;;) {
      std::size_t pr = m, pc = n;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (w.s(r, c) != 0 &&
              (pr == m || abs(w.s(r, c)) < abs(w.s(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == m) goto done;
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r)
        if (w.s(r, t) != 0) {
          w.sub_row(r, t, floor_div(w.s(r, t), w.s(t, t)));
          if (w.s(r, t) != 0) clean = false;
        }
      for (std::size_t c = t + 1; c < n; ++c)
        if (w.s(t, c) != 0) {
          w.sub_col(c, t, floor_div(w.s(t, c), w.s(t, t)));
          if (w.s(t, c) != 0) clean = false;
        }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and retry.
      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (w.s(r, c) % w.s(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == m) break;
      w.sub_row(t, bad, -1);
    }
    if (w.s(t, t) < 0) w.negate_row(t);
  }
done:
  SmithForm out{std::move(w.u), std::move(w.v), {}};
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(w.s(i, i));
  return out;
}

std::optional<std::vector<Rational>> solve_mod_one(
    const SmithForm& snf, const std::vector<Rational>& target) {
  const std::size_t m = snf.left.rows(), n = snf.right.rows();
  if (target.size() != m)
    throw Error(ErrorKind::InvalidInput, "target length does not match rows");
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < m; ++i) {
    Rational ui;
    for (std::size_t k = 0; k < m; ++k)
      if (snf.left(i, k) != 0) ui += Rational(snf.left(i, k)) * target[k];
    if (i < snf.rank()) {
      y[i] = ui / Rational(snf.diagonal[i]);
    } else if (!ui.is_integer()) {
      return std::nullopt;
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational xi;
    for (std::size_t k = 0; k < snf.rank(); ++k)
      if (snf.right(i, k) != 0) xi += Rational(snf.right(i, k)) * y[k];
    x[i] = xi - Rational(xi.floor());
  }
  return x;
}

}  // namespace sutwist
