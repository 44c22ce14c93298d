#include "kgraph/hermite.hpp"

#include <algorithm>

#include "kgraph/errors.hpp"

namespace kgraph {

namespace {

struct Bezout {
  Integer g, s, t;  // s*a + t*b = g > 0
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool divides(const Integer& a, const Integer& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  HermiteForm out;
  out.H = a;
  out.U = IntMatrix::identity(a.cols());
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t n = a.cols();
  std::size_t c = 0;

  for (std::size_t r = 0; r < a.rows() && c < n; ++r) {
    // Fold every entry right of column c in this row into column c.
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(h(r, j)) == 0) continue;
      if (sgn(h(r, c)) == 0) {
        h.swap_cols(c, j);
        u.swap_cols(c, j);
        continue;
      }
      if (divides(h(r, c), h(r, j))) {
        const Integer q = -(h(r, j) / h(r, c));
        h.add_col_multiple(j, c, q);
        u.add_col_multiple(j, c, q);
        continue;
      }
      const Integer x = h(r, c);
      const Integer y = h(r, j);
      const Bezout b = bezout(x, y);
      const Integer p = -(y / b.g);
      const Integer q = x / b.g;
      h.combine_cols(c, j, b.s, b.t, p, q);
      u.combine_cols(c, j, b.s, b.t, p, q);
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_col(c);
      u.negate_col(c);
    }
    const Integer pivot = h(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      const Integer q = floor_div(h(r, j), pivot);
      if (sgn(q) == 0) continue;
      h.add_col_multiple(j, c, -q);
      u.add_col_multiple(j, c, -q);
    }
    out.pivot_rows.push_back(r);
    ++c;
  }
  out.rank = c;
  return out;
}

HermiteForm row_hermite_normal_form(const IntMatrix& a) {
  HermiteForm col = hermite_normal_form(a.transpose());
  col.H = col.H.transpose();
  col.U = col.U.transpose();
  return col;
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                                [](const Integer& d) { return sgn(d) != 0; }));
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm out;
  out.D = a;
  out.U = IntMatrix::identity(a.rows());
  out.V = IntMatrix::identity(a.cols());
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t limit = std::min(m, n);

  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        const Integer mag = abs(d(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    while (true) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        if (divides(d(t, t), d(i, t))) {
          const Integer q = -(d(i, t) / d(t, t));
          d.add_row_multiple(i, t, q);
          u.add_row_multiple(i, t, q);
          continue;
        }
        const Integer x = d(t, t);
        const Integer y = d(i, t);
        const Bezout b = bezout(x, y);
        const Integer p = -(y / b.g);
        const Integer q = x / b.g;
        d.combine_rows(t, i, b.s, b.t, p, q);
        u.combine_rows(t, i, b.s, b.t, p, q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        if (divides(d(t, t), d(t, j))) {
          const Integer q = -(d(t, j) / d(t, t));
          d.add_col_multiple(j, t, q);
          v.add_col_multiple(j, t, q);
          continue;
        }
        const Integer x = d(t, t);
        const Integer y = d(t, j);
        const Bezout b = bezout(x, y);
        const Integer p = -(y / b.g);
        const Integer q = x / b.g;
        d.combine_cols(t, j, b.s, b.t, p, q);
        v.combine_cols(t, j, b.s, b.t, p, q);
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m; ++i) column_clear = column_clear && sgn(d(i, t)) == 0;
      if (!column_clear) continue;

      // Enforce d_t | every trailing entry by folding an offending row in.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(d(t, t), d(i, j))) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  out.invariant_factors.resize(limit);
  for (std::size_t i = 0; i < limit; ++i) out.invariant_factors[i] = d(i, i);
  return out;
}

std::optional<IntVector> lattice_member(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw Error(ErrorCode::LengthMismatch, "lattice_member: right-hand side has wrong length");
  const HermiteForm hf = hermite_normal_form(a);
  IntVector y(a.cols());
  for (std::size_t j = 0; j < hf.rank; ++j) {
    const std::size_t r = hf.pivot_rows[j];
    Integer residual = b[r];
    for (std::size_t l = 0; l < j; ++l) residual -= hf.H(r, l) * y[l];
    if (!divides(hf.H(r, j), residual)) return std::nullopt;
    y[j] = residual / hf.H(r, j);
  }
  if (hf.H * y != b) return std::nullopt;
  return hf.U * y;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const HermiteForm hf = hermite_normal_form(a);
  const std::size_t n = a.cols();
  IntMatrix basis(n, n - hf.rank);
  for (std::size_t j = hf.rank; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) basis(r, j - hf.rank) = hf.U(r, j);
  return basis;
}

bool StableKernel::contains(const IntVector& x) const {
  if (x.size() != basis.rows())
    throw Error(ErrorCode::LengthMismatch, "stable kernel membership: wrong vector length");
  if (rank() == 0) return is_zero(x);
  return lattice_member(basis, x).has_value();
}

StableKernel stable_kernel(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::InvalidInput, "stable_kernel requires a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {IntMatrix(0, 0), 0};
  IntMatrix p = a;
  IntMatrix k = kernel_basis(p);
  for (std::size_t m = 1;; ++m) {
    p = p * a;
    IntMatrix next = kernel_basis(p);
    // ker A^m is saturated and contained in ker A^{m+1}; equal rank means equal.
    if (next.cols() == k.cols()) return {std::move(k), m};
    k = std::move(next);
  }
}

Integer determinant(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::InvalidInput, "determinant requires a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(m(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace kgraph
