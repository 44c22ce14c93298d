// Arbitrary-precision integer and rational vectors and dense integer matrices.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace kgraph {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  /// Matrix whose columns are the given vectors; all must share one length.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  Integer row_sum(std::size_t r) const;
  bool is_zero() const;

  IntMatrix transpose() const;

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// (row a, row b) <- (p*a + q*b, r*a + s*b)
  void combine_rows(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s);
  void combine_cols(std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
RatVector operator*(const IntMatrix& a, const RatVector& x);

IntMatrix power(const IntMatrix& a, unsigned long exponent);

IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, const Integer& factor);
bool is_zero(const IntVector& v);
bool is_nonnegative(const IntVector& v);
bool is_strictly_positive(const RatVector& v);

/// Least common multiple of the denominators (1 for an empty vector).
Integer common_denominator(const RatVector& v);
/// v * common_denominator(v), as integers.
IntVector clear_denominators(const RatVector& v);
RatVector to_rational(const IntVector& v);

/// Row-major decimal dump: one row per line, entries separated by spaces.
std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace kgraph
