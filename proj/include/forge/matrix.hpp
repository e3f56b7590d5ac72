#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace forge {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  IntMatrix transposed() const;
  IntMatrix negated() const;

  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  /// row_i += c * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_col(std::size_t i);
  /// col_i += c * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

  std::vector<Int> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int>& r);

  /// Keeps the listed rows, in order.
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Stacks b below a (same column count).
IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b);

/// Dense matrix with exact rational entries. GMP keeps every entry
/// in lowest terms with positive denominator.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transposed() const;

  bool is_integral() const;
  /// Requires is_integral().
  IntMatrix to_int() const;

  /// Least common multiple of all entry denominators (1 for the empty matrix).
  Int common_denominator() const;

  /// Gauss-Jordan inverse; throws std::domain_error when singular.
  RatMatrix inverse() const;

  std::vector<Rat> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Rat>& r);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& c, const RatMatrix& a);

/// Canonical representative of q in Q/2Z, in [0,2).
Rat mod_2z(const Rat& q);
/// Canonical representative of q in Q/Z, in [0,1).
Rat mod_1z(const Rat& q);

/// num/den in lowest terms (mpq_class(num, den) alone does not canonicalize).
Rat make_rat(const Int& num, const Int& den);

}  // namespace forge
