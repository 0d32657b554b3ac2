#pragma once

// Exact integer vectors and matrices over GMP integers.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace tfr {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> entries);
IntVector zero_vector(std::size_t dim);

Integer dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& c, const IntVector& a);
IntVector negate(const IntVector& a);
bool is_zero(const IntVector& a);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& a);
/// a / content(a); the zero vector is returned unchanged.
IntVector primitive(const IntVector& a);

std::string to_string(const IntVector& a);
std::ostream& operator<<(std::ostream& os, const IntVector& a);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Rows given explicitly; `cols` is needed when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;
  /// v^T · A for a row vector v.
  IntVector apply_left(const IntVector& v) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Total order used for canonical output.
bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace tfr
