#pragma once

#include "sgcm/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sgcm {

/// Dense exact integer matrix stored row-major.
///
/// Generators, lattice bases and boundary maps are all carried as rows of an
/// IntMatrix, so most operations here are phrased in terms of rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  /// Build from row vectors; all rows must share `cols` entries.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Integer> row_span(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;

  void set_row(std::size_t r, const IntVector& v);
  void append_row(const IntVector& v);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<std::size_t>& indices) const;
  IntMatrix select_cols(const std::vector<std::size_t>& indices) const;
  bool is_zero_row(std::size_t r) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix: sum_k v[k] * M.row(k).
IntVector operator*(const IntVector& v, const IntMatrix& m);
/// Matrix times column vector.
IntVector operator*(const IntMatrix& m, const IntVector& v);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace sgcm
