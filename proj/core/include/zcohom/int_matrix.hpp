#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace zcohom {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Zero-row and zero-column shapes are legal; they show up routinely as
/// empty relation blocks, so every operation tolerates them.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;

  IntMatrix top_rows(std::size_t count) const;
  IntMatrix column(std::size_t j) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;

  static IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
  static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

  void set_block(std::size_t row0, std::size_t col0, const IntMatrix& block);
  void add_block(std::size_t row0, std::size_t col0, const IntMatrix& block);
  void add_scaled_block(std::size_t row0, std::size_t col0, const Int& factor,
                        const IntMatrix& block);

  // elementary operations used by the normal-form routines
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void row_axpy(std::size_t dst, std::size_t src, const Int& factor);  // row dst += factor*row src
  void col_axpy(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace zcohom
