#pragma once

// Bit-packed vectors and matrices over the two-element field.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/simd/kernels.hpp"

namespace smallcover {

using simd::Word;

class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t len);

  /// F2Vector::of({1, 0, 1}): entries in order.
  static F2Vector of(std::initializer_list<int> bits);
  /// "101" -> (1, 0, 1). Throws InvalidInput on other characters.
  static F2Vector parse(std::string_view bits);
  static F2Vector unit(std::size_t len, std::size_t index);
  static F2Vector ones(std::size_t len);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= Word{1} << (i % 64); }

  F2Vector& operator^=(const F2Vector& other);
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

  bool is_zero() const { return simd::is_zero(words_); }
  std::size_t popcount() const { return simd::popcount(words_); }
  /// GF(2) inner product.
  bool dot(const F2Vector& other) const;

  /// Lowest set index, or size() when zero.
  std::size_t first_set() const;
  std::vector<std::size_t> support() const;

  template <class F>
  void for_each_set_bit(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto t = static_cast<std::size_t>(__builtin_ctzll(bits));
        f(w * 64 + t);
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  /// Entries as a 0/1 string, index 0 first.
  std::string to_string() const;

  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b);

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// Dense row-major bit matrix. Padding bits past cols() in each row stay zero.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  /// Rows given as 0/1 lists, e.g. {{1, 1}, {1, 0}}.
  static F2Matrix from_lists(std::initializer_list<std::initializer_list<int>> rows);
  static F2Matrix from_rows(const std::vector<F2Vector>& rows, std::size_t cols);
  static F2Matrix from_columns(const std::vector<F2Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);

  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  F2Vector row_vector(std::size_t r) const;
  F2Vector column_vector(std::size_t c) const;

  void xor_row(std::size_t dst, std::size_t src) { simd::xor_into(row(dst), row(src)); }
  /// Adds an external row (same stride) into row dst.
  void xor_into_row(std::size_t dst, std::span<const Word> src) { simd::xor_into(row(dst), src); }
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const { return simd::is_zero(row(r)); }

  F2Matrix transpose() const;
  F2Matrix select_columns(std::span<const std::size_t> columns) const;
  /// Appends rows of `other` (same column count).
  F2Matrix stacked(const F2Matrix& other) const;

  /// Matrix-vector product; v.size() must equal cols().
  F2Vector operator*(const F2Vector& v) const;
  F2Matrix operator*(const F2Matrix& other) const;

  bool is_zero() const { return simd::is_zero(data_); }

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

struct Rref {
  F2Matrix matrix;
  /// Pivot column of each nonzero row, ascending.
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot rule: leftmost column, topmost candidate row.
Rref rref(F2Matrix m);

std::size_t rank(const F2Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column in ascending order.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);

}  // namespace smallcover
