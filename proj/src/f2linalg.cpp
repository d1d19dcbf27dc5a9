#include "smallcover/f2linalg.hpp"

#include <algorithm>
#include <utility>

#include "smallcover/errors.hpp"

namespace smallcover {
namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------------------
// F2Vector

F2Vector::F2Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

F2Vector F2Vector::of(std::initializer_list<int> bits) {
  F2Vector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidInput("F2Vector entries must be 0 or 1");
    v.set(i++, b == 1);
  }
  return v;
}

F2Vector F2Vector::parse(std::string_view bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InvalidInput("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

F2Vector F2Vector::unit(std::size_t len, std::size_t index) {
  F2Vector v(len);
  v.set(index);
  return v;
}

F2Vector F2Vector::ones(std::size_t len) {
  F2Vector v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i);
  return v;
}

void F2Vector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
  if (other.len_ != len_) throw InvalidInput("F2Vector length mismatch");
  simd::xor_into(words_, other.words_);
  return *this;
}

bool F2Vector::dot(const F2Vector& other) const {
  if (other.len_ != len_) throw InvalidInput("F2Vector length mismatch");
  return simd::and_parity(words_, other.words_);
}

std::size_t F2Vector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  }
  return len_;
}

std::vector<std::size_t> F2Vector::support() const {
  std::vector<std::size_t> out;
  for_each_set_bit([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string F2Vector::to_string() const {
  std::string s(len_, '0');
  for_each_set_bit([&](std::size_t i) { s[i] = '1'; });
  return s;
}

std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b) {
  if (auto c = a.len_ <=> b.len_; c != 0) return c;
  // Entry order: compare index 0 first.
  for (std::size_t i = 0; i < a.len_; ++i) {
    if (a.get(i) != b.get(i)) return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// F2Matrix

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_lists(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  F2Matrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw InvalidInput("ragged matrix literal");
    std::size_t c = 0;
    for (int b : row) m.set(r, c++, b != 0);
    ++r;
  }
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows, std::size_t cols) {
  F2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length mismatch");
    std::copy(rows[r].words().begin(), rows[r].words().end(), m.row(r).begin());
  }
  return m;
}

F2Matrix F2Matrix::from_columns(const std::vector<F2Vector>& columns, std::size_t rows) {
  F2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("column length mismatch");
    columns[c].for_each_set_bit([&](std::size_t r) { m.set(r, c); });
  }
  return m;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * stride_ + c / 64];
  const Word mask = Word{1} << (c % 64);
  if (value) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

F2Vector F2Matrix::row_vector(std::size_t r) const {
  F2Vector v(cols_);
  std::copy(row(r).begin(), row(r).end(), v.words().begin());
  return v;
}

F2Vector F2Matrix::column_vector(std::size_t c) const {
  F2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto words = row(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word bits = words[w];
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(__builtin_ctzll(bits));
        t.set(w * 64 + b, r);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

F2Matrix F2Matrix::select_columns(std::span<const std::size_t> columns) const {
  F2Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (get(r, columns[k])) out.set(r, k);
    }
  }
  return out;
}

F2Matrix F2Matrix::stacked(const F2Matrix& other) const {
  if (other.cols_ != cols_) throw InvalidInput("stacked: column count mismatch");
  F2Matrix out(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

F2Vector F2Matrix::operator*(const F2Vector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector dimension mismatch");
  F2Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (simd::and_parity(row(r), v.words())) out.set(r);
  }
  return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  if (other.rows_ != cols_) throw InvalidInput("matrix product dimension mismatch");
  F2Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto words = row(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word bits = words[w];
      while (bits != 0) {
        const auto k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        out.xor_into_row(r, other.row(k));
        bits &= bits - 1;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

Rref rref(F2Matrix m) {
  Rref out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(lead, pivot);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != lead && m.get(r, c)) m.xor_row(r, lead);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const F2Matrix& m) {
  // Forward elimination only; rank does not need the reduced form.
  F2Matrix work = m;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < work.cols() && lead < work.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < work.rows() && !work.get(pivot, c)) ++pivot;
    if (pivot == work.rows()) continue;
    work.swap_rows(lead, pivot);
    for (std::size_t r = lead + 1; r < work.rows(); ++r) {
      if (work.get(r, c)) work.xor_row(r, lead);
    }
    ++lead;
  }
  return lead;
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
  const Rref red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;

  std::vector<F2Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    F2Vector v(m.cols());
    v.set(free);
    for (std::size_t row = 0; row < red.pivots.size(); ++row) {
      if (red.matrix.get(row, free)) v.set(red.pivots[row]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace smallcover
