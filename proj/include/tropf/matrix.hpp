#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tropf {

using IntVec = std::vector<std::int64_t>;

namespace checked {

// 64-bit arithmetic that throws OverflowError instead of wrapping.
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
std::int64_t narrow(const mpz_class& value);

}  // namespace checked

inline std::int64_t positive_part(std::int64_t a) { return a > 0 ? a : 0; }

/// Dense row-major integer matrix. Indices are 0-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix diagonal(const IntVec& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  bool is_skew_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(std::int64_t c, const IntMatrix& a);
IntVec operator*(const IntMatrix& a, const IntVec& v);

/// Stacks `top` over `bottom`; column counts must agree.
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
/// Places `left` beside `right`; row counts must agree.
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);

std::int64_t dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);

std::size_t rank(const IntMatrix& a);
/// Bareiss fraction-free elimination.
mpz_class determinant(const IntMatrix& a);

std::string to_string(const IntVec& v);

}  // namespace tropf
