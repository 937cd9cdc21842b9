#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pigeon {

// Dense row-major matrix with small non-negative entries (field elements or bits).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint16_t operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
  std::uint16_t& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
  const std::vector<std::uint16_t>& entries() const noexcept { return v_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint16_t> v_;
};

// Product over GF(2).
Matrix multiply_f2(const Matrix& a, const Matrix& b);

// Text format: header `matrix <rows> <cols>`, then one line of 0/1 characters per row.
Matrix parse_bit_matrix(std::string_view text);
std::string to_text(const Matrix& m);

}  // namespace pigeon
