#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gralg/rational.hpp"

namespace gralg {

/// Dense rectangular matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Rows must all have the same length.
  explicit Matrix(const std::vector<std::vector<Rational>>& rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix power(unsigned exponent) const;
  /// Gauss-Jordan inverse; nullopt when singular or not square.
  std::optional<Matrix> inverse() const;
  bool is_invertible() const { return inverse().has_value(); }
  bool is_zero() const;

  Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r, std::size_t c, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [["p/q",...],...]
std::string to_json(const Matrix& m);
Matrix matrix_from_json(std::string_view text);
/// One line per row, entries space-separated in plain form.
std::string to_text(const Matrix& m);

}  // namespace gralg
