#include "gralg/matrix.hpp"

#include <json.hpp>

#include "gralg/error.hpp"

namespace gralg {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(const std::vector<std::vector<Rational>>& rows)
    : Matrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw Error("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = rows[r][c];
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator-(const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shapes do not compose");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

Matrix operator*(const Rational& s, Matrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

Matrix Matrix::power(unsigned exponent) const {
  if (!is_square()) throw Error("power of a non-square matrix");
  Matrix out = identity(rows_);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) return std::nullopt;
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const {
  if (r + rows > rows_ || c + cols > cols_) throw Error("matrix block out of range");
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r + i, c + j);
  }
  return out;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& m) {
  if (r + m.rows_ > rows_ || c + m.cols_ > cols_) throw Error("matrix block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r + i, c + j) = m(i, j);
  }
}

std::string to_json(const Matrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    j.push_back(std::move(row));
  }
  return j.dump();
}

Matrix matrix_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error("matrix JSON must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("matrix JSON rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) {
      if (!x.is_string()) throw Error("matrix entries must be \"p/q\" strings");
      r.push_back(parse_fraction(x.get<std::string>()));
    }
    rows.push_back(std::move(r));
  }
  return Matrix(rows);
}

std::string to_text(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += " ";
      out += to_plain_string(m(r, c));
    }
    out += "\n";
  }
  return out;
}

}  // namespace gralg
