#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "twistkit/symbolic/expression.hpp"

namespace twistkit {

/// Dense matrix of expressions, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::vector<Expression>> rows);
  static Matrix from_rows(const std::vector<std::vector<Expression>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix scalar(std::size_t n, const Expression& s);
  static Matrix column(const std::vector<Expression>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Expression& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const Expression& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  const std::vector<Expression>& entries() const noexcept { return data_; }

  bool is_zero() const;
  Matrix map(const std::function<Expression(const Expression&)>& f) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Expression& s, const Matrix& m);
  std::vector<Expression> apply(const std::vector<Expression>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Expression> data_;
};

/// a*b - b*a.
Matrix commutator(const Matrix& a, const Matrix& b);

Expression determinant(const Matrix& m);
Matrix adjugate(const Matrix& m);
/// Exact inverse through the adjugate; SingularMatrix when det is zero.
Matrix inverse(const Matrix& m);

}  // namespace twistkit
