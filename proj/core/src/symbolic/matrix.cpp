#include "twistkit/symbolic/matrix.hpp"

#include "twistkit/symbolic/error.hpp"

namespace twistkit {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

void require_square(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
}

Matrix minor_of(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, r = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::vector<Expression>> rows)
    : Matrix(from_rows(std::vector<std::vector<Expression>>(rows))) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Expression>>& rows) {
  Matrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Expression(1)); }

Matrix Matrix::scalar(std::size_t n, const Expression& s) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = s;
  return out;
}

Matrix Matrix::column(const std::vector<Expression>& v) {
  Matrix out(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) out(i, 0) = v[i];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::map(const std::function<Expression(const Expression&)>& f) const {
  Matrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Expression s;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(s);
    }
  return out;
}

Matrix operator*(const Expression& s, const Matrix& m) {
  return m.map([&s](const Expression& e) { return s * e; });
}

std::vector<Expression> Matrix::apply(const std::vector<Expression>& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  std::vector<Expression> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += (*this)(i, k) * v[k];
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Expression determinant(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Expression(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Expression det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Expression term = m(0, j) * determinant(minor_of(m, 0, j));
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

Matrix adjugate(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  Matrix out(n, n);
  if (n == 1) {
    out(0, 0) = Expression(1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Expression c = determinant(minor_of(m, i, j));
      out(j, i) = (i + j) % 2 == 0 ? c : -c;
    }
  return out;
}

Matrix inverse(const Matrix& m) {
  Expression det = determinant(m);
  if (det.is_zero()) throw Error(ErrorKind::SingularMatrix, "determinant is identically zero");
  Expression inv = Expression(1) / det;
  return inv * adjugate(m);
}

}  // namespace twistkit
