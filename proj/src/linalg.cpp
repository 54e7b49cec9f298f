#include "tiltforge/linalg.hpp"

#include <utility>

#include "tiltforge/errors.hpp"

namespace tiltforge {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  require(v.size() == cols_, "matrix/vector size mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(at(r, c)) != 0 && sgn(v[c]) != 0) out[r] += at(r, c) * v[c];
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require(cols_ == other.rows_, "matrix product size mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t rank(const Matrix& m) {
  SpanBuilder span(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
    span.add(row);
  }
  return span.dimension();
}

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a.at(piv, col)) == 0) ++piv;
    require(piv < n, "singular matrix");
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(piv, c), a.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    Rational p = a.at(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a.at(col, c) /= p;
      inv.at(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a.at(r, col)) == 0) continue;
      Rational f = a.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    for (std::size_t c = p; c < length_; ++c) v[c] -= f * rows_[i][c];
  }
  return v;
}

bool SpanBuilder::add(const Vector& v) {
  require(v.size() == length_, "span vector size mismatch");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < length_ && sgn(r[p]) == 0) ++p;
  if (p == length_) return false;
  Rational lead = r[p];
  for (auto& x : r) x /= lead;
  // keep rows fully reduced against the new pivot
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rational f = row[p];
    for (std::size_t c = 0; c < length_; ++c) row[c] -= f * r[c];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const Vector& v) const { return is_zero(reduce(v)); }

}  // namespace tiltforge
