#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace tiltforge {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

bool is_zero(const Vector& v);
std::size_t rank(const Matrix& m);
// Throws InternalError on singular input.
Matrix inverse(const Matrix& m);

// Incrementally maintained span of vectors of fixed length.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length) : length_(length) {}

  // Returns true if v was independent of the current span (and adds it).
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  Vector reduce(Vector v) const;

  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tiltforge
