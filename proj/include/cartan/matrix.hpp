#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cartan/scalar.hpp"

namespace cartan {

class UPoly;

// Dense row-major matrix over Q(i). Sizes are small (a few dozen at most), so
// everything is plain Gaussian elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> col(std::size_t c) const;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);
// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
// det(x I - m), monic.
UPoly characteristic_polynomial(const Matrix& m);

}  // namespace cartan
