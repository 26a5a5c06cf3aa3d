#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "liegeom/scalar.hpp"

namespace liegeom {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
/// i-th standard basis vector of length n.
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Scalar dot(const Vector& x, const Vector& y);

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator-(const Vector& x);
Vector operator*(const Scalar& s, const Vector& x);
std::string to_string(const Vector& v);

/// Dense row-major matrix over Scalar. Dimensions are fixed at construction;
/// zero-sized matrices are allowed so that 0-dimensional algebras work.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& d);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) { return a * Scalar(-1); }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);
/// Throws MathError naming `what` unless m is square.
void require_square(const Matrix& m, const char* what);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace liegeom
