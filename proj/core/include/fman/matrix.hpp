#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fman/rational.hpp"

namespace fman {

/// Dense row-major matrix over Q. Square matrices double as endomorphisms
/// of Q^n: column j holds the image of e_j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);
  /// Inverse of flatten(): reads an n*n row-major vector.
  static Matrix unflatten(const Vector& flat, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> entries() const { return data_; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector flatten() const { return data_; }

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// XY - YX.
Matrix commutator(const Matrix& x, const Matrix& y);

/// The unique reduced row echelon form of m with zero rows dropped, so the
/// result has exactly rank(m) rows.
Matrix rref(Matrix m);

std::size_t rank(const Matrix& m);

}  // namespace fman
