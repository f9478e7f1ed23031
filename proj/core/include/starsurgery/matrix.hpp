#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "starsurgery/error.hpp"
#include "starsurgery/numbers.hpp"

namespace starsurgery {

/// Dense matrix over arbitrary-precision integers.
class IntMat {
public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMat& other) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_diagonal() const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& rhs) const;
  IntVec operator*(const IntVec& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& c);
  void add_col(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Int determinant() const;

  /// Adjugate matrix: adj(A) * A = det(A) * I. Square input.
  IntMat adjugate() const;

private:
  std::size_t rows_, cols_;
  IntVec data_;
};

/// Dense matrix over exact rationals.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  explicit RatMat(const IntMat& m);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMat& other) const = default;

  RatMat operator*(const RatMat& rhs) const;
  RatVec operator*(const RatVec& v) const;

private:
  std::size_t rows_, cols_;
  RatVec data_;
};

/// Unique exact solution x of M x = t for square nonsingular M.
/// Throws Error(SingularMatrix) when det M = 0.
RatVec solve_rational(const IntMat& M, const IntVec& t);

/// Exact inverse of a square nonsingular integer matrix.
RatMat invert_rational(const IntMat& M);

}  // namespace starsurgery
