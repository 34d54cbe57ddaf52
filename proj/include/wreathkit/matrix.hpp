#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wreathkit/field.hpp"

namespace wreathkit {

/// Dense matrix of exact scalars over one field. Row-major storage.
class Mat {
 public:
  Mat() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
  Mat(FieldSpec f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Mat identity(FieldSpec f, std::size_t n);
  static Mat zero(FieldSpec f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Mat operator*(const Mat& o) const;  // matrix product, throws ShapeMismatch
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Mat kron(const Mat& o) const;  // Kronecker product
  Mat transpose() const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  /// First (row, col) with a nonzero entry, scanning row-major.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Mat r;                       // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

/// Deterministic reduced row echelon form: pivots chosen leftmost-nonzero,
/// first eligible row, rows swapped into place in order.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Inverse when square and invertible; nullopt otherwise.
std::optional<Mat> inverse(const Mat& m);

/// Rows spanning the null space {x : m x = 0}, one row per free column of
/// rref(m), in free-column order.
Mat nullspace(const Mat& m);

}  // namespace wreathkit
