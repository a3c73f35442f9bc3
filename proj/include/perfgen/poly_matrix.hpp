#pragma once

#include <cstddef>
#include <vector>

#include "perfgen/polynomial.hpp"

namespace perfgen {

/// Rectangular grid of polynomials sharing one ring.
class PolyMatrix {
public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, PrimeField field);
  /// Builds from row lists; all rows must have equal length.
  static PolyMatrix from_rows(std::vector<std::vector<Polynomial>> rows);
  /// Skew-symmetric matrix from its strict upper triangle, listed row by row.
  static PolyMatrix skew_from_upper(std::size_t size, const std::vector<Polynomial>& upper);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool is_skew_symmetric() const;
  PolyMatrix without_row(std::size_t i) const;
  PolyMatrix without_row_col(std::size_t i) const;

private:
  std::size_t rows_, cols_, nvars_;
  PrimeField field_;
  std::vector<Polynomial> e_;
};

/// Determinant by cofactor expansion along the first row.
Polynomial determinant(const PolyMatrix& m);

/// Signed maximal minors of a (t+1) x t matrix: entry i is
/// (-1)^i det(M with row i deleted), rows counted from zero.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// Pfaffian of an even skew-symmetric matrix, expanded along the first row.
Polynomial pfaffian(const PolyMatrix& a);

/// Signed submaximal Pfaffians of an odd skew-symmetric matrix: entry i is
/// (-1)^i Pf(A with row and column i deleted), rows counted from zero.
std::vector<Polynomial> sub_pfaffians(const PolyMatrix& a);

}  // namespace perfgen
