#include "perfgen/poly_matrix.hpp"

#include "perfgen/error.hpp"

namespace perfgen {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, PrimeField field)
    : rows_(rows), cols_(cols), nvars_(nvars), field_(field),
      e_(rows * cols, Polynomial(nvars, field)) {}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Polynomial>> rows) {
  if (rows.empty() || rows.front().empty()) throw Error("matrix must be nonempty");
  const std::size_t cols = rows.front().size();
  const auto& first = rows.front().front();
  PolyMatrix m(rows.size(), cols, first.nvars(), first.field());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("matrix rows have unequal length");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].nvars() != m.nvars_) throw Error("matrix entries live in different rings");
      m(i, j) = std::move(rows[i][j]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::skew_from_upper(std::size_t size, const std::vector<Polynomial>& upper) {
  if (upper.size() != size * (size - 1) / 2 || upper.empty()) {
    throw Error("skew matrix needs size*(size-1)/2 upper entries");
  }
  PolyMatrix m(size, size, upper.front().nvars(), upper.front().field());
  std::size_t k = 0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      m(i, j) = upper[k];
      m(j, i) = -upper[k];
      ++k;
    }
  }
  return m;
}

bool PolyMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::without_row(std::size_t r) const {
  PolyMatrix m(rows_ - 1, cols_, nvars_, field_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(i, j);
    ++k;
  }
  return m;
}

PolyMatrix PolyMatrix::without_row_col(std::size_t r) const {
  PolyMatrix m(rows_ - 1, cols_ - 1, nvars_, field_);
  for (std::size_t i = 0, ki = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, kj = 0; j < cols_; ++j) {
      if (j == r) continue;
      m(ki, kj++) = (*this)(i, j);
    }
    ++ki;
  }
  return m;
}

namespace {

Polynomial det_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = cols.size();
  if (n == 0) return Polynomial::constant(m.nvars(), m.field(), 1);
  Polynomial acc(m.nvars(), m.field());
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial sub = entry * det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    acc = (k % 2 == 0) ? acc + sub : acc - sub;
  }
  return acc;
}

Polynomial pf_rec(const PolyMatrix& a, std::vector<std::size_t>& idx) {
  if (idx.empty()) return Polynomial::constant(a.nvars(), a.field(), 1);
  const std::size_t first = idx.front();
  Polynomial acc(a.nvars(), a.field());
  // Pf(A) = sum_{j>=1} (-1)^{j+1} a_{0 j} Pf(A without rows/cols 0 and j),
  // positions j counted within the remaining index list.
  for (std::size_t pos = 1; pos < idx.size(); ++pos) {
    const Polynomial& entry = a(first, idx[pos]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != pos) rest.push_back(idx[k]);
    }
    Polynomial sub = entry * pf_rec(a, rest);
    acc = (pos % 2 == 1) ? acc + sub : acc - sub;
  }
  return acc;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return det_rec(m, cols, 0);
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  if (m.cols() < 1 || m.rows() != m.cols() + 1) {
    throw Error("maximal_minors expects a (t+1) x t matrix with t >= 1");
  }
  std::vector<Polynomial> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial minor = determinant(m.without_row(i));
    out.push_back(i % 2 == 0 ? minor : -minor);
  }
  return out;
}

Polynomial pfaffian(const PolyMatrix& a) {
  if (!a.is_skew_symmetric()) throw Error("pfaffian of a non-skew-symmetric matrix");
  if (a.rows() % 2 != 0) return Polynomial(a.nvars(), a.field());
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pf_rec(a, idx);
}

std::vector<Polynomial> sub_pfaffians(const PolyMatrix& a) {
  if (!a.is_skew_symmetric()) throw Error("sub_pfaffians: matrix is not skew-symmetric");
  if (a.rows() % 2 == 0 || a.rows() < 3) {
    throw Error("sub_pfaffians: matrix size must be odd and at least 3");
  }
  std::vector<Polynomial> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial pf = pfaffian(a.without_row_col(i));
    out.push_back(i % 2 == 0 ? pf : -pf);
  }
  return out;
}

}  // namespace perfgen
