#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "perfgen/field.hpp"

namespace perfgen {

using Column = std::uint32_t;

/// Sparse row: strictly increasing columns, nonzero values.
struct SparseRow {
  std::vector<Column> cols;
  std::vector<Coeff> vals;

  bool empty() const { return cols.empty(); }
  std::size_t size() const { return cols.size(); }
  Column lead() const { return cols.front(); }
  bool operator==(const SparseRow&) const = default;
};

/// Row echelon form over F_p. Pivots are the first nonzero column of each
/// row and are normalized to 1. Rows are sorted by pivot column.
class Echelon {
public:
  Echelon() = default;
  Echelon(std::size_t ncols, PrimeField field) : ncols_(ncols), field_(field) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const PrimeField& field() const { return field_; }
  bool reduced() const { return reduced_; }

  /// Row index whose pivot is `col`, or -1.
  std::int64_t pivot_row(Column col) const;
  /// Remainder of `row` after elimination against the pivots; empty iff
  /// `row` lies in the row space.
  SparseRow reduce(const SparseRow& row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  bool operator==(const Echelon& o) const {
    return ncols_ == o.ncols_ && rows_ == o.rows_;
  }

private:
  friend class EchelonBuilder;
  friend Echelon reduce_rows_reference(std::span<const SparseRow>, std::size_t, const PrimeField&);

  std::size_t ncols_ = 0;
  PrimeField field_;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_of_;
  bool reduced_ = false;
};

/// Incremental sparse elimination. Rows are inserted in batches: each batch
/// is first reduced against the frozen pivot set in parallel, survivors are
/// then reduced again and inserted one at a time.
class EchelonBuilder {
public:
  EchelonBuilder(std::size_t ncols, PrimeField field, int threads = 0);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Returns the number of new pivots created by the batch.
  std::size_t insert(std::span<const SparseRow> rows);
  /// Returns true iff the row was independent of the current pivots.
  bool insert_one(const SparseRow& row);
  SparseRow reduce(const SparseRow& row) const;

  /// Produces the echelon form; with `fully_reduce` every pivot column is
  /// cleared in all other rows (reduced row echelon form).
  Echelon finish(bool fully_reduce = true) &&;

private:
  std::size_t ncols_;
  PrimeField field_;
  int threads_;
  std::vector<SparseRow> pivots_;
  std::vector<std::int64_t> pivot_of_;
};

/// Production kernel: sparse batched elimination, OpenMP-parallel over rows.
/// `threads` <= 0 uses the OpenMP default.
Echelon reduce_rows(std::span<const SparseRow> rows, std::size_t ncols, const PrimeField& field,
                    int threads = 0);

/// Serial dense Gauss-Jordan elimination. Reference implementation for tests
/// and benchmarks; memory is rows x ncols.
Echelon reduce_rows_reference(std::span<const SparseRow> rows, std::size_t ncols,
                              const PrimeField& field);

}  // namespace perfgen
