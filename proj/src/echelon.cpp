#include "perfgen/echelon.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include <omp.h>

#include "perfgen/error.hpp"

namespace perfgen {

namespace {

constexpr std::size_t kBatchRows = 2048;

// Dense accumulator plus a min-heap of touched columns. Eliminating with a
// pivot row whose lead is c only touches columns > c, so columns pop in
// increasing order and each is finalized when popped.
class Reducer {
public:
  Reducer(std::size_t ncols, const PrimeField& field) : acc_(ncols, 0), field_(field) {}

  SparseRow run(const SparseRow& row, const std::vector<SparseRow>& pivots,
                const std::vector<std::int64_t>& pivot_of) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      acc_[row.cols[k]] = row.vals[k];
      heap_.push(row.cols[k]);
    }
    SparseRow out;
    std::int64_t last = -1;
    while (!heap_.empty()) {
      Column c = heap_.top();
      heap_.pop();
      if (static_cast<std::int64_t>(c) == last) continue;
      last = c;
      Coeff v = acc_[c];
      acc_[c] = 0;
      if (v == 0) continue;
      std::int64_t p = pivot_of[c];
      if (p < 0) {
        out.cols.push_back(c);
        out.vals.push_back(v);
        continue;
      }
      const SparseRow& piv = pivots[static_cast<std::size_t>(p)];
      for (std::size_t k = 1; k < piv.size(); ++k) {
        Column c2 = piv.cols[k];
        if (acc_[c2] == 0) heap_.push(c2);
        acc_[c2] = field_.sub(acc_[c2], field_.mul(v, piv.vals[k]));
      }
    }
    return out;
  }

private:
  std::vector<Coeff> acc_;
  std::priority_queue<Column, std::vector<Column>, std::greater<>> heap_;
  const PrimeField& field_;
};

void normalize(SparseRow& row, const PrimeField& field) {
  Coeff s = field.inv(row.vals.front());
  for (auto& v : row.vals) v = field.mul(v, s);
}

void check_row(const SparseRow& row, std::size_t ncols) {
  if (row.cols.size() != row.vals.size()) throw Error("sparse row has mismatched arrays");
  if (!row.cols.empty() && row.cols.back() >= ncols) throw Error("sparse row column out of range");
}

}  // namespace

std::int64_t Echelon::pivot_row(Column col) const {
  return col < pivot_of_.size() ? pivot_of_[col] : -1;
}

SparseRow Echelon::reduce(const SparseRow& row) const {
  check_row(row, ncols_);
  Reducer r(ncols_, field_);
  return r.run(row, rows_, pivot_of_);
}

EchelonBuilder::EchelonBuilder(std::size_t ncols, PrimeField field, int threads)
    : ncols_(ncols), field_(field), threads_(threads), pivot_of_(ncols, -1) {}

SparseRow EchelonBuilder::reduce(const SparseRow& row) const {
  check_row(row, ncols_);
  Reducer r(ncols_, field_);
  return r.run(row, pivots_, pivot_of_);
}

bool EchelonBuilder::insert_one(const SparseRow& row) {
  SparseRow red = reduce(row);
  if (red.empty()) return false;
  normalize(red, field_);
  pivot_of_[red.lead()] = static_cast<std::int64_t>(pivots_.size());
  pivots_.push_back(std::move(red));
  return true;
}

std::size_t EchelonBuilder::insert(std::span<const SparseRow> rows) {
  for (const auto& r : rows) check_row(r, ncols_);
  const std::size_t before = pivots_.size();
  const int nthreads = threads_ > 0 ? threads_ : omp_get_max_threads();
  std::vector<SparseRow> pre;
  Reducer serial(ncols_, field_);
  for (std::size_t start = 0; start < rows.size(); start += kBatchRows) {
    const std::size_t end = std::min(rows.size(), start + kBatchRows);
    pre.assign(end - start, SparseRow{});
    // Parallel pass against the frozen pivots; this only shrinks rows and
    // discards the ones already in the span.
#pragma omp parallel num_threads(nthreads) if (nthreads > 1 && !pivots_.empty())
    {
      Reducer local(ncols_, field_);
#pragma omp for schedule(dynamic, 32)
      for (std::size_t i = start; i < end; ++i) {
        pre[i - start] = local.run(rows[i], pivots_, pivot_of_);
      }
    }
    for (auto& r : pre) {
      if (r.empty()) continue;
      SparseRow red = serial.run(r, pivots_, pivot_of_);
      if (red.empty()) continue;
      normalize(red, field_);
      pivot_of_[red.lead()] = static_cast<std::int64_t>(pivots_.size());
      pivots_.push_back(std::move(red));
    }
  }
  return pivots_.size() - before;
}

Echelon EchelonBuilder::finish(bool fully_reduce) && {
  Echelon e(ncols_, field_);
  if (fully_reduce) {
    // Back substitution from the rightmost pivot: every row only needs the
    // pivots to its right, which are already fully reduced.
    std::vector<std::size_t> order(pivots_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pivots_[a].lead() > pivots_[b].lead();
    });
    Reducer red(ncols_, field_);
    for (std::size_t idx : order) {
      SparseRow& row = pivots_[idx];
      if (row.size() <= 1) continue;
      SparseRow tail;
      tail.cols.assign(row.cols.begin() + 1, row.cols.end());
      tail.vals.assign(row.vals.begin() + 1, row.vals.end());
      SparseRow t = red.run(tail, pivots_, pivot_of_);
      row.cols.resize(1);
      row.vals.resize(1);
      row.cols.insert(row.cols.end(), t.cols.begin(), t.cols.end());
      row.vals.insert(row.vals.end(), t.vals.begin(), t.vals.end());
    }
  }
  std::sort(pivots_.begin(), pivots_.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.lead() < b.lead(); });
  e.rows_ = std::move(pivots_);
  e.pivot_of_.assign(ncols_, -1);
  for (std::size_t i = 0; i < e.rows_.size(); ++i) {
    e.pivot_of_[e.rows_[i].lead()] = static_cast<std::int64_t>(i);
  }
  e.reduced_ = fully_reduce;
  return e;
}

Echelon reduce_rows(std::span<const SparseRow> rows, std::size_t ncols, const PrimeField& field,
                    int threads) {
  EchelonBuilder b(ncols, field, threads);
  b.insert(rows);
  return std::move(b).finish(true);
}

Echelon reduce_rows_reference(std::span<const SparseRow> rows, std::size_t ncols,
                              const PrimeField& field) {
  const std::size_t m = rows.size();
  std::vector<Coeff> a(m * ncols, 0);
  for (std::size_t i = 0; i < m; ++i) {
    check_row(rows[i], ncols);
    for (std::size_t k = 0; k < rows[i].size(); ++k) a[i * ncols + rows[i].cols[k]] = rows[i].vals[k];
  }
  std::size_t r = 0;
  std::vector<Column> pivot_cols;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p * ncols + c] == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(p * ncols),
                       a.begin() + static_cast<std::ptrdiff_t>((p + 1) * ncols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * ncols));
    }
    Coeff s = field.inv(a[r * ncols + c]);
    for (std::size_t j = c; j < ncols; ++j) a[r * ncols + j] = field.mul(a[r * ncols + j], s);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      Coeff f = a[i * ncols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < ncols; ++j) {
        a[i * ncols + j] = field.sub(a[i * ncols + j], field.mul(f, a[r * ncols + j]));
      }
    }
    pivot_cols.push_back(static_cast<Column>(c));
    ++r;
  }
  Echelon e(ncols, field);
  e.pivot_of_.assign(ncols, -1);
  for (std::size_t i = 0; i < r; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (a[i * ncols + j] != 0) {
        row.cols.push_back(static_cast<Column>(j));
        row.vals.push_back(a[i * ncols + j]);
      }
    }
    e.pivot_of_[pivot_cols[i]] = static_cast<std::int64_t>(i);
    e.rows_.push_back(std::move(row));
  }
  e.reduced_ = true;
  return e;
}

}  // namespace perfgen
