#include <benchmark/benchmark.h>

#include "perfgen/echelon.hpp"
#include "perfgen/families.hpp"

using namespace perfgen;

namespace {

struct Matrix {
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;
};

// Rows u*f for every generator f and monomial u with deg(u*f) < T.
Matrix macaulay(const std::vector<Polynomial>& gens, unsigned T) {
  const std::size_t d = gens.front().nvars();
  TruncatedBasis basis(d, T);
  Matrix m;
  m.ncols = basis.size();
  for (const auto& f : gens) {
    const unsigned o = *f.order();
    for (const auto& u : monomials_below(d, T - o)) {
      SparseRow r = basis.encode_shifted(f, u);
      if (!r.empty()) m.rows.push_back(std::move(r));
    }
  }
  return m;
}

const Matrix& pfaffian_matrix() {
  static const Matrix m = macaulay(gen_pfaffian(5, 2, 1, 1).generators, 8);
  return m;
}

const Matrix& example_matrix() {
  static const Matrix m = macaulay(example_ideal(5).generators, 6);
  return m;
}

void run_reference(benchmark::State& state, const Matrix& m) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_rows_reference(m.rows, m.ncols, PrimeField()).rank());
  }
  state.counters["rows"] = static_cast<double>(m.rows.size());
  state.counters["cols"] = static_cast<double>(m.ncols);
}

void run_sparse(benchmark::State& state, const Matrix& m) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_rows(m.rows, m.ncols, PrimeField(), threads).rank());
  }
  state.counters["rows"] = static_cast<double>(m.rows.size());
  state.counters["cols"] = static_cast<double>(m.ncols);
}

void BM_PfaffianReference(benchmark::State& s) { run_reference(s, pfaffian_matrix()); }
void BM_PfaffianSparse(benchmark::State& s) { run_sparse(s, pfaffian_matrix()); }
void BM_ExampleReference(benchmark::State& s) { run_reference(s, example_matrix()); }
void BM_ExampleSparse(benchmark::State& s) { run_sparse(s, example_matrix()); }

}  // namespace

BENCHMARK(BM_PfaffianReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PfaffianSparse)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExampleReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExampleSparse)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
