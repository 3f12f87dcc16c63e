// OpenMP kernels against their serial references. Inputs are chosen so
// that the searches run to completion (no early witness).

#include <benchmark/benchmark.h>

#include "varlat/latcheck.hpp"
#include "varlat/models.hpp"
#include "varlat/text.hpp"

using namespace varlat;

namespace {

  CayleyTable const& free_table() {
    static CayleyTable const t = quotient_to_table(free_quotient(parse_basis("N{p=4}"), 3));
    return t;
  }

  Identity const holds = parse_identity("x*y*z = z*y*x");

  FiniteLattice const& big_lattice() {
    static FiniteLattice const l = product(product(chain(8), chain(8)), chain(4));
    return l;
  }

  void BM_counterexample_parallel(benchmark::State& s) {
    for (auto _ : s) {
      benchmark::DoNotOptimize(find_counterexample(free_table(), holds));
    }
  }
  void BM_counterexample_serial(benchmark::State& s) {
    for (auto _ : s) {
      benchmark::DoNotOptimize(serial::find_counterexample(free_table(), holds));
    }
  }

  void BM_witness_parallel(benchmark::State& s) {
    auto const& l = big_lattice();
    for (auto _ : s) {
      benchmark::DoNotOptimize(find_witness(l, 17, ElementKind::distributive));
    }
  }
  void BM_witness_serial(benchmark::State& s) {
    auto const& l = big_lattice();
    for (auto _ : s) {
      benchmark::DoNotOptimize(serial::find_witness(l, 17, ElementKind::distributive));
    }
  }

}  // namespace

BENCHMARK(BM_counterexample_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_counterexample_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_witness_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_witness_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
