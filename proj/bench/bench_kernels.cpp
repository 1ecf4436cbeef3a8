#include <benchmark/benchmark.h>

#include "nzeta/kernels.hpp"
#include "nzeta/milnor.hpp"

using namespace nzeta;

namespace {

// the shifted example at m = 3, mu = 32
const Polynomial& shifted() {
  static const Polynomial f = parse_polynomial(
      "7*z3^6+5*z1*z3^4+12*z2*z3^4-8*z1^2*z3^2+6*z2^2*z3^2+4*z1^3+z2^3+z2^6", 3);
  return f;
}

void BM_columns_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::jacobian_columns_serial(shifted(), st.range(0)));
}
void BM_columns_omp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::jacobian_columns_omp(shifted(), st.range(0)));
}

void BM_rank_serial(benchmark::State& st) {
  auto cols = kernels::jacobian_columns_serial(shifted(), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::rank_serial(cols));
  st.counters["columns"] = static_cast<double>(cols.size());
}
void BM_rank_omp(benchmark::State& st) {
  auto cols = kernels::jacobian_columns_serial(shifted(), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::rank_omp(cols));
  st.counters["columns"] = static_cast<double>(cols.size());
}

// plane-section trials for mu*: serial loop vs OpenMP over trials
void BM_trials(benchmark::State& st) {
  const Polynomial f = parse_polynomial("z1^2+z2^3+z3^5+z1*z2*z3", 3);
  const bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(section_milnor(f, 2, 8, 11, par).value);
}

}  // namespace

BENCHMARK(BM_columns_serial)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_columns_omp)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_serial)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_omp)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trials)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
