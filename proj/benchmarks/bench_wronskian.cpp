#include <benchmark/benchmark.h>

#include <vector>

#include "hnl/polynomial.hpp"
#include "hnl/wronskian.hpp"

namespace {

std::vector<hnl::Polynomial> divided_powers(int n) {
  std::vector<hnl::Polynomial> v;
  for (int i = 0; i < n; ++i) v.push_back(hnl::Polynomial::divided_power(i + 1) + hnl::Polynomial::divided_power(2 * i));
  return v;
}

void BM_Wronskian(benchmark::State& state) {
  const auto args = divided_powers(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hnl::wronskian(args));
}
BENCHMARK(BM_Wronskian)->DenseRange(2, 8, 2);

void BM_WronskianMonomials(benchmark::State& state) {
  std::vector<hnl::Rational> nu;
  for (long i = 0; i < state.range(0); ++i) nu.push_back(hnl::make_rational(2 * i + 1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(hnl::wronskian_monomials(nu));
}
BENCHMARK(BM_WronskianMonomials)->DenseRange(2, 6, 2);

void BM_RecurrenceWm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hnl::recurrence_wm(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RecurrenceWm)->Arg(6)->Arg(12);

}  // namespace
