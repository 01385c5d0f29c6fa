#include <benchmark/benchmark.h>

#include <vector>

#include "hnl/assoc.hpp"
#include "hnl/homotopy.hpp"
#include "hnl/jet.hpp"
#include "hnl/wronskian.hpp"

namespace {

// Alternating bracket of z^i d^(i % 3), N = range(0).
void BM_AltBracket(benchmark::State& state) {
  const auto basis = hnl::diffop_basis(4, 2);
  std::vector<hnl::DiffOp> args;
  for (long i = 0; i < state.range(0); ++i) args.push_back(basis[static_cast<std::size_t>(3 * i + 1) % basis.size()]);
  for (auto _ : state) benchmark::DoNotOptimize(hnl::alt_bracket(args));
}
BENCHMARK(BM_AltBracket)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_OnlyWronskianN4(benchmark::State& state) {
  const std::vector<hnl::Polynomial> w{hnl::Polynomial::monomial(1, {0}), hnl::Polynomial::monomial(1, {1}),
                                       hnl::Polynomial::monomial(1, {3}), hnl::Polynomial::monomial(1, {2}, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(hnl::check_only_wronskian(4, static_cast<int>(state.range(0)), w));
}
BENCHMARK(BM_OnlyWronskianN4)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_JacobiClassicalWronskian(benchmark::State& state) {
  const auto op = hnl::classical_wronskian_op(static_cast<std::size_t>(state.range(0)));
  const auto space = hnl::monomial_test_space(1, 2 * op.slot_order_bound());
  for (auto _ : state) benchmark::DoNotOptimize(hnl::check_homotopy_jacobi(op, space));
}
BENCHMARK(BM_JacobiClassicalWronskian)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_JacobiBox21(benchmark::State& state) {
  const auto op = hnl::box_op(2, 1);
  const auto space = hnl::monomial_test_space(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hnl::check_homotopy_jacobi(op, space));
}
BENCHMARK(BM_JacobiBox21)->Unit(benchmark::kMillisecond);

void BM_JacobiThreads(benchmark::State& state) {
  const auto op = hnl::generalized_wronskian_op({0, 1, 3});
  const auto space = hnl::monomial_test_space(1, 6);
  hnl::SearchOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hnl::check_homotopy_jacobi(op, space, opts));
}
BENCHMARK(BM_JacobiThreads)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
