#include "nodal/nodal.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace nodal;

GeneratorWord alternating_word(int length) {
  GeneratorWord w;
  for (int k = 0; k < length; ++k) w.letters.push_back(k % 2 == 0 ? Generator::D : Generator::T);
  return w;
}

WeylOp dense_op(int size) {
  WeylOp op;
  for (int i = 0; i <= size; ++i) {
    for (int j = 0; j <= size; ++j) op = op + WeylOp::term(i, j, Rational(i + 1, j + 2));
  }
  return op;
}

void BM_WeylMulClosedForm(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const WeylOp lhs = rewrite_to_normal_form(alternating_word(n));
  const WeylOp rhs = rewrite_to_normal_form(alternating_word(n));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul(lhs, rhs));
}
BENCHMARK(BM_WeylMulClosedForm)->DenseRange(4, 12, 4);

void BM_WeylMulRewriting(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const GeneratorWord word = alternating_word(n);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul_oracle(word, word));
}
BENCHMARK(BM_WeylMulRewriting)->DenseRange(4, 12, 4);

void BM_WeylMulDense(benchmark::State& state) {
  const WeylOp op = dense_op(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul(op, op));
}
BENCHMARK(BM_WeylMulDense)->DenseRange(2, 8, 2);

void BM_DaDecompose(benchmark::State& state) {
  const CurveRing curve = nodal_cubic_preset();
  SampleSource source(1);
  const WeylOp op = source.da_element(curve, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(da_decompose(curve, op));
}
BENCHMARK(BM_DaDecompose)->DenseRange(2, 8, 3);

void BM_RefuteLocalProjectivity(benchmark::State& state) {
  const CurveRing curve = nodal_cubic_preset();
  for (auto _ : state) benchmark::DoNotOptimize(refute_local_projectivity(curve));
}
BENCHMARK(BM_RefuteLocalProjectivity)->Unit(benchmark::kMillisecond);

void BM_RefuteBialgebroid(benchmark::State& state) {
  const CurveRing curve = nodal_cubic_preset();
  for (auto _ : state) benchmark::DoNotOptimize(refute_bialgebroid(curve, 4));
}
BENCHMARK(BM_RefuteBialgebroid)->Unit(benchmark::kMillisecond);

void BM_ReplayBialgebroid(benchmark::State& state) {
  const Certificate cert = refute_bialgebroid(nodal_cubic_preset(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(replay_certificate(cert));
}
BENCHMARK(BM_ReplayBialgebroid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
