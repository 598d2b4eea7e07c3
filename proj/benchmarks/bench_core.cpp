#include <benchmark/benchmark.h>

#include "chessboard/scalar.hpp"

namespace {

using chessboard::ExactScalar;

void BM_ScalarMultiply(benchmark::State& state) {
    const auto a = ExactScalar::j() + ExactScalar::sqrt2() * ExactScalar(chessboard::Rational(3, 7));
    const auto b = ExactScalar::i() - ExactScalar::sqrt3();
    for (auto _ : state) {
        auto c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ScalarMultiply);

void BM_ScalarInverse(benchmark::State& state) {
    const auto a = ExactScalar::j() + ExactScalar::sqrt2() * ExactScalar(chessboard::Rational(3, 7));
    for (auto _ : state) {
        auto c = a.inverse();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ScalarInverse);

}  // namespace

BENCHMARK_MAIN();
