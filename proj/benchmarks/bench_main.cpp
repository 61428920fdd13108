#include <benchmark/benchmark.h>

#include "tribq/greedy.hpp"
#include "tribq/grundy.hpp"
#include "tribq/numeration.hpp"
#include "tribq/word.hpp"
#include "tribq/xymp.hpp"

namespace {

void BM_CanonicalRepr(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::size_t bits = 0;
    for (std::uint64_t n = 0; n < limit; ++n) {
      bits += tribq::canonical_repr(n).size();
    }
    benchmark::DoNotOptimize(bits);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CanonicalRepr)->Arg(10000)->Arg(100000);

void BM_LetterAt(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribq::letter_at(n));
    n = n * 6364136223846793005ULL % 1000000007ULL + 1;
  }
}
BENCHMARK(BM_LetterAt);

void BM_WordStream(benchmark::State& state) {
  for (auto _ : state) {
    tribq::WordStream stream = tribq::WordStream::tribonacci();
    for (std::int64_t i = 0; i < state.range(0); ++i) {
      benchmark::DoNotOptimize(stream.next());
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WordStream)->Arg(1000000);

void BM_XympBuildMex(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribq::XympTable::build_mex(static_cast<std::size_t>(state.range(0))).size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_XympBuildMex)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_AbcMex(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribq::abc_mex(static_cast<std::uint64_t>(state.range(0))).size());
  }
}
BENCHMARK(BM_AbcMex)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_SimulateSpiral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribq::simulate_spiral(static_cast<std::size_t>(state.range(0))).size());
  }
}
BENCHMARK(BM_SimulateSpiral)->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_QuadrantByColumns(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tribq::simulate_quadrant_by_columns(static_cast<std::size_t>(state.range(0))).size());
  }
}
BENCHMARK(BM_QuadrantByColumns)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_SgSpiral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribq::sg_spiral(static_cast<std::uint64_t>(state.range(0))).size());
  }
}
BENCHMARK(BM_SgSpiral)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_SgQuadrant(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribq::sg_quadrant(static_cast<std::uint64_t>(state.range(0))).size());
  }
}
BENCHMARK(BM_SgQuadrant)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_SgQuadrantColumns(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tribq::sg_quadrant_columns(33, static_cast<std::uint64_t>(state.range(0))).columns.size());
  }
}
BENCHMARK(BM_SgQuadrantColumns)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_SgWythoff(benchmark::State& state) {
  const auto side = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribq::sg_wythoff(side, side).size());
  }
}
BENCHMARK(BM_SgWythoff)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
