// Microbenchmarks for the hot paths: exact set algebra, witness search,
// Darboux sums over the truncated cover, and certified transform values.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "dlab/darboux.hpp"
#include "dlab/enclosure_math.hpp"
#include "dlab/fourier.hpp"
#include "dlab/interval_set.hpp"
#include "dlab/partition.hpp"
#include "dlab/sequences.hpp"
#include "dlab/witnesses.hpp"

namespace {

using dlab::Rational;

void BM_FatUnion(benchmark::State& state) {
  dlab::FatCoverConfig cfg{Rational(1, 2)};
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlab::fat_union(cfg, k));
  }
}
BENCHMARK(BM_FatUnion)->Arg(8)->Arg(16)->Arg(24);

void BM_IntervalSetDifference(benchmark::State& state) {
  dlab::FatCoverConfig cfg{Rational(1, 2)};
  dlab::IntervalSet cover = dlab::fat_union(cfg, static_cast<std::uint64_t>(state.range(0)));
  dlab::IntervalSet cell =
      dlab::IntervalSet::of(dlab::Interval{Rational(1, 3), Rational(2, 3), false, false});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlab::IntervalSet::difference(cell, cover).measure());
  }
}
BENCHMARK(BM_IntervalSetDifference)->Arg(8)->Arg(16)->Arg(24);

void BM_SimplestRational(benchmark::State& state) {
  dlab::Partition p = dlab::Partition::random(64, 2024);
  for (auto _ : state) {
    for (std::size_t i = 0; i < p.cells(); ++i) {
      auto [lo, hi] = p.cell(i);
      benchmark::DoNotOptimize(
          dlab::simplest_rational_in(dlab::Interval{lo, hi, false, false}));
    }
  }
}
BENCHMARK(BM_SimplestRational);

void BM_RationalRank(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlab::rational_rank(Rational(113, 355)));
  }
}
BENCHMARK(BM_RationalRank);

void BM_DarbouxSums(benchmark::State& state) {
  dlab::FunctionDescriptor d =
      dlab::FatCoverDescriptor{dlab::FatCoverConfig{Rational(1, 2)}};
  dlab::Partition p = dlab::Partition::random(static_cast<std::uint64_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlab::darboux_sums(d, p, 16));
  }
}
BENCHMARK(BM_DarbouxSums)->Arg(16)->Arg(64)->Arg(256);

void BM_Sin2pi(benchmark::State& state) {
  Rational x(355, 1130);
  const int prec = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlab::sin2pi(x, prec));
  }
}
BENCHMARK(BM_Sin2pi)->Arg(40)->Arg(64)->Arg(128);

void BM_TransformValue(benchmark::State& state) {
  dlab::TransformProbe probe =
      dlab::TransformProbe::fat_cover(dlab::FatCoverConfig{Rational(1, 2)}, 6);
  Rational freq(7, 2);
  const int prec = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlab::transform_value(probe, freq, prec));
  }
}
BENCHMARK(BM_TransformValue)->Arg(40)->Arg(64);

void BM_PlancherelProbe(benchmark::State& state) {
  dlab::TransformProbe probe = dlab::TransformProbe::single_interval();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dlab::plancherel_probe(probe, Rational(8), static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_PlancherelProbe)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
