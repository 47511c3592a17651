#include <benchmark/benchmark.h>

#include <random>

#include "noisygen/closure.hpp"
#include "noisygen/dimension.hpp"

using namespace noisygen;

namespace {

Collection gadget_chain_level(std::size_t levels) {
  std::vector<NamedLanguage> languages;
  for (std::size_t j = 0; j < levels; ++j) {
    ElementSet shared;
    for (std::uint64_t k = 0; k < 2 * j + 2; ++k) shared.insert(Element::at(10 + j, k));
    for (const ColumnIndex block : {2 * j, 2 * j + 1}) {
      languages.push_back({"A" + std::to_string(block), SymbolicLanguage::canonicalize({block}, shared)});
    }
  }
  return Collection::explicit_family("bench", std::move(languages));
}

SampleSet random_sample(std::mt19937_64& rng, std::size_t size) {
  SampleSet s;
  while (s.size() < size) s.insert(Element::at(rng() % 8, rng() % 8));
  return s;
}

void BM_NcDimension(benchmark::State& state) {
  const Collection c = gadget_chain_level(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nc_dimension(c, 1, 16, default_pool_depth(1)));
}
BENCHMARK(BM_NcDimension)->DenseRange(1, 3);

void BM_NoisyClosure(benchmark::State& state) {
  const Collection c = gadget_chain_level(4);
  std::mt19937_64 rng(1);
  const SampleSet s = random_sample(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(noisy_closure(c, s, 1));
}
BENCHMARK(BM_NoisyClosure)->Arg(4)->Arg(16)->Arg(64);

void BM_ColumnClosure(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const SampleSet s = random_sample(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(column_closure(s, 1));
}
BENCHMARK(BM_ColumnClosure)->Arg(4)->Arg(32);

void BM_Intersect(benchmark::State& state) {
  ElementSet adds;
  ElementSet removes;
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(state.range(0)); ++k) {
    adds.insert(Element::at(9, k));
    removes.insert(Element::at(0, k));
  }
  const auto a = SetDescriptor::symbolic({0, 1, 2}, adds, removes);
  const auto b = SetDescriptor::symbolic({1, 2, 3}, {}, removes);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_Intersect)->Arg(8)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
