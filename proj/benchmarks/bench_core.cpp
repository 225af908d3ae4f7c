#include <benchmark/benchmark.h>

#include "mm/harness.hpp"
#include "mm/partition.hpp"

namespace {

const mm::GameConfig kMM64(6, 4);

void BM_Feedback(benchmark::State& state) {
    const mm::Code query = mm::parse_code("1122", kMM64);
    const mm::Code master = mm::parse_code("2534", kMM64);
    for (auto _ : state) benchmark::DoNotOptimize(mm::feedback(query, master, kMM64));
}
BENCHMARK(BM_Feedback);

void BM_PartitionSizes(benchmark::State& state) {
    const auto universe = mm::enumerate_codes(kMM64);
    const mm::Code guess = mm::parse_code("1122", kMM64);
    for (auto _ : state) benchmark::DoNotOptimize(mm::partition_sizes(guess, universe, kMM64));
}
BENCHMARK(BM_PartitionSizes);

void BM_UniverseBuild(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mm::Universe::build(kMM64));
}
BENCHMARK(BM_UniverseBuild);

void BM_PlayGame(benchmark::State& state) {
    const auto universe = mm::Universe::build(kMM64);
    const auto algorithm = static_cast<mm::Algorithm>(state.range(0));
    const mm::Code master = mm::parse_code("4536", kMM64);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(mm::play_game(universe, algorithm, master, seed++));
}
BENCHMARK(BM_PlayGame)
    ->Arg(static_cast<int>(mm::Algorithm::knuth))
    ->Arg(static_cast<int>(mm::Algorithm::sa))
    ->Arg(static_cast<int>(mm::Algorithm::merc));

}  // namespace
