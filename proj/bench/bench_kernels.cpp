#include "sf/arith.hpp"
#include "sf/recurrence.hpp"

#include <benchmark/benchmark.h>

namespace {

const sf::ThetaShape kShape{3, 5, sf::Alpha::zeta()};

void BM_ThetaOracle_Serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sf::theta_table_oracle_serial(kShape, st.range(0)));
}
void BM_ThetaOracle_Parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sf::theta_table_oracle(kShape, st.range(0)));
}
BENCHMARK(BM_ThetaOracle_Serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaOracle_Parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ThetaCrosscheck_Serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sf::theta_crosscheck_serial(kShape, st.range(0)));
}
void BM_ThetaCrosscheck_Parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sf::theta_crosscheck(kShape, st.range(0)));
}
BENCHMARK(BM_ThetaCrosscheck_Serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaCrosscheck_Parallel)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Integrality_Serial(benchmark::State& st) {
    const sf::ThetaShape shape{2, 4, sf::Alpha::zeta()};
    for (auto _ : st) benchmark::DoNotOptimize(sf::integrality_report_serial(shape, st.range(0)));
}
void BM_Integrality_Parallel(benchmark::State& st) {
    const sf::ThetaShape shape{2, 4, sf::Alpha::zeta()};
    for (auto _ : st) benchmark::DoNotOptimize(sf::integrality_report(shape, st.range(0)));
}
BENCHMARK(BM_Integrality_Serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Integrality_Parallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_DeltaBruteforce_Serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sf::delta_bruteforce_serial(3, static_cast<std::uint64_t>(st.range(0))));
}
void BM_DeltaBruteforce_Parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sf::delta_bruteforce(3, static_cast<std::uint64_t>(st.range(0))));
}
BENCHMARK(BM_DeltaBruteforce_Serial)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaBruteforce_Parallel)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
