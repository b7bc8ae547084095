#include <benchmark/benchmark.h>

#include "bmec/brieskorn.hpp"
#include "bmec/obstruction.hpp"
#include "bmec/report.hpp"

namespace {

const bmec::Exponents kSmall{2, 3, 5, 7};        // principal period 210
const bmec::Exponents kMedium{3, 5, 7, 11};      // principal period 1155
const bmec::Exponents kLarge{7, 11, 13, 17, 19}; // principal period 323323

void BM_MecClosedForm(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bmec::mec_closed_form(kLarge));
}
BENCHMARK(BM_MecClosedForm);

void BM_MecEngine(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bmec::mec_via_engine(kLarge));
}
BENCHMARK(BM_MecEngine);

void BM_MecOracleSmall(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bmec::mec_bruteforce(kSmall));
}
BENCHMARK(BM_MecOracleSmall);

void BM_MecOracleMedium(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bmec::mec_bruteforce(kMedium));
}
BENCHMARK(BM_MecOracleMedium);

void BM_MecOracleLarge(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bmec::mec_bruteforce(kLarge));
}
BENCHMARK(BM_MecOracleLarge);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bmec::classify_displaceability(kLarge));
}
BENCHMARK(BM_Classify);

void BM_PhiEquivalenceGroups(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bmec::phi_equivalence_groups(kMedium));
}
BENCHMARK(BM_PhiEquivalenceGroups);

} // namespace

BENCHMARK_MAIN();
