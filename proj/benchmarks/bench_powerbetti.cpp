#include <benchmark/benchmark.h>

#include "powerbetti/asymptotics.hpp"
#include "powerbetti/spectra.hpp"

namespace pb = powerbetti;

namespace {

const pb::MonomialIdeal& second_example() {
  static const auto I = pb::parse_ideal(
      "vars: a b c d e f; gens: a^6, a^5*b, a*b^5, b^6, a^4*b^4*c, a^4*b^4*d, a^4*e^2*f^3");
  return I;
}

void BM_BettiTablePower(benchmark::State& state) {
  const auto Ik = pb::power(second_example(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pb::betti_table(Ik, pb::CoefficientField::rational()));
  state.counters["generators"] = static_cast<double>(Ik.num_generators());
}
BENCHMARK(BM_BettiTablePower)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_BettiTableModTwo(benchmark::State& state) {
  const auto Ik = pb::power(second_example(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pb::betti_table(Ik, pb::CoefficientField::prime(2)));
}
BENCHMARK(BM_BettiTableModTwo)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_FindRootsRegularSequence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto outcome = pb::kodiyalam_profile(pb::regular_sequence_series(n, n + 4));
  const auto& profile = std::get<pb::KodiyalamProfile>(outcome);
  const auto p = pb::betti_polynomial_at(profile, 2L * n);
  for (auto _ : state) benchmark::DoNotOptimize(pb::find_roots(p));
}
BENCHMARK(BM_FindRootsRegularSequence)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RootLocus(benchmark::State& state) {
  const auto outcome = pb::kodiyalam_profile(pb::regular_sequence_series(20, 24));
  const auto& profile = std::get<pb::KodiyalamProfile>(outcome);
  for (auto _ : state) benchmark::DoNotOptimize(pb::root_locus(profile, 1, state.range(0)));
}
BENCHMARK(BM_RootLocus)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
