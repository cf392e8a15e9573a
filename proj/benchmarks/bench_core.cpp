#include <memory>

#include <benchmark/benchmark.h>

#include "atgeo/geodesic.hpp"
#include "atgeo/pairing.hpp"
#include "atgeo/reich.hpp"
#include "atgeo/schedule.hpp"

using namespace atgeo;

namespace {

SchedulePtr shared_schedule() {
  static const auto s = std::make_shared<const ReichSchedule>(build_schedule(0.5, 8));
  return s;
}

void BM_BuildSchedule(benchmark::State& state) {
  const int J = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_schedule(0.5, J));
}
BENCHMARK(BM_BuildSchedule)->Arg(4)->Arg(8)->Arg(16);

void BM_VerifySchedule(benchmark::State& state) {
  const auto s = shared_schedule();
  for (auto _ : state) benchmark::DoNotOptimize(verify_fs_inequalities(*s));
}
BENCHMARK(BM_VerifySchedule);

void BM_PairMonomial(benchmark::State& state) {
  const auto s = shared_schedule();
  const auto spec = build_kappa(s);
  const auto q = DegeneratingFamily::monomials(s, Parity::all).member(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair(spec, q, 16));
}
BENCHMARK(BM_PairMonomial)->Arg(2)->Arg(8)->Arg(16);

void BM_PairFocused(benchmark::State& state) {
  const auto s = shared_schedule();
  const auto spec = build_kappa(s);
  const auto q = DegeneratingFamily::focused(s, Parity::all, 1.0).member(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair(spec, q, 16));
}
BENCHMARK(BM_PairFocused)->Arg(2)->Arg(8)->Arg(16);

void BM_PairingLimsup(benchmark::State& state) {
  const auto s = shared_schedule();
  const auto spec = build_kappa(s);
  const auto f = DegeneratingFamily::monomials(s, Parity::odd);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_limsup(spec, f, 12));
}
BENCHMARK(BM_PairingLimsup);

void BM_CertifyLoopDistance(benchmark::State& state) {
  const auto s = shared_schedule();
  const auto v = loop_vertices(s);
  const auto fams = monomial_dictionary(s);
  for (auto _ : state) benchmark::DoNotOptimize(certify_distance(v[0], v[2], fams, 1e-11));
}
BENCHMARK(BM_CertifyLoopDistance);

}  // namespace

BENCHMARK_MAIN();
