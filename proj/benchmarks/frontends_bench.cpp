#include <benchmark/benchmark.h>

#include "cqfb/cqt.hpp"
#include "cqfb/cwt.hpp"
#include "cqfb/mel.hpp"
#include "cqfb/preprocess.hpp"
#include "cqfb/synth.hpp"

namespace {

using namespace cqfb;

const Signal& one_second() {
  static const Signal x = synth_noise(1.0, 16000, 20240601, 0.5);
  return x;
}

void BM_CqtFast(benchmark::State& state) {
  const CqtParams p;
  for (auto _ : state) benchmark::DoNotOptimize(cqt(one_second(), p, CqtMode::kFast));
}
BENCHMARK(BM_CqtFast)->Unit(benchmark::kMillisecond);

void BM_CqtDirect(benchmark::State& state) {
  const CqtParams p;
  for (auto _ : state) benchmark::DoNotOptimize(cqt(one_second(), p, CqtMode::kDirect));
}
BENCHMARK(BM_CqtDirect)->Unit(benchmark::kMillisecond);

void BM_CqtKernelBank(benchmark::State& state) {
  const CqtParams p;
  for (auto _ : state) benchmark::DoNotOptimize(build_kernel_bank(p));
}
BENCHMARK(BM_CqtKernelBank)->Unit(benchmark::kMillisecond);

void BM_CwtFramed(benchmark::State& state) {
  const CwtParams p;
  for (auto _ : state) benchmark::DoNotOptimize(cwt_framed(one_second(), p));
}
BENCHMARK(BM_CwtFramed)->Unit(benchmark::kMillisecond);

void BM_Mfsc(benchmark::State& state) {
  const MelParams p;
  for (auto _ : state) benchmark::DoNotOptimize(mfsc(one_second(), p));
}
BENCHMARK(BM_Mfsc)->Unit(benchmark::kMillisecond);

void BM_Resample48k(benchmark::State& state) {
  const Signal x = synth_noise(1.0, 48000, 3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(resample_to_16k(x));
}
BENCHMARK(BM_Resample48k)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
