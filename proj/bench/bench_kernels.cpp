#include <benchmark/benchmark.h>

#include "fingertrace/color.hpp"
#include "fingertrace/config.hpp"
#include "fingertrace/fingertip.hpp"
#include "fingertrace/geometry.hpp"
#include "fingertrace/reference.hpp"
#include "fingertrace/synth.hpp"

namespace ft = fingertrace;

namespace {

ft::RgbImage bench_frame() {
    ft::SyntheticHandSpec spec;
    spec.finger_count = 5;
    spec.seed = 42;
    return ft::generate_hand(spec, ft::SkinBand{}).first;
}

ft::BinaryMask bench_mask() {
    return ft::skin_mask(bench_frame(), ft::SkinBand{});
}

void BM_skin_mask(benchmark::State& state) {
    const ft::RgbImage frame = bench_frame();
    const ft::SkinBand band;
    for (auto _ : state) benchmark::DoNotOptimize(ft::skin_mask(frame, band));
}
void BM_skin_mask_serial(benchmark::State& state) {
    const ft::RgbImage frame = bench_frame();
    const ft::SkinBand band;
    for (auto _ : state) benchmark::DoNotOptimize(ft::serial::skin_mask(frame, band));
}

void BM_smooth_mask(benchmark::State& state) {
    const ft::BinaryMask mask = bench_mask();
    const int kernel = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ft::smooth_mask(mask, kernel, 0.5));
}
void BM_smooth_mask_serial(benchmark::State& state) {
    const ft::BinaryMask mask = bench_mask();
    const int kernel = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ft::serial::smooth_mask(mask, kernel, 0.5));
}

void BM_project(benchmark::State& state) {
    const ft::BinaryMask mask = bench_mask();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ft::project(mask, ft::Axis::Columns));
        benchmark::DoNotOptimize(ft::project(mask, ft::Axis::Rows));
    }
}
void BM_project_serial(benchmark::State& state) {
    const ft::BinaryMask mask = bench_mask();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ft::serial::project(mask, ft::Axis::Columns));
        benchmark::DoNotOptimize(ft::serial::project(mask, ft::Axis::Rows));
    }
}

void BM_intensity_ramp(benchmark::State& state) {
    const ft::BinaryMask mask = bench_mask();
    for (auto _ : state)
        benchmark::DoNotOptimize(ft::intensity_ramp(mask, ft::WristSide::Bottom));
}
void BM_intensity_ramp_serial(benchmark::State& state) {
    const ft::BinaryMask mask = bench_mask();
    for (auto _ : state)
        benchmark::DoNotOptimize(ft::serial::intensity_ramp(mask, ft::WristSide::Bottom));
}

void BM_detect(benchmark::State& state) {
    const ft::RgbImage frame = bench_frame();
    const ft::RunConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(ft::detect(frame, cfg));
}

}  // namespace

BENCHMARK(BM_skin_mask);
BENCHMARK(BM_skin_mask_serial);
BENCHMARK(BM_smooth_mask)->Arg(3)->Arg(7)->Arg(15);
BENCHMARK(BM_smooth_mask_serial)->Arg(3)->Arg(7)->Arg(15);
BENCHMARK(BM_project);
BENCHMARK(BM_project_serial);
BENCHMARK(BM_intensity_ramp);
BENCHMARK(BM_intensity_ramp_serial);
BENCHMARK(BM_detect);

BENCHMARK_MAIN();
