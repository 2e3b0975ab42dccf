// Serial reference against the OpenMP kernels on the box workloads.

#include <benchmark/benchmark.h>

#include "idealiser/noether.hpp"
#include "idealiser/parser.hpp"

using namespace idealiser;

namespace {

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? kernels::Exec::parallel : kernels::Exec::serial;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) ? "omp x" + std::to_string(kernels::omp::max_threads()) : "serial");
}

const PolyRing& plane() {
  static const PolyRing r({"x", "y"});
  return r;
}

void BM_LatticePoints(benchmark::State& state) {
  Poly f = parse_poly("x^2-7*y^2-1", plane());
  Point origin{0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points_box(f, origin, state.range(1), exec_of(state)));
  set_label(state);
}

void BM_SSetPoint(benchmark::State& state) {
  Ideal i(plane(), {parse_poly("x^2-7*y^2-1", plane())}, {.prime = true});
  auto act = TranslationAction::standard(plane());
  for (auto _ : state)
    benchmark::DoNotOptimize(s_set_box(i, Point{1, 0}, act, Lattice::full(2), state.range(1), exec_of(state)));
  set_label(state);
}

void BM_SSetIdeal(benchmark::State& state) {
  Ideal i(plane(), {parse_poly("y^2-x^3-x-1", plane())}, {.prime = true});
  auto act = TranslationAction::standard(plane());
  for (auto _ : state)
    benchmark::DoNotOptimize(s_set_box(i, i, act, Lattice::full(2), state.range(1), exec_of(state)));
  set_label(state);
}

void BM_QuotientTableGeneral(benchmark::State& state) {
  Ideal i(plane(), {parse_poly("x^2-7*y^2-1", plane())}, {.prime = true});
  Ideal j(plane(), {parse_poly("x-8", plane()), parse_poly("y-3", plane())}, {.prime = true, .maximal = true});
  auto act = TranslationAction::standard(plane());
  for (auto _ : state)
    benchmark::DoNotOptimize(quotient_table(j, i, act, state.range(1), QuotientMethod::general, exec_of(state)));
  set_label(state);
}

void BM_TSet(benchmark::State& state) {
  Ideal i(plane(), {parse_poly("x^2-7*y^2-1", plane())}, {.prime = true});
  auto act = TranslationAction::standard(plane());
  for (auto _ : state)
    benchmark::DoNotOptimize(t_set_box(i, i, act, Lattice::full(2), state.range(1), exec_of(state)));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_LatticePoints)->ArgsProduct({{0, 1}, {130, 1000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SSetPoint)->ArgsProduct({{0, 1}, {130}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SSetIdeal)->ArgsProduct({{0, 1}, {8, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuotientTableGeneral)->ArgsProduct({{0, 1}, {4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TSet)->ArgsProduct({{0, 1}, {8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
