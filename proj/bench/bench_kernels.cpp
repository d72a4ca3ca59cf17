// Serial reference kernels against the OpenMP versions.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "cmw/analysis/grid.hpp"
#include "cmw/analysis/norms.hpp"
#include "cmw/analysis/quadrature.hpp"
#include "cmw/analysis/reference.hpp"
#include "cmw/distributions.hpp"

namespace {

using namespace cmw::analysis;

SampledFunction field_1d(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return SampledFunction(Grid({0.0}, 1.0 / static_cast<double>(n), {n}), v);
}

SampledFunction field_2d(std::size_t n) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n * n);
  for (auto& x : v) x = u(rng);
  return SampledFunction(Grid({0.0, 0.0}, 1.0 / static_cast<double>(n), {n, n}), v);
}

void BM_LpSerial(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::grid_lp_norm(f, 3.0));
}
void BM_LpParallel(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(grid_lp_norm(f, 3.0));
}
BENCHMARK(BM_LpSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_LpParallel)->Arg(1 << 16)->Arg(1 << 20);

void BM_ModulusSerial(benchmark::State& st) {
  const auto f = field_2d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::modulus_of_continuity(f, 2, 2.0, 0.1));
}
void BM_ModulusParallel(benchmark::State& st) {
  const auto f = field_2d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(modulus_of_continuity(f, 2, 2.0, 0.1));
}
BENCHMARK(BM_ModulusSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModulusParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_HolderSerial(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::holder_pair_sup(f, 0.5));
}
void BM_HolderParallel(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(holder_seminorm(f, 0.5));
}
BENCHMARK(BM_HolderSerial)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HolderParallel)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);

void BM_ZygmundSerial(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::zygmund_sup(f));
}
void BM_ZygmundParallel(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(zygmund_seminorm(f, 1));
}
BENCHMARK(BM_ZygmundSerial)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZygmundParallel)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);

double integrand(double x) { return std::exp(-x * x) * std::cos(7.0 * x); }

void BM_SimpsonSerial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::simpson(integrand, -4.0, 4.0, n));
}
void BM_SimpsonParallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(simpson(integrand, -4.0, 4.0, n));
}
BENCHMARK(BM_SimpsonSerial)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_SimpsonParallel)->Arg(1 << 14)->Arg(1 << 20);

void BM_FourierSerial(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  const std::vector<double> y{0.0, 1.0, 2.0, 3.0};
  for (auto _ : st) benchmark::DoNotOptimize(reference::fourier_trapezoid(f, y));
}
void BM_FourierParallel(benchmark::State& st) {
  const auto f = field_1d(static_cast<std::size_t>(st.range(0)));
  const std::vector<double> y{0.0, 1.0, 2.0, 3.0};
  for (auto _ : st) benchmark::DoNotOptimize(cmw::distributions::fourier_quadrature_1d(f, y));
}
BENCHMARK(BM_FourierSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_FourierParallel)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
