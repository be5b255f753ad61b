// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <string>

#include "vlink/arborescence.hpp"
#include "vlink/bracket.hpp"
#include "vlink/digraph.hpp"
#include "vlink/gauss.hpp"

namespace {

// Alternating torus-type knot code with n chords: O1 U2 O3 ... cyclically.
vlink::GaussDiagram chain(int n) {
  std::string code;
  for (int i = 0; i < n; ++i) {
    code += "O" + std::to_string(i + 1) + "+";
    code += "U" + std::to_string((i + n / 2) % n + 1) + "+";
  }
  return vlink::parse_gauss_code(code);
}

// Complete digraph on v vertices.
vlink::Digraph complete(std::size_t v) {
  vlink::Digraph g(v);
  for (std::size_t s = 0; s < v; ++s)
    for (std::size_t t = 0; t < v; ++t)
      if (s != t) g.add_edge(s, t);
  return g;
}

void bracket_serial(benchmark::State& state) {
  const auto d = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vlink::bracket_state_sum_serial(d));
}

void bracket_parallel(benchmark::State& state) {
  const auto d = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vlink::bracket_state_sum(d));
}

void trees_serial(benchmark::State& state) {
  const auto g = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vlink::enumerate_arborescences_serial(g, 0));
}

void trees_parallel(benchmark::State& state) {
  const auto g = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vlink::enumerate_arborescences(g, 0));
}

}  // namespace

BENCHMARK(bracket_serial)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(bracket_parallel)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(trees_serial)->DenseRange(4, 5, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(trees_parallel)->DenseRange(4, 5, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
