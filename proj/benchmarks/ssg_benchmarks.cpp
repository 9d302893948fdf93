#include <benchmark/benchmark.h>

#include <random>

#include "ssg/bisimulation.hpp"
#include "ssg/closure.hpp"
#include "ssg/cross_check.hpp"
#include "ssg/presentation.hpp"
#include "ssg/verdict.hpp"
#include "support.hpp"

namespace {

using namespace ssg;

void BM_Closure(benchmark::State& state) {
  const auto p = parse_presentation(test::read_text(test::data_path("grigorchuk-generators.ssg")));
  for (auto _ : state) benchmark::DoNotOptimize(nucleus_closure(p.automaton, p.generators));
}
BENCHMARK(BM_Closure);

void BM_DecideGrigorchuk(benchmark::State& state) {
  const auto a = test::load("grigorchuk.ssg");
  for (auto _ : state) benchmark::DoNotOptimize(decide_simplicity(a));
}
BENCHMARK(BM_DecideGrigorchuk);

void BM_GammaOracle(benchmark::State& state) {
  const auto a = test::load("grigorchuk.ssg");
  for (auto _ : state) benchmark::DoNotOptimize(gamma_verdict(a, kSmokePrimes));
}
BENCHMARK(BM_GammaOracle);

// |C| = 2^degree, so the digraph has 2^(2^degree - 1) vertices.
void BM_SubsetDigraph(benchmark::State& state) {
  static const std::uint32_t low[] = {0, 0, 0b11, 0b011, 0b0011};
  const auto degree = static_cast<std::uint32_t>(state.range(0));
  const auto a = test::polynomial_nucleus(degree, low[degree]);
  const auto h = build_strongfix(a);
  for (auto _ : state) benchmark::DoNotOptimize(SubsetDigraph::build(h));
  state.counters["subsets"] = static_cast<double>(1u << (h.cyclic.size() - 1));
}
BENCHMARK(BM_SubsetDigraph)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_DecidePolynomial(benchmark::State& state) {
  const auto a = test::polynomial_nucleus(4, 0b0011);
  for (auto _ : state) benchmark::DoNotOptimize(decide_simplicity(a));
}
BENCHMARK(BM_DecidePolynomial)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<IntMatrix> ms;
  for (int i = 0; i < 64; ++i) ms.push_back(test::random_matrix(rng, static_cast<std::size_t>(state.range(0)), -5, 5));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(ms[i++ % ms.size()]));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_Bisimilar(benchmark::State& state) {
  const auto a = test::load("grigorchuk.ssg");
  std::mt19937 rng(2);
  const FormalProduct p = test::random_product(rng, a, static_cast<std::size_t>(state.range(0)));
  const FormalProduct q = p * p.inverse() * p;
  for (auto _ : state) benchmark::DoNotOptimize(bisimilar(a, p, q));
}
BENCHMARK(BM_Bisimilar)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
