#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "twobridge/twobridge.hpp"

using namespace twobridge;

namespace {

// Random odd-length knot expansion; coefficients in [-bound, bound] \ {0}.
ContinuedFraction random_knot(std::size_t length, long bound, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  while (true) {
    std::vector<ExactInt> cs;
    for (std::size_t i = 0; i < length; ++i) {
      long c = 0;
      while (c == 0) c = dist(rng);
      cs.emplace_back(c);
    }
    ContinuedFraction cf(std::move(cs));
    if (is_knot(cf)) return cf;
  }
}

// p/q of a random even expansion with `length` entries. The division chain
// that recovers an even expansion grows with the coefficient sizes, so they
// stay small here.
Fraction even_fraction(std::size_t length, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 25);
  while (true) {
    std::vector<ExactInt> cs;
    for (std::size_t i = 0; i < length; ++i) {
      long c = dist(rng);
      c = i % 2 == 1 ? 2 * c : (i == 0 ? 2 * c + 1 : c);
      cs.emplace_back(rng() % 2 ? c : -c);
    }
    ContinuedFraction cf(std::move(cs));
    if (!is_knot(cf)) continue;
    const Convergent last = convergents(cf).last();
    if (last.denominator.sign() > 0) return {last.numerator, last.denominator};
    return {-last.numerator, -last.denominator};
  }
}

void BM_FractionSignature(benchmark::State& state) {
  const Fraction f = even_fraction(static_cast<std::size_t>(state.range(0)) | 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(signature_from_fraction(f.p, f.q));
  state.counters["digits"] = static_cast<double>(f.p.abs().str().size());
}
BENCHMARK(BM_FractionSignature)->RangeMultiplier(4)->Range(5, 1281);

void BM_DiagramSignature(benchmark::State& state) {
  const ContinuedFraction cf = random_knot(static_cast<std::size_t>(state.range(0)) | 1, 50, 1);
  for (auto _ : state) benchmark::DoNotOptimize(signature_from_cf(cf));
}
BENCHMARK(BM_DiagramSignature)->RangeMultiplier(4)->Range(5, 1281);

void BM_RemainderOracle(benchmark::State& state) {
  const long p = state.range(0) | 1;
  const long q = p / 3 + (p / 3 % 2 == 0 ? 1 : 0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_signature(p, q));
}
BENCHMARK(BM_RemainderOracle)->RangeMultiplier(10)->Range(1001, 10000001);

void BM_CongruenceDiagonalize(benchmark::State& state) {
  const long c = state.range(0) / 3;
  const ContinuedFraction cf{c | 1, 2, c | 1, -2, c | 1};
  const RationalMatrix g = to_rational(goeritz_matrix(cf).entries);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_diagonalize(g));
  state.counters["dim"] = static_cast<double>(g.rows());
}
BENCHMARK(BM_CongruenceDiagonalize)->RangeMultiplier(2)->Range(24, 384);

void BM_FullTemplateClassification(benchmark::State& state) {
  const long c = state.range(0) | 1;
  const ContinuedFraction cf{c, -c - 1, c, c + 1, -c};
  for (auto _ : state) {
    const TemplateDiagram d = TemplateDiagram::build(cf);
    benchmark::DoNotOptimize(classify_crossings(d));
  }
  state.counters["crossings"] = static_cast<double>(5 * c + 2);
}
BENCHMARK(BM_FullTemplateClassification)->RangeMultiplier(8)->Range(9, 36865);

void BM_ReducedTemplateMu(benchmark::State& state) {
  const ContinuedFraction cf = random_knot(5, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mu(cf));
}
BENCHMARK(BM_ReducedTemplateMu)->RangeMultiplier(1000)->Range(10, 10000000);

}  // namespace

BENCHMARK_MAIN();
