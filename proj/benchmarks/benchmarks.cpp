#include <benchmark/benchmark.h>

#include <random>

#include "qtaft/invariants.hpp"
#include "qtaft/selftest.hpp"

using namespace qtaft;

namespace {

PathWord random_word(std::mt19937_64& rng, int n, int length) {
  std::uniform_int_distribution<int> base_dist(0, n - 1);
  std::uniform_int_distribution<int> star_dist(0, 1);
  const int base = base_dist(rng);
  std::vector<Arrow> arrows;
  int at = base;
  for (int i = 0; i < length; ++i) {
    if (star_dist(rng) == 0) {
      arrows.push_back(Arrow{at, false});
      at = (at + 1) % n;
    } else {
      arrows.push_back(Arrow{(at + n - 1) % n, true});
      at = (at + n - 1) % n;
    }
  }
  return PathWord(n, base, std::move(arrows));
}

void CyclotomicMultiply(benchmark::State& state) {
  const long order = state.range(0);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(-4, 4);
  std::vector<Rational> coeffs(totient(order));
  for (auto& c : coeffs) c = Rational(dist(rng), 3);
  const CycNum a = CycNum::from_coefficients(order, coeffs);
  for (auto& c : coeffs) c = Rational(dist(rng), 2);
  const CycNum b = CycNum::from_coefficients(order, coeffs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(CyclotomicMultiply)->Arg(12)->Arg(24)->Arg(60);

void CyclotomicInverse(benchmark::State& state) {
  const CycNum a = CycNum(1) + CycNum::root_of_unity(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(CyclotomicInverse)->Arg(12)->Arg(60);

void NormalFormRewriting(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<PathWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, 4, state.range(0)));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(normal_form(w));
  }
}
BENCHMARK(NormalFormRewriting)->Arg(8)->Arg(16)->Arg(32);

void CenterSolve(benchmark::State& state) {
  const int n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(center_degree_basis(n, n));
  }
}
BENCHMARK(CenterSolve)->Arg(3)->Arg(4)->Arg(6);

void HopfVerification(benchmark::State& state) {
  const ActionSpec spec = example_rotation_action();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_hopf_relations(spec, state.range(0)));
  }
}
BENCHMARK(HopfVerification)->Arg(4)->Arg(6);

void InvariantKernel(benchmark::State& state) {
  const ActionSpec spec = example_rotation_action();
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_basis(spec, state.range(0)));
  }
}
BENCHMARK(InvariantKernel)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
