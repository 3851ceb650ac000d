#include <random>

#include <benchmark/benchmark.h>

#include "frobkit/dsl.hpp"
#include "frobkit/equimult.hpp"
#include "frobkit/parallel.hpp"
#include "frobkit/staircase.hpp"

using namespace frobkit;

namespace {

// Pure powers plus random corners; colength grows with the box side.
std::vector<Monomial> staircase_gens(std::size_t nvars, unsigned side, unsigned corners) {
  std::mt19937_64 rng(nvars * 1000 + side);
  std::uniform_int_distribution<unsigned> d(side / 4, side - 1);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Monomial::variable(i, side));
  for (unsigned k = 0; k < corners; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, d(rng));
    gens.push_back(m);
  }
  return gens;
}

void BM_StaircaseSerial(benchmark::State& state) {
  const auto gens = staircase_gens(static_cast<std::size_t>(state.range(0)), static_cast<unsigned>(state.range(1)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(count_standard_monomials_serial(gens, gens.size() - 40));
}

void BM_StaircaseParallel(benchmark::State& state) {
  const auto gens = staircase_gens(static_cast<std::size_t>(state.range(0)), static_cast<unsigned>(state.range(1)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(count_standard_monomials_parallel(gens, gens.size() - 40));
}

BENCHMARK(BM_StaircaseSerial)->Args({3, 64})->Args({3, 256})->Args({4, 64});
BENCHMARK(BM_StaircaseParallel)->Args({3, 64})->Args({3, 256})->Args({4, 64});

FiniteIdeal quartic_origin(GaloisField::Elem alpha) {
  static const auto f4 = std::make_shared<const GaloisField>(FieldSpec::extension(2, {1, 1, 1}));
  return origin_ideal<GaloisField>(monsky_quartic<GaloisField>(f4, alpha));
}

void BM_HKSweep(benchmark::State& state) {
  const auto m = quartic_origin(2);
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ehk_estimate(m, static_cast<unsigned>(state.range(0)), parallel));
}

BENCHMARK(BM_HKSweep)->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

void BM_BracketBasis(benchmark::State& state) {
  const auto m = quartic_origin(0);
  const unsigned e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const auto bracket = frobenius_power(m, e);
    benchmark::DoNotOptimize(groebner_basis(bracket.ring()->field(), [&] {
      auto gens = bracket.ring()->relations();
      gens.insert(gens.end(), bracket.generators().begin(), bracket.generators().end());
      return gens;
    }(), MonomialOrder::grevlex(), {.reduce = false}));
  }
}

BENCHMARK(BM_BracketBasis)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SplittingSequence(benchmark::State& state) {
  const auto doc = parse_spec("char 3; vars x y z; rel x^2 - y^2*z;");
  const auto ring = build_spec<GaloisField>(doc).ring;
  for (auto _ : state) benchmark::DoNotOptimize(splitting_sequence<GaloisField>(ring, static_cast<unsigned>(state.range(0))));
}

BENCHMARK(BM_SplittingSequence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
