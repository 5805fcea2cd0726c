// Copyright 2026 The galsieve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "galsieve/applications.hpp"
#include "galsieve/characters.hpp"
#include "galsieve/curves.hpp"
#include "galsieve/matrix_group.hpp"
#include "galsieve/numbers.hpp"
#include "galsieve/sieve.hpp"
#include "galsieve/sieve_random.hpp"

using namespace galsieve;

static void BM_ap_bsgs(benchmark::State& state) {
  const EllipticCurveQ E(1, 1);
  const auto primes = primes_up_to(static_cast<double>(state.range(0)));
  const std::vector<u64> sample(primes.end() - 64, primes.end());
  for (auto _ : state)
    for (u64 p : sample) benchmark::DoNotOptimize(ap(E, p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sample.size()));
}
BENCHMARK(BM_ap_bsgs)->Arg(10000)->Arg(1000000);

static void BM_ap_character_sum(benchmark::State& state) {
  const EllipticCurveQ E(1, 1);
  const u64 p = primes_up_to(static_cast<double>(state.range(0))).back();
  for (auto _ : state) benchmark::DoNotOptimize(ap_character_sum(E, p));
}
BENCHMARK(BM_ap_character_sum)->Arg(10000)->Arg(100000);

static void BM_genus2_counts(benchmark::State& state) {
  const Genus2CurveQ C(IntPolynomial{1, -1, 0, 0, 0, 1});
  const u64 p = primes_up_to(static_cast<double>(state.range(0))).back();
  for (auto _ : state) benchmark::DoNotOptimize(count_points_g2(C, p));
}
BENCHMARK(BM_genus2_counts)->Arg(1000)->Arg(20000);

static void BM_genus2_direct(benchmark::State& state) {
  const Genus2CurveQ C(IntPolynomial{1, -1, 0, 0, 0, 1});
  const u64 p = primes_up_to(static_cast<double>(state.range(0))).back();
  for (auto _ : state) benchmark::DoNotOptimize(count_points_g2_direct(C, p));
}
BENCHMARK(BM_genus2_direct)->Arg(1000);

static void BM_char_table_gl2(benchmark::State& state) {
  const auto G = gl2(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_table_gl2(G));
}
BENCHMARK(BM_char_table_gl2)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_char_table_generic(benchmark::State& state) {
  const auto G = gl2(3);
  for (auto _ : state) benchmark::DoNotOptimize(char_table_generic(G));
}
BENCHMARK(BM_char_table_generic)->Unit(benchmark::kMillisecond);

static void BM_delta_exact(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto inst = random_sieve_instance(rng);
  for (auto _ : state) benchmark::DoNotOptimize(delta_exact(inst, 0));
}
BENCHMARK(BM_delta_exact)->Unit(benchmark::kMillisecond);

static void BM_koblitz_L(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(koblitz_L(static_cast<double>(state.range(0))));
}
BENCHMARK(BM_koblitz_L)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_koblitz_L_exact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(koblitz_L_coefficients(static_cast<double>(state.range(0))));
}
BENCHMARK(BM_koblitz_L_exact)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
