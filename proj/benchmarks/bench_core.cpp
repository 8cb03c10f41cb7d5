#include "sgcm/cohomology.hpp"
#include "sgcm/int_matrix.hpp"
#include "sgcm/semigroup.hpp"
#include "sgcm/simplicial.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sgcm;

namespace {

const IntMatrix kRectangle{{0, 0, 3}, {2, 0, 1}, {0, 1, 2}, {2, 1, 0}, {1, 0, 2}};
const IntMatrix kNonCm{{0, 2, 1}, {3, 1, 2}, {0, 1, 0}, {3, 2, 3}, {2, 2, 1}, {2, 3, 3}};

IntMatrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  return m;
}

void BM_HermiteNormalForm(benchmark::State& state) {
  const IntMatrix m = random_square(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_square(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8);

void BM_BuildSemigroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_semigroup(kNonCm));
}
BENCHMARK(BM_BuildSemigroup);

void BM_MemberOfS(benchmark::State& state) {
  const auto s = build_semigroup(kNonCm);
  const IntVector x{14, 16, 15};
  for (auto _ : state) benchmark::DoNotOptimize(member_of_S(s, x));
}
BENCHMARK(BM_MemberOfS);

void BM_MemberOfSi(benchmark::State& state) {
  const auto s = build_semigroup(kNonCm);
  const IntVector x{1, 1, 1};
  for (auto _ : state)
    for (std::size_t f = 0; f < s.num_facets(); ++f) benchmark::DoNotOptimize(in_localization(s, f, x));
}
BENCHMARK(BM_MemberOfSi);

void BM_ReducedBetti(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<VertexSet> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.push_back(vertex_set({i, i % n + 1}));
  const auto cycle = SimplicialComplex::closure(vertex_set([&] {
    std::vector<std::size_t> all;
    for (std::size_t i = 1; i <= n; ++i) all.push_back(i);
    return all;
  }()), edges);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti_numbers(cycle, FieldSpec::rationals()));
}
BENCHMARK(BM_ReducedBetti)->Arg(5)->Arg(12)->Arg(20);

void BM_AnalyzeRectangle(benchmark::State& state) {
  const auto s = build_semigroup(kRectangle);
  const CohomologyOptions opts{FieldSpec::rationals(), Integer(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(analyze_cohomology(s, opts));
}
BENCHMARK(BM_AnalyzeRectangle)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_AnalyzeNonCm(benchmark::State& state) {
  const auto s = build_semigroup(kNonCm);
  const CohomologyOptions opts{FieldSpec::rationals(), Integer(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(analyze_cohomology(s, opts));
}
BENCHMARK(BM_AnalyzeNonCm)->Arg(12)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
