#include <benchmark/benchmark.h>

#include "nlie/cartan.hpp"
#include "nlie/codim1.hpp"
#include "nlie/fixtures.hpp"
#include "nlie/oracle.hpp"

using namespace nlie;

namespace {

NLieAlgebra perfect_gf2(std::uint64_t seed) {
  GeneratorSpec spec;
  spec.strategy = Strategy::PerfectFilter;
  spec.seed = seed;
  return random_algebra(spec);
}

void BM_FieldMultiply(benchmark::State& state) {
  const Field f = make_field(2, static_cast<unsigned>(state.range(0)));
  Rng rng(1);
  std::vector<Scalar> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(random_scalar(rng, f));
  Scalar acc = f.one();
  std::size_t i = 0;
  for (auto _ : state) {
    acc = acc * xs[i++ & 255] + f.one();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMultiply)->Arg(1)->Arg(4)->Arg(8);

void BM_CharPoly(benchmark::State& state) {
  const Field f = make_field(3, 2);
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(rng, f, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(6)->Arg(10);

void BM_Validate(benchmark::State& state) {
  const NLieAlgebra a = perfect_gf2(0);
  for (auto _ : state) benchmark::DoNotOptimize(validate(a));
}
BENCHMARK(BM_Validate);

void BM_EngelSearch(benchmark::State& state) {
  const NLieAlgebra a = perfect_gf2(0);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_engel_cartan(a));
}
BENCHMARK(BM_EngelSearch)->Unit(benchmark::kMillisecond);

void BM_FindCodim1Perfect(benchmark::State& state) {
  const NLieAlgebra a = perfect_gf2(1);
  for (auto _ : state) benchmark::DoNotOptimize(find_codim1(a));
}
BENCHMARK(BM_FindCodim1Perfect)->Unit(benchmark::kMillisecond);

void BM_OracleEnumeration(benchmark::State& state) {
  const NLieAlgebra a = fixture("abelian", 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_codim1_subalgebras(a));
}
BENCHMARK(BM_OracleEnumeration)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
