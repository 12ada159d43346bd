#include <benchmark/benchmark.h>

#include "cnull/charpoly.hpp"
#include "cnull/nullcert.hpp"
#include "cnull/roots.hpp"
#include "support.hpp"

using namespace cnull;
using namespace cnull::test;

namespace {

MPoly dense_bivariate(int degree, std::uint64_t seed) { return PolyGen(seed).poly(2, degree, 4 * degree); }

void BM_PolyMul(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const MPoly p = dense_bivariate(deg, 1);
  const MPoly q = dense_bivariate(deg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_Resultant(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const MPoly p = dense_bivariate(deg, 3) + MPoly::variable(2, 1).pow(deg);
  const MPoly q = dense_bivariate(deg, 4) + MPoly::variable(2, 1).pow(deg);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q, 1));
}
BENCHMARK(BM_Resultant)->Arg(3)->Arg(5)->Arg(7);

void BM_RootsUnivariate(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const MPoly p = MPoly::variable(1, 0).pow(deg) - MPoly::variable(1, 0) - MPoly::constant(1, Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(roots_univariate(p));
}
BENCHMARK(BM_RootsUnivariate)->Arg(8)->Arg(16)->Arg(32);

void BM_CuspCharPoly(benchmark::State& state) {
  const auto c = make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json");
  for (auto _ : state) benchmark::DoNotOptimize(build_charpoly(c.f, c.g, 0));
}
BENCHMARK(BM_CuspCharPoly);

void BM_NodalCertify(benchmark::State& state) {
  const auto c = make_case("nodal", "nodal.json", "nodal_f.json", "nodal_g.json");
  for (auto _ : state) benchmark::DoNotOptimize(certify_general(c.f, c.g, 0));
}
BENCHMARK(BM_NodalCertify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
