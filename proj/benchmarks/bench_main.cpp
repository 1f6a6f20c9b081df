#include <benchmark/benchmark.h>

#include "chowkit/chow.hpp"
#include "chowkit/hurwitz.hpp"
#include "chowkit/multiproj.hpp"
#include "chowkit/poly_text.hpp"
#include "chowkit/polydet.hpp"
#include "chowkit/resultant.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ck;

namespace {

PolyMatrix random_matrix(std::size_t m, int deg) {
  auto v = make_vars({"a", "b", "c"});
  Rng rng(7);
  PolyMatrix out(v, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(i, j, oracle::random_poly(v, rng, 4, deg, 8));
  return out;
}

void BM_det_cofactor(benchmark::State& st) {
  auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(det_cofactor(m));
}
BENCHMARK(BM_det_cofactor)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_det_kronecker(benchmark::State& st) {
  auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 2);
  auto caps = default_det_caps(m);
  for (auto _ : st) benchmark::DoNotOptimize(det_kronecker(m, caps));
}
BENCHMARK(BM_det_kronecker)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_resultant_ternary_quadrics(benchmark::State& st) {
  auto v = make_vars({"x0", "x1", "x2", "a"});
  std::vector<MPoly> fs;
  for (const char* s : {"x0^2 + a*x1*x2", "x1^2 - x0*x2", "x2^2 + 3*a*x0*x1"}) fs.push_back(parse_poly(s, v));
  MacaulaySystem sys{fs, {0, 1, 2}};
  for (auto _ : st) benchmark::DoNotOptimize(gcp_resultant(sys));
}
BENCHMARK(BM_resultant_ternary_quadrics)->Unit(benchmark::kMillisecond);

void BM_chow_conic(benchmark::State& st) {
  auto V = fixtures::projective(fixtures::kConic);
  for (auto _ : st) benchmark::DoNotOptimize(chow_form(V, 1));
}
BENCHMARK(BM_chow_conic)->Unit(benchmark::kMillisecond);

void BM_chow_twisted_cubic(benchmark::State& st) {
  auto V = fixtures::projective(fixtures::kTwistedCubic);
  for (auto _ : st) benchmark::DoNotOptimize(chow_form(V, 1));
}
BENCHMARK(BM_chow_twisted_cubic)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_hurwitz_conic(benchmark::State& st) {
  auto V = fixtures::projective(fixtures::kCircle);
  for (auto _ : st) benchmark::DoNotOptimize(hurwitz_form(V, 1));
}
BENCHMARK(BM_hurwitz_conic)->Unit(benchmark::kMillisecond);

void BM_multichow_conic_pair(benchmark::State& st) {
  auto V = fixtures::multiproj(fixtures::kConicPair);
  DimTable t{{1, 1}, {2, 1}, {3, 2}};
  for (auto _ : st) benchmark::DoNotOptimize(multi_chow_form(V, 2, {2, 1}, {}, &t));
}
BENCHMARK(BM_multichow_conic_pair)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
BENCHMARK_MAIN();
