#include <benchmark/benchmark.h>

#include "tropmirror/amoeba/sampler.hpp"
#include "tropmirror/coordring/ring.hpp"
#include "tropmirror/diagnostics.hpp"
#include "tropmirror/floer/algebra.hpp"
#include "tropmirror/tropical/constants.hpp"

using namespace tropmirror;

namespace {

Fan p2_fan() { return Fan({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }
SupportFunction ones() { return {{Rational(1), Rational(1), Rational(1)}}; }

void BM_RegularSubdivision(benchmark::State& state) {
  const auto h = tropical::height_from_bundle(p2_fan(), ones());
  for (auto _ : state) benchmark::DoNotOptimize(tropical::regular_subdivision(h));
}
BENCHMARK(BM_RegularSubdivision);

void BM_TropicalConstants(benchmark::State& state) {
  const auto pi = tropical::tropical_complex(tropical::height_from_bundle(p2_fan(), ones()));
  for (auto _ : state) benchmark::DoNotOptimize(tropical::tropical_constants(pi));
}
BENCHMARK(BM_TropicalConstants)->Unit(benchmark::kMillisecond);

void BM_AssembleAlgebra(benchmark::State& state) {
  set_diagnostic_sink([](const std::string&) {});
  const Polytope q = polytope_from_bundle(p2_fan(), ones());
  for (auto _ : state) benchmark::DoNotOptimize(floer::assemble_algebra(q, state.range(0)));
}
BENCHMARK(BM_AssembleAlgebra)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyIsomorphism(benchmark::State& state) {
  set_diagnostic_sink([](const std::string&) {});
  const Polytope q = polytope_from_bundle(p2_fan(), ones());
  const auto alg = floer::assemble_algebra(q, 4);
  const auto ring = coordring::section_ring(q, 4);
  for (auto _ : state) benchmark::DoNotOptimize(coordring::verify_isomorphism(alg, ring));
}
BENCHMARK(BM_VerifyIsomorphism)->Unit(benchmark::kMillisecond);

void BM_AmoebaSample(benchmark::State& state) {
  const double L = 4.0, s = state.range(0) / 4.0;
  const auto f = amoeba::PatchworkFamily::from_fan(p2_fan(), ones(), L, s, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(amoeba::amoeba_sample_curve(f, {40, 16, {-13, -13}, {13, 13}}));
}
BENCHMARK(BM_AmoebaSample)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
