#include <benchmark/benchmark.h>

#include "rcg/classes.hpp"
#include "rcg/realprops.hpp"
#include "rcg/structure.hpp"
#include "rcg/zoo.hpp"

namespace {

void BM_ChainSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcg::symmetric_group(n).order());
}
BENCHMARK(BM_ChainSymmetric)->Arg(6)->Arg(8)->Arg(10);

void BM_ChainPsl2(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcg::psl2(p).order());
}
BENCHMARK(BM_ChainPsl2)->Arg(13)->Arg(31)->Arg(61);

void BM_ClassesAlt(benchmark::State& state) {
  const auto g = rcg::alternating_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rcg::conjugacy_classes(g).size());
}
BENCHMARK(BM_ClassesAlt)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RealSpectrumPsl2(benchmark::State& state) {
  const auto g = rcg::psl2(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rcg::has_property_WT(g).holds);
}
BENCHMARK(BM_RealSpectrumPsl2)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_NormalLattice(benchmark::State& state) {
  const auto g = rcg::build(rcg::parse_spec_string("sym:4*cyclic:2*sym:3"));
  for (auto _ : state) benchmark::DoNotOptimize(rcg::normal_subgroups(g).size());
}
BENCHMARK(BM_NormalLattice)->Unit(benchmark::kMillisecond);

void BM_QuotientByCore(benchmark::State& state) {
  const auto g = rcg::build(rcg::parse_spec_string("affine:31,5*sym:3"));
  const auto n = rcg::o_p_prime(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rcg::quotient(g, n).image().order());
}
BENCHMARK(BM_QuotientByCore)->Unit(benchmark::kMillisecond);

void BM_Zsigmondy(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint64_t q = 2; q <= 10; ++q) {
      for (std::uint64_t n = 3; n <= 12; ++n) benchmark::DoNotOptimize(rcg::zsigmondy_l(q, n));
    }
  }
}
BENCHMARK(BM_Zsigmondy);

}  // namespace

BENCHMARK_MAIN();
