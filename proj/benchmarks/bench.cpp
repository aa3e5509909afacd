#include <benchmark/benchmark.h>

#include "calg2/catalog.hpp"
#include "calg2/classify.hpp"
#include "calg2/cohomology.hpp"
#include "calg2/g2.hpp"
#include "calg2/notation.hpp"
#include "calg2/obstructions.hpp"

using namespace calg2;

namespace {

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> e = expand_families(load_catalog(CALG2_BENCH_CATALOG));
  return e;
}

void BM_WedgeTwoByThree(benchmark::State& state) {
  Form a = parse_form("12+34+56+17-25", 7, 2);
  Form b = parse_form("123+145+167+246-257-347-356", 7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_WedgeTwoByThree);

void BM_Differential(benchmark::State& state) {
  LieAlgebra g = LieAlgebra::from_salamon("0,0,12,13,23,15+24,16+34");
  Form phi = standard_phi();
  for (auto _ : state) benchmark::DoNotOptimize(g.d(phi));
}
BENCHMARK(BM_Differential);

void BM_ClosedForms(benchmark::State& state) {
  LieAlgebra g = LieAlgebra::from_salamon("0,0,12,13,23,15+24,16+34");
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_forms(g, k).dim());
}
BENCHMARK(BM_ClosedForms)->DenseRange(2, 4);

void BM_GramRational(benchmark::State& state) {
  Form phi = standard_phi();
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(phi));
}
BENCHMARK(BM_GramRational);

void BM_CalibratedWithRadicals(benchmark::State& state) {
  const CatalogEntry* e = nullptr;
  for (const CatalogEntry& c : entries())
    if (c.name == "147E1(lambda=2)") e = &c;
  LieAlgebra g = e->algebra();
  std::vector<RadicalForm> coframe = parse_coframe(e->coframe, 7);
  for (auto _ : state) benchmark::DoNotOptimize(is_calibrated_g2(g, phi_from_coframe(coframe)).calibrated());
}
BENCHMARK(BM_CalibratedWithRadicals);

void BM_Obstr2(benchmark::State& state) {
  LieAlgebra g = LieAlgebra::from_salamon("0,0,0,0,12,34,36");
  for (auto _ : state) benchmark::DoNotOptimize(obstr2_holds(g, basis_vector(7, 7)));
}
BENCHMARK(BM_Obstr2);

void BM_PropEpi(benchmark::State& state) {
  LieAlgebra g = LieAlgebra::from_salamon("0,0,12,0,13,23,14");
  for (auto _ : state) benchmark::DoNotOptimize(prop_epi_obstructs(g, basis_vector(7, 7)).kind);
}
BENCHMARK(BM_PropEpi);

void BM_ClassifySweep(benchmark::State& state) {
  unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(entries(), jobs).count(Verdict::Calibrated));
}
BENCHMARK(BM_ClassifySweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
