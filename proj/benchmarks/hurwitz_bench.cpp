#include <benchmark/benchmark.h>

#include "hurwitz/catalog.hpp"
#include "hurwitz/cohomology.hpp"
#include "hurwitz/cover.hpp"
#include "hurwitz/degen.hpp"

using namespace hurwitz;

static void BM_ClosureSymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalog::symmetric(n));
}
BENCHMARK(BM_ClosureSymmetric)->DenseRange(4, 7);

static void BM_ClosurePsl27(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(catalog::psl27());
}
BENCHMARK(BM_ClosurePsl27);

static void BM_BuildCoverDihedral(benchmark::State& state) {
  const auto fam = catalog::icosahedral_family();
  for (auto _ : state) benchmark::DoNotOptimize(build_cover(fam.dihedral));
}
BENCHMARK(BM_BuildCoverDihedral);

static void BM_BuildCoverSplit(benchmark::State& state) {
  const auto fam = catalog::icosahedral_family();
  for (auto _ : state) benchmark::DoNotOptimize(build_cover(fam.split));
}
BENCHMARK(BM_BuildCoverSplit);

static void BM_DeRhamCharacter(benchmark::State& state) {
  const auto fam = catalog::icosahedral_family();
  const CoverCurve c = build_cover(fam.split);
  for (auto _ : state) benchmark::DoNotOptimize(de_rham_character(c));
}
BENCHMARK(BM_DeRhamCharacter);

static void BM_InducedSignum(benchmark::State& state) {
  const auto fam = catalog::icosahedral_family();
  const element_id gens[] = {fam.m, fam.s};
  const Subgroup d10 = Subgroup::generated_by(fam.group, gens);
  std::vector<int> sgn;
  for (auto x : d10.members()) sgn.push_back(fam.group->element_order(x) == 2 ? -1 : 1);
  for (auto _ : state) benchmark::DoNotOptimize(induced_character(d10, sgn));
}
BENCHMARK(BM_InducedSignum);

static void BM_DihedralSearchKlein(benchmark::State& state) {
  const auto klein = catalog::klein_family();
  for (auto _ : state) benchmark::DoNotOptimize(dihedral_degenerations(klein.triple, 0));
}
BENCHMARK(BM_DihedralSearchKlein);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto fam = catalog::icosahedral_family();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(fam.split));
}
BENCHMARK(BM_CanonicalForm);
BENCHMARK_MAIN();
