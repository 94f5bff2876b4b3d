#include <benchmark/benchmark.h>

#include <random>

#include "orbitdata/basis.hpp"
#include "orbitdata/class_frame.hpp"
#include "orbitdata/intmat.hpp"
#include "orbitdata/lattice_oracle.hpp"
#include "orbitdata/orbit_algebra.hpp"
#include "orbitdata/presets.hpp"

using namespace orbitdata;

namespace {

OrbitDatum random_datum(const ClassFrame& frame, std::mt19937_64& rng) {
  const ConjClassTable& cls = *frame.classes;
  const FiniteGroup& q = *frame.ab.quotient;
  std::map<int, long long> counts;
  std::uniform_int_distribution<int> pick(1, cls.num_classes() - 1);
  for (int i = 0; i < 6; ++i) counts[pick(rng)] += 1;
  int sum = FiniteGroup::identity;
  for (const auto& [c, k] : counts) sum = q.mul(sum, q.power(frame.ab.phi[cls.rep(c)], k));
  if (sum != FiniteGroup::identity) {
    int want = q.inv(sum);
    for (int x = 0; x < frame.group->order(); ++x)
      if (frame.ab.phi[x] == want) {
        counts[cls.class_of[x]] += 1;
        break;
      }
  }
  return make_datum(frame.group, counts);
}

void BM_StructureClosedForm(benchmark::State& state, const char* preset) {
  auto pg = preset_group(preset);
  for (auto _ : state) benchmark::DoNotOptimize(structure_closed_form(pg.group));
}

void BM_OracleStructure(benchmark::State& state, const char* preset) {
  auto pg = preset_group(preset);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_structure(pg.group));
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  int n = static_cast<int>(state.range(0));
  IntMatrix a(n, n);  // banded, like the lattice matrices the oracle reduces
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) a.at(i, (i + k) % n) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
  state.SetComplexityN(state.range(0));
}

void BM_Decompose(benchmark::State& state, const char* preset) {
  auto pg = preset_group(preset);
  BasisCatalog cat = general_basis(pg.group);
  std::mt19937_64 rng(9);
  std::vector<CanonicalForm> forms;
  for (int i = 0; i < 64; ++i) forms.push_back(canonicalize(random_datum(*cat.frame, rng), cat.frame));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(forms[i++ % forms.size()], cat));
  }
}

void BM_Canonicalize(benchmark::State& state, const char* preset) {
  auto pg = preset_group(preset);
  FramePtr frame = build_class_frame(pg.group);
  std::mt19937_64 rng(13);
  std::vector<OrbitDatum> data;
  for (int i = 0; i < 64; ++i) data.push_back(random_datum(*frame, rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(data[i++ % data.size()], frame));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_StructureClosedForm, a5, "A5");
BENCHMARK_CAPTURE(BM_StructureClosedForm, c64, "C64");
BENCHMARK_CAPTURE(BM_OracleStructure, a5, "A5");
BENCHMARK_CAPTURE(BM_OracleStructure, c64, "C64");
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK_CAPTURE(BM_Decompose, s4, "S4");
BENCHMARK_CAPTURE(BM_Decompose, c2_6, "C2xC2xC2xC2xC2xC2");
BENCHMARK_CAPTURE(BM_Canonicalize, s4, "S4");

BENCHMARK_MAIN();
