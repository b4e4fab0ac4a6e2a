#include "flagcoh/eigencone.hpp"
#include "flagcoh/horn.hpp"
#include "flagcoh/workspace.hpp"

#include <benchmark/benchmark.h>

using namespace flagcoh;

namespace {

const char* kTypes[] = {"A3", "B3", "C3", "G2", "A4", "B4"};

void BM_WeylGroup(benchmark::State& state) {
  const auto rs = RootSystem::build(CartanType::parse(kTypes[state.range(0)]));
  for (auto _ : state) {
    WeylGroup g(rs);
    benchmark::DoNotOptimize(g.size());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_WeylGroup)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_ProductTable(benchmark::State& state) {
  Workspace ws(CartanType::parse(kTypes[state.range(0)]));
  const auto& polys = ws.polynomials();
  const auto p = ParabolicIndex::maximal(ws.group().rank(), 1);
  const auto& q = ws.quotient(p);
  for (auto _ : state) benchmark::DoNotOptimize(ProductTable::compute(q, polys).size());
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_ProductTable)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_DeformedTable(benchmark::State& state) {
  for (auto _ : state) {
    Workspace ws(CartanType::parse("B3"));
    for (int i = 0; i < 3; ++i) benchmark::DoNotOptimize(ws.deformed(ParabolicIndex::maximal(3, i)).size());
  }
}
BENCHMARK(BM_DeformedTable)->Unit(benchmark::kMillisecond);

void BM_HornT2(benchmark::State& state) {
  Workspace ws(CartanType::parse("C3"));
  HornEngine engine(ws);
  const auto p = ParabolicIndex::maximal(3, 1);
  const auto& q = ws.quotient(p);
  const auto tuples = codim_tuples(q, 3, q.dimension());
  for (auto _ : state) {
    std::size_t checks = 0;
    for (const auto& idx : tuples) {
      std::vector<ElementId> t;
      for (int k : idx) t.push_back(q.element(k));
      checks += engine.check_T2(p, t).checks.size();
    }
    benchmark::DoNotOptimize(checks);
  }
}
BENCHMARK(BM_HornT2)->Unit(benchmark::kMillisecond);

void BM_GenerateSystem(benchmark::State& state) {
  Workspace ws(CartanType::parse("B3"));
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_system(ws, s, SystemMode::Classical).inequalities.size());
}
BENCHMARK(BM_GenerateSystem)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_PruneRedundant(benchmark::State& state) {
  Workspace ws(CartanType::parse("B3"));
  const auto sys = generate_system(ws, 3, state.range(0) ? SystemMode::Deformed : SystemMode::Classical);
  for (auto _ : state) benchmark::DoNotOptimize(prune_redundant(sys).redundant_count());
  state.SetLabel(state.range(0) ? "B'" : "B");
}
BENCHMARK(BM_PruneRedundant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
