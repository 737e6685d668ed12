#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "random_documents.hpp"
#include "rstsum/presentation.hpp"

namespace {

using namespace rstsum;

std::vector<DocumentSpec> corpus(std::size_t units, std::size_t count) {
  std::mt19937_64 rng(units);
  testing::RandomDocOptions options;
  options.min_units = units;
  options.max_units = units;
  std::vector<DocumentSpec> docs;
  for (std::size_t i = 0; i < count; ++i) docs.push_back(testing::random_document(rng, options));
  return docs;
}

void BM_BuildAndWeigh(benchmark::State& state) {
  const auto docs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& doc = docs[i++ % docs.size()];
    const auto g = build_graph(doc, WeightConfig{});
    benchmark::DoNotOptimize(compute_weights(g, compute_levels(g), WeightConfig{}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildAndWeigh)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_FullPipeline(benchmark::State& state) {
  const auto docs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& doc = docs[i++ % docs.size()];
    const auto g = build_graph(doc, WeightConfig{});
    const auto levels = compute_levels(g);
    auto weights = compute_weights(g, levels, WeightConfig{});
    auto ranking = rank_entities(weights);
    const auto ties = resolve_equal_weights(ranking.tie_groups, g, default_profile());
    apply_tie_decisions(ranking, ties);
    weights.assign_ranks(ranking.order);
    const SummaryBudget budget(testing::total_duration(doc) / 2 + 1);
    const auto selection = trim_to_budget(ranking.order, g, budget);
    const auto manifest = emit_manifest(selection, weights, ties, doc, budget, Toolchain{});
    benchmark::DoNotOptimize(serialize_manifest(manifest));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FullPipeline)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

}  // namespace

BENCHMARK_MAIN();
