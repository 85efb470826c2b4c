#include <benchmark/benchmark.h>

#include <random>

#include "topkvote/flows.hpp"
#include "topkvote/oracle.hpp"
#include "topkvote/reductions.hpp"
#include "topkvote/scorespace.hpp"

namespace {

using namespace topkvote;

PartialOrder sample_order(std::mt19937_64& rng, int m, int pairs) {
  std::vector<std::pair<int, int>> chosen;
  PartialOrder current(m);
  while (static_cast<int>(chosen.size()) < pairs) {
    int x = static_cast<int>(rng() % m), y = static_cast<int>(rng() % m);
    if (x == y || current.prefers(x, y) || current.prefers(y, x)) continue;
    chosen.emplace_back(x, y);
    current = PartialOrder::from_pairs(m, chosen);
  }
  return current;
}

Instance sample_instance(std::uint64_t seed, const ScoringRule& rule, int m,
                         int voters, int pairs) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) names.push_back("c" + std::to_string(c));
  std::vector<VoterGroup> groups;
  for (int v = 0; v < voters; ++v)
    groups.push_back({sample_order(rng, m, pairs), 1});
  std::vector<int> tie(m);
  for (int c = 0; c < m; ++c) tie[c] = c;
  return Instance::make(names, rule, groups, tie);
}

void LinearExtensions(benchmark::State& state) {
  std::mt19937_64 rng(7);
  auto order = sample_order(rng, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    std::int64_t n = 0;
    for_each_linear_extension(order, [&](const std::vector<int>&) {
      ++n;
      return false;
    });
    benchmark::DoNotOptimize(n);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(LinearExtensions)->DenseRange(4, 8)->Complexity();

void NtwExact(benchmark::State& state) {
  auto instance = sample_instance(11, ScoringRule::borda(),
                                  static_cast<int>(state.range(0)), 5, 3);
  for (auto _ : state) {
    auto result = ntw_fixed_k(instance, 0, 2, TiePolicy::given);
    benchmark::DoNotOptimize(result.answer);
  }
}
BENCHMARK(NtwExact)->DenseRange(4, 7);

void PtwFlow(benchmark::State& state) {
  auto instance = sample_instance(13, ScoringRule::plurality(),
                                  static_cast<int>(state.range(0)), 8, 3);
  for (auto _ : state) {
    auto result = ptw_fixed_k(instance, 0, 2, TiePolicy::given);
    benchmark::DoNotOptimize(result.answer);
  }
}
BENCHMARK(PtwFlow)->DenseRange(4, 8);

void OracleNtw(benchmark::State& state) {
  auto instance = sample_instance(17, ScoringRule::borda(), 5,
                                  static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    auto result = oracle_query(instance, {QueryKind::ntw, 0, {}, 2,
                                          TiePolicy::given},
                               50'000'000);
    benchmark::DoNotOptimize(result.answer);
  }
}
BENCHMARK(OracleNtw)->DenseRange(2, 4);

void X3cGenerate(benchmark::State& state) {
  SetCoverInstance x3c;
  x3c.q = 3;
  x3c.edges = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}};
  for (auto _ : state) {
    auto generated = gen_x3c_ntw(x3c, RuleKind::borda);
    benchmark::DoNotOptimize(generated.instance.num_voters());
  }
}
BENCHMARK(X3cGenerate);

}  // namespace

BENCHMARK_MAIN();
