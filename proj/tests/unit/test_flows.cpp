#include <doctest.h>

#include "support/corpus.hpp"
#include "topkvote/flows.hpp"
#include "topkvote/oracle.hpp"
#include "topkvote/standings.hpp"

using namespace topkvote;

namespace {

// Reference check for the assignment problem: exhaustive distribution of
// each group's supply over its edges.
bool brute_assignable(const AssignmentProblem& problem) {
  const int groups = static_cast<int>(problem.supply.size());
  const int cands = static_cast<int>(problem.bounds.size());
  std::vector<Mult> load(cands, 0);

  auto rec = [&](auto&& self, int g) -> bool {
    if (g == groups) {
      for (int c = 0; c < cands; ++c)
        if (load[c] < problem.bounds[c].first ||
            load[c] > problem.bounds[c].second)
          return false;
      return true;
    }
    const auto& edges = problem.edges[g];
    std::vector<Mult> split(edges.size(), 0);
    auto distribute = [&](auto&& dself, std::size_t e, Mult left) -> bool {
      if (e + 1 == edges.size()) {
        load[edges[e]] += left;
        bool ok = self(self, g + 1);
        load[edges[e]] -= left;
        return ok;
      }
      for (Mult take = 0; take <= left; ++take) {
        load[edges[e]] += take;
        if (dself(dself, e + 1, left - take)) {
          load[edges[e]] -= take;
          return true;
        }
        load[edges[e]] -= take;
      }
      return false;
    };
    return distribute(distribute, 0, problem.supply[g]);
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("eligible positions") {
  auto p = PartialOrder::from_pairs(3, {{0, 1}});
  CHECK(eligible_positions(p, Extreme::top) == std::vector<int>{0, 2});
  CHECK(eligible_positions(p, Extreme::bottom) == std::vector<int>{1, 2});
  CHECK(eligible_positions(PartialOrder(3), Extreme::top) ==
        std::vector<int>{0, 1, 2});
  auto chain = PartialOrder::partitioned(3, {{1}, {2}, {0}});
  CHECK(eligible_positions(chain, Extreme::top) == std::vector<int>{1});
  CHECK(eligible_positions(chain, Extreme::bottom) == std::vector<int>{0});
}

TEST_CASE("assignment basics") {
  AssignmentProblem both_to_one;
  both_to_one.supply = {2};
  both_to_one.edges = {{0}};
  both_to_one.bounds = {{2, 2}};
  auto solved = degree_constrained_assignment(both_to_one);
  REQUIRE(solved.has_value());
  CHECK((*solved)[0] == std::vector<std::pair<int, Mult>>{{0, 2}});

  both_to_one.bounds = {{3, 3}};
  CHECK_FALSE(degree_constrained_assignment(both_to_one).has_value());

  AssignmentProblem split;
  split.supply = {1, 1};
  split.edges = {{0, 1}, {0, 1}};
  split.bounds = {{1, 1}, {1, 1}};
  auto matched = degree_constrained_assignment(split);
  REQUIRE(matched.has_value());
  Mult first = 0, second = 0;
  for (int g = 0; g < 2; ++g)
    for (auto [c, units] : (*matched)[g]) (c == 0 ? first : second) += units;
  CHECK(first == 1);
  CHECK(second == 1);

  AssignmentProblem malformed;
  malformed.supply = {1};
  malformed.edges = {{}};
  malformed.bounds = {{0, 1}};
  CHECK_THROWS_AS(degree_constrained_assignment(malformed), Error);
}

TEST_CASE("assignment agrees with exhaustive distribution") {
  testsupport::Rng rng(13579);
  for (int round = 0; round < 200; ++round) {
    AssignmentProblem problem;
    const int groups = 1 + rng.below(4);
    const int cands = 1 + rng.below(4);
    for (int g = 0; g < groups; ++g) {
      problem.supply.push_back(1 + rng.below(2));
      std::vector<int> edges;
      for (int c = 0; c < cands; ++c)
        if (rng.below(2)) edges.push_back(c);
      if (edges.empty()) edges.push_back(rng.below(cands));
      problem.edges.push_back(edges);
    }
    for (int c = 0; c < cands; ++c) {
      Mult alpha = rng.below(3);
      Mult beta = alpha + rng.below(3);
      problem.bounds.push_back({alpha, beta});
    }
    auto solved = degree_constrained_assignment(problem);
    CHECK(solved.has_value() == brute_assignable(problem));
    if (solved) {
      // every unit placed on an incident edge, all candidate bounds met
      std::vector<Mult> load(cands, 0);
      for (int g = 0; g < groups; ++g) {
        Mult placed = 0;
        for (auto [c, units] : (*solved)[g]) {
          CHECK(std::find(problem.edges[g].begin(), problem.edges[g].end(), c) !=
                problem.edges[g].end());
          load[c] += units;
          placed += units;
        }
        CHECK(placed == problem.supply[g]);
      }
      for (int c = 0; c < cands; ++c) {
        CHECK(load[c] >= problem.bounds[c].first);
        CHECK(load[c] <= problem.bounds[c].second);
      }
    }
  }
}

TEST_CASE("bounded score completions") {
  auto two_empty = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                  {{PartialOrder(2), 2}}, {0, 1});
  auto both_a = bounded_score_completion(two_empty, {2, 0}, {2, 0});
  REQUIRE(both_a.has_value());
  CHECK(standings(two_empty, *both_a).scores == std::vector<Score>{2, 0});

  CHECK_FALSE(bounded_score_completion(two_empty, {2, 1}, {2, 2}).has_value());

  auto veto_voter = Instance::make({"a", "b"}, ScoringRule::veto(),
                                   {{PartialOrder::from_pairs(2, {{0, 1}}), 1}},
                                   {0, 1});
  auto veto_completion = bounded_score_completion(veto_voter, {1, 0}, {1, 0});
  REQUIRE(veto_completion.has_value());
  CHECK(veto_completion->groups[0][0].order == std::vector<int>{0, 1});

  auto borda = two_empty.with_rule(ScoringRule::borda());
  CHECK_THROWS_AS(bounded_score_completion(borda, {0, 0}, {2, 2}), Error);
}

TEST_CASE("possible winner and fixed-k possible top-k") {
  auto one_empty = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                  {{PartialOrder(2), 1}}, {1, 0});
  auto result = ptw_fixed_k(one_empty, 0, 1, TiePolicy::given);
  CHECK(result.answer);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->groups[0][0].order == std::vector<int>{0, 1});
  CHECK(possible_winner_plu_veto(one_empty, 0));

  auto chain = Instance::make(
      {"a", "b", "c"}, ScoringRule::plurality(),
      {{PartialOrder::partitioned(3, {{0}, {1}, {2}}), 1}}, {0, 1, 2});
  CHECK_FALSE(possible_winner_plu_veto(chain, 2));
  CHECK(ptw_fixed_k(chain, 2, 3, TiePolicy::given).answer);  // k = m
}

TEST_CASE("flow answers match the oracle across policies and both rules") {
  testsupport::Rng rng(11818);
  for (int round = 0; round < 80; ++round) {
    const auto rule = round % 2 ? ScoringRule::plurality() : ScoringRule::veto();
    auto instance = testsupport::random_instance(
        rng, rule,
        {.min_candidates = 2, .max_candidates = 4, .max_voters = 3,
         .max_mult = 2});
    const int m = instance.num_candidates();
    const int c = rng.below(m);
    const int k = 1 + rng.below(m);
    for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
      auto flow = ptw_fixed_k(instance, c, k, policy);
      auto oracle = oracle_query(instance, {QueryKind::ptw, c, {}, k, policy});
      CHECK(flow.answer == oracle.answer);
      if (flow.answer) {
        REQUIRE(flow.witness.has_value());
        CHECK(completion_valid(instance, *flow.witness));
        CHECK(is_top_k(instance, *flow.witness, c, k, policy));
      }
    }
  }
}

TEST_CASE("possible top-k sets match the oracle") {
  testsupport::Rng rng(90210);
  for (int round = 0; round < 80; ++round) {
    const auto rule = round % 2 ? ScoringRule::plurality() : ScoringRule::veto();
    auto instance = testsupport::random_instance(
        rng, rule,
        {.min_candidates = 2, .max_candidates = 4, .max_voters = 3,
         .max_mult = 2});
    const int m = instance.num_candidates();
    const int k = 1 + rng.below(m);
    auto perm = testsupport::random_permutation(rng, m);
    std::vector<int> set(perm.begin(), perm.begin() + k);
    std::sort(set.begin(), set.end());
    for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
      auto flow = possible_topk_set(instance, set, policy);
      auto oracle = oracle_query(instance, {QueryKind::pts, -1, set, k, policy});
      CHECK(flow.answer == oracle.answer);
      if (flow.answer) {
        REQUIRE(flow.witness.has_value());
        CHECK(completion_valid(instance, *flow.witness));
        std::vector<char> members(m, 0);
        for (int d : set) members[d] = 1;
        auto s = standings(instance, *flow.witness);
        std::vector<int> tie_rank(m);
        for (int d = 0; d < m; ++d) tie_rank[d] = instance.tie_rank(d);
        CHECK(is_topk_set_scores(s.scores, tie_rank, members, policy));
      }
    }
  }
}

TEST_CASE("condorcet committees") {
  auto two_empty = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                  {{PartialOrder(2), 2}}, {0, 1});
  CHECK(condorcet_committee(two_empty, {0}, CommitteeMode::possible));
  CHECK(condorcet_committee(two_empty, {1}, CommitteeMode::possible));
  CHECK_FALSE(condorcet_committee(two_empty, {0}, CommitteeMode::necessary));

  // a complete profile where the top set can never be strictly beaten
  auto complete = Instance::make(
      {"a", "b", "c"}, ScoringRule::plurality(),
      {{PartialOrder::partitioned(3, {{0}, {1}, {2}}), 2}}, {0, 1, 2});
  CHECK(condorcet_committee(complete, {0}, CommitteeMode::necessary));

  testsupport::Rng rng(5150);
  for (int round = 0; round < 60; ++round) {
    const auto rule = round % 2 ? ScoringRule::plurality() : ScoringRule::veto();
    auto instance = testsupport::random_instance(
        rng, rule,
        {.min_candidates = 2, .max_candidates = 4, .max_voters = 3});
    const int m = instance.num_candidates();
    const int k = 1 + rng.below(m);
    auto perm = testsupport::random_permutation(rng, m);
    std::vector<int> set(perm.begin(), perm.begin() + k);
    CHECK(condorcet_committee(instance, set, CommitteeMode::possible) ==
          oracle_query(instance, {QueryKind::condorcet_pos, -1, set, k,
                                  TiePolicy::given}).answer);
    CHECK(condorcet_committee(instance, set, CommitteeMode::necessary) ==
          oracle_query(instance, {QueryKind::condorcet_nec, -1, set, k,
                                  TiePolicy::given}).answer);
  }
}
