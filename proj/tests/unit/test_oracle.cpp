#include <doctest.h>

#include "support/corpus.hpp"
#include "topkvote/oracle.hpp"
#include "topkvote/standings.hpp"

using namespace topkvote;

namespace {

Instance fixed_plus_empty() {
  // one complete voter (a,b,c) and one unconstrained voter, plurality
  return Instance::make({"a", "b", "c"}, ScoringRule::plurality(),
                        {{PartialOrder::partitioned(3, {{0}, {1}, {2}}), 1},
                         {PartialOrder(3), 1}},
                        {0, 1, 2});
}

}  // namespace

TEST_CASE("linear extension counts") {
  CHECK(linear_extensions(PartialOrder(3)).size() == 6);
  CHECK(linear_extensions(PartialOrder::partitioned(3, {{0}, {1}, {2}})).size() == 1);
  CHECK(linear_extensions(PartialOrder::from_pairs(3, {{0, 1}})).size() == 3);
  CHECK_FALSE(linear_extensions_bounded(PartialOrder(4), 23).has_value());
  CHECK(count_linear_extensions(PartialOrder(4), 1000) == 24);
}

TEST_CASE("extensions arrive deduplicated and in lexicographic order") {
  auto exts = linear_extensions(PartialOrder::from_pairs(3, {{1, 2}}));
  REQUIRE(exts.size() == 3);
  CHECK(std::is_sorted(exts.begin(), exts.end()));
  CHECK(std::adjacent_find(exts.begin(), exts.end()) == exts.end());
}

TEST_CASE("oracle on the two-voter plurality example") {
  auto instance = fixed_plus_empty();

  auto ntw_a = oracle_query(instance, {QueryKind::ntw, 0, {}, 1, TiePolicy::given});
  CHECK(ntw_a.answer);
  CHECK_FALSE(ntw_a.witness.has_value());

  auto ptw_c1 = oracle_query(instance, {QueryKind::ptw, 2, {}, 1, TiePolicy::given});
  CHECK_FALSE(ptw_c1.answer);

  auto ptw_c2 = oracle_query(instance, {QueryKind::ptw, 2, {}, 2, TiePolicy::given});
  CHECK(ptw_c2.answer);
  REQUIRE(ptw_c2.witness.has_value());
  CHECK(completion_valid(instance, *ptw_c2.witness));
  CHECK(is_top_k(instance, *ptw_c2.witness, 2, 2, TiePolicy::given));
}

TEST_CASE("complete profiles collapse to direct evaluation") {
  auto instance = Instance::make(
      {"a", "b", "c"}, ScoringRule::borda(),
      {{PartialOrder::partitioned(3, {{1}, {0}, {2}}), 2}}, {2, 1, 0});
  Completion only;
  only.groups = {{{{1, 0, 2}, 2}}};
  for (int c = 0; c < 3; ++c) {
    for (int k = 1; k <= 3; ++k) {
      for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
        const bool direct = is_top_k(instance, only, c, k, policy);
        CHECK(oracle_query(instance, {QueryKind::ntw, c, {}, k, policy}).answer ==
              direct);
        CHECK(oracle_query(instance, {QueryKind::ptw, c, {}, k, policy}).answer ==
              direct);
      }
    }
  }
}

TEST_CASE("oracle score sets") {
  auto one_empty = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                  {{PartialOrder(2), 1}}, {0, 1});
  CHECK(oracle_score_set(one_empty, {0, 1}) ==
        std::vector<std::vector<Score>>{{0, 1}, {1, 0}});

  auto complete = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                 {{PartialOrder::partitioned(2, {{1}, {0}}), 3}},
                                 {0, 1});
  CHECK(oracle_score_set(complete, {0, 1}) ==
        std::vector<std::vector<Score>>{{0, 3}});

  // two unconstrained voters, once as one group of two and once as two groups
  auto grouped = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                {{PartialOrder(2), 2}}, {0, 1});
  auto expanded = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                 {{PartialOrder(2), 1}, {PartialOrder(2), 1}},
                                 {0, 1});
  const std::vector<std::vector<Score>> expected{{0, 2}, {1, 1}, {2, 0}};
  CHECK(oracle_score_set(grouped, {0, 1}) == expected);
  CHECK(oracle_score_set(expanded, {0, 1}) == expected);
}

TEST_CASE("cap raises too_large") {
  auto instance = Instance::make(
      {"a", "b", "c", "d"}, ScoringRule::borda(),
      {{PartialOrder(4), 1}, {PartialOrder(4), 1}, {PartialOrder(4), 1}},
      {0, 1, 2, 3});
  try {
    oracle_query(instance, {QueryKind::ntw, 0, {}, 1, TiePolicy::given}, 100);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
  CHECK_FALSE(oracle_enumeration_bound(instance, 100).has_value());
  CHECK(oracle_enumeration_bound(instance, 100000).has_value());
}

TEST_CASE("necessary implies possible, monotone in k") {
  testsupport::Rng rng(555);
  for (int round = 0; round < 40; ++round) {
    auto instance = testsupport::random_instance(
        rng, round % 2 ? ScoringRule::plurality() : ScoringRule::t_approval(2),
        {.min_candidates = 3, .max_candidates = 4, .max_voters = 3});
    const int m = instance.num_candidates();
    const int c = rng.below(m);
    for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
      bool prev_ntw = false, prev_ptw = false;
      for (int k = 1; k <= m; ++k) {
        bool ntw = oracle_query(instance, {QueryKind::ntw, c, {}, k, policy}).answer;
        bool ptw = oracle_query(instance, {QueryKind::ptw, c, {}, k, policy}).answer;
        if (ntw) CHECK(ptw);
        if (prev_ntw) CHECK(ntw);
        if (prev_ptw) CHECK(ptw);
        prev_ntw = ntw;
        prev_ptw = ptw;
      }
      CHECK(oracle_query(instance, {QueryKind::ntw, c, {}, m, policy}).answer);
    }
  }
}

TEST_CASE("witnesses re-score to what they claim") {
  testsupport::Rng rng(808);
  for (int round = 0; round < 40; ++round) {
    auto instance = testsupport::random_instance(
        rng, ScoringRule::veto(),
        {.min_candidates = 3, .max_candidates = 4, .max_voters = 3,
         .max_mult = 2});
    const int m = instance.num_candidates();
    const int c = rng.below(m);
    const int k = 1 + rng.below(m);
    for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
      auto ptw = oracle_query(instance, {QueryKind::ptw, c, {}, k, policy});
      if (ptw.answer) {
        REQUIRE(ptw.witness.has_value());
        CHECK(completion_valid(instance, *ptw.witness));
        CHECK(is_top_k(instance, *ptw.witness, c, k, policy));
      }
      auto ntw = oracle_query(instance, {QueryKind::ntw, c, {}, k, policy});
      if (!ntw.answer) {
        REQUIRE(ntw.witness.has_value());
        CHECK(completion_valid(instance, *ntw.witness));
        CHECK_FALSE(is_top_k(instance, *ntw.witness, c, k, policy));
      }
    }
  }
}

TEST_CASE("rank bounds match per-query answers") {
  testsupport::Rng rng(2024);
  for (int round = 0; round < 30; ++round) {
    auto instance = testsupport::random_instance(
        rng, round % 2 ? ScoringRule::borda() : ScoringRule::veto(),
        {.min_candidates = 2, .max_candidates = 4, .max_voters = 3});
    const int m = instance.num_candidates();
    auto bounds = oracle_rank_bounds(instance);
    for (int c = 0; c < m; ++c) {
      for (int k = 1; k <= m; ++k) {
        CHECK((bounds.max_rank_given[c] <= k) ==
              oracle_query(instance, {QueryKind::ntw, c, {}, k, TiePolicy::given}).answer);
        CHECK((bounds.min_rank_given[c] <= k) ==
              oracle_query(instance, {QueryKind::ptw, c, {}, k, TiePolicy::given}).answer);
        CHECK((bounds.max_strict_above[c] < k) ==
              oracle_query(instance, {QueryKind::ntw, c, {}, k, TiePolicy::some}).answer);
        CHECK((bounds.min_strict_above[c] < k) ==
              oracle_query(instance, {QueryKind::ptw, c, {}, k, TiePolicy::some}).answer);
        CHECK((bounds.max_geq_others[c] < k) ==
              oracle_query(instance, {QueryKind::ntw, c, {}, k, TiePolicy::every}).answer);
        CHECK((bounds.min_geq_others[c] < k) ==
              oracle_query(instance, {QueryKind::ptw, c, {}, k, TiePolicy::every}).answer);
      }
    }
  }
}
