#include <doctest.h>

#include "support/corpus.hpp"
#include "topkvote/oracle.hpp"
#include "topkvote/scorespace.hpp"
#include "topkvote/standings.hpp"

using namespace topkvote;

TEST_CASE("profile score sets on tiny profiles") {
  auto two_empty = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                  {{PartialOrder(2), 2}}, {0, 1});
  CHECK(profile_score_set(two_empty, {0, 1}).vectors ==
        std::vector<std::vector<Score>>{{0, 2}, {1, 1}, {2, 0}});

  auto complete = Instance::make(
      {"a", "b", "c"}, ScoringRule::borda(),
      {{PartialOrder::partitioned(3, {{2}, {0}, {1}}), 2}}, {0, 1, 2});
  CHECK(profile_score_set(complete, {0, 1, 2}).vectors ==
        std::vector<std::vector<Score>>{{2, 0, 4}});
}

TEST_CASE("profile score set equals the enumeration oracle") {
  testsupport::Rng rng(31337);
  for (int round = 0; round < 120; ++round) {
    const auto rule = round % 3 == 0   ? ScoringRule::plurality()
                      : round % 3 == 1 ? ScoringRule::borda()
                                       : ScoringRule::veto();
    auto instance = testsupport::random_instance(
        rng, rule,
        {.min_candidates = 2, .max_candidates = 5, .max_voters = 4,
         .max_mult = 2, .max_total_mult = 5});
    const int m = instance.num_candidates();
    const int q = 1 + rng.below(std::min(3, m));
    auto tracked_perm = testsupport::random_permutation(rng, m);
    std::vector<int> tracked(tracked_perm.begin(), tracked_perm.begin() + q);

    CHECK(profile_score_set(instance, tracked).vectors ==
          oracle_score_set(instance, tracked, 50'000'000));
  }
}

TEST_CASE("ntw counterexamples replay into valid completions") {
  testsupport::Rng rng(808080);
  int checked = 0;
  for (int round = 0; round < 80; ++round) {
    const auto rule = round % 2 ? ScoringRule::borda() : ScoringRule::t_approval(2);
    auto instance = testsupport::random_instance(
        rng, rule,
        {.min_candidates = 3, .max_candidates = 5, .max_voters = 3,
         .max_mult = 2});
    const int m = instance.num_candidates();
    const int c = rng.below(m);
    const int k = 1 + rng.below(m - 1);
    for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
      auto result = ntw_fixed_k(instance, c, k, policy);
      if (!result.answer) {
        ++checked;
        REQUIRE(result.counterexample.has_value());
        CHECK(completion_valid(instance, *result.counterexample));
        CHECK_FALSE(is_top_k(instance, *result.counterexample, c, k, policy));
      }
    }
  }
  CHECK(checked > 20);  // the corpus must actually exercise the false branch
}

TEST_CASE("ntw is monotone in k and true at k = m") {
  testsupport::Rng rng(4242);
  for (int round = 0; round < 30; ++round) {
    auto instance = testsupport::random_instance(
        rng, ScoringRule::veto(),
        {.min_candidates = 2, .max_candidates = 4, .max_voters = 3});
    const int m = instance.num_candidates();
    const int c = rng.below(m);
    for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
      bool prev = false;
      for (int k = 1; k <= m; ++k) {
        bool now = ntw_fixed_k(instance, c, k, policy).answer;
        if (prev) CHECK(now);
        prev = now;
      }
      CHECK(prev);
    }
  }
}

TEST_CASE("can_defeat on the worked example") {
  auto one_voter = Instance::make(
      {"a", "b", "c"}, ScoringRule::plurality(),
      {{PartialOrder::partitioned(3, {{0}, {1}, {2}}), 1}}, {0, 1, 2});
  CHECK_FALSE(can_defeat(one_voter, 1, 0, DefeatMode::weak));

  auto with_empty = Instance::make(
      {"a", "b", "c"}, ScoringRule::plurality(),
      {{PartialOrder::partitioned(3, {{0}, {1}, {2}}), 1}, {PartialOrder(3), 1}},
      {0, 1, 2});
  CHECK_FALSE(can_defeat(with_empty, 1, 0, DefeatMode::weak));

  auto tie_flipped = Instance::make(
      {"a", "b", "c"}, ScoringRule::plurality(),
      {{PartialOrder::partitioned(3, {{0}, {1}, {2}}), 1}, {PartialOrder(3), 1}},
      {1, 0, 2});
  CHECK(can_defeat(tie_flipped, 1, 0, DefeatMode::weak));
  CHECK_FALSE(can_defeat(tie_flipped, 1, 0, DefeatMode::strict));
}

TEST_CASE("necessary winner") {
  auto instance = Instance::make(
      {"a", "b", "c"}, ScoringRule::plurality(),
      {{PartialOrder::partitioned(3, {{0}, {1}, {2}}), 1}, {PartialOrder(3), 1}},
      {0, 1, 2});
  CHECK(necessary_winner(instance, 0));
  CHECK_FALSE(necessary_winner(instance, 1));

  auto symmetric = Instance::make({"a", "b"}, ScoringRule::plurality(),
                                  {{PartialOrder(2), 1}}, {0, 1});
  CHECK_FALSE(necessary_winner(symmetric, 1));
  // equals ntw at k = 1 under the given policy
  testsupport::Rng rng(17);
  for (int round = 0; round < 30; ++round) {
    auto random = testsupport::random_instance(
        rng, ScoringRule::borda(),
        {.min_candidates = 2, .max_candidates = 4, .max_voters = 3});
    for (int c = 0; c < random.num_candidates(); ++c)
      CHECK(necessary_winner(random, c) ==
            ntw_fixed_k(random, c, 1, TiePolicy::given).answer);
  }
}

TEST_CASE("necessary top-k sets against the oracle") {
  testsupport::Rng rng(60601);
  for (int round = 0; round < 60; ++round) {
    const auto rule = round % 2 ? ScoringRule::plurality() : ScoringRule::borda();
    auto instance = testsupport::random_instance(
        rng, rule,
        {.min_candidates = 2, .max_candidates = 4, .max_voters = 3});
    const int m = instance.num_candidates();
    const int k = 1 + rng.below(m);
    auto perm = testsupport::random_permutation(rng, m);
    std::vector<int> set(perm.begin(), perm.begin() + k);
    for (auto policy : {TiePolicy::given, TiePolicy::some, TiePolicy::every}) {
      CHECK(necessary_topk_set(instance, set, policy) ==
            oracle_query(instance, {QueryKind::nts, -1, set, k, policy}).answer);
    }
  }
}

TEST_CASE("space bound raises space_too_large") {
  auto instance = Instance::make(
      {"a", "b", "c", "d", "e"}, ScoringRule::borda(),
      {{PartialOrder(5), 1}, {PartialOrder(5), 1}, {PartialOrder(5), 1}},
      {0, 1, 2, 3, 4});
  ScoreSpaceLimits tiny;
  tiny.max_vectors = 4;
  try {
    profile_score_set(instance, {0, 1, 2}, tiny);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::space_too_large);
  }
}
