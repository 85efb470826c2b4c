#include <doctest.h>

#include "support/corpus.hpp"
#include "topkvote/feasibility.hpp"
#include "topkvote/oracle.hpp"

using namespace topkvote;

namespace {

// Exhaustive reference: is there an extension placing every candidate
// inside its window?
std::optional<std::vector<int>> brute_window_search(
    const PartialOrder& p, const std::vector<WindowConstraint>& constraints) {
  std::optional<std::vector<int>> found;
  for_each_linear_extension(p, [&](const std::vector<int>& order) {
    for (const auto& c : constraints) {
      int pos = 0;
      while (order[pos] != c.candidate) ++pos;
      if (pos + 1 < c.window.release || pos + 1 > c.window.deadline)
        return false;
    }
    found = order;
    return true;
  });
  return found;
}

bool satisfies(const std::vector<int>& order,
               const std::vector<WindowConstraint>& constraints) {
  for (const auto& c : constraints) {
    int pos = 0;
    while (order[pos] != c.candidate) ++pos;
    if (pos + 1 < c.window.release || pos + 1 > c.window.deadline) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("score intervals") {
  CHECK(score_interval(ScoringRule::borda(), 4, 2) == PositionWindow{2, 2});
  CHECK(score_interval(ScoringRule::plurality(), 3, 0) == PositionWindow{2, 3});
  CHECK_FALSE(score_interval(ScoringRule::plurality(), 3, 2).has_value());
}

TEST_CASE("window feasibility basics") {
  auto p = PartialOrder::from_pairs(3, {{0, 1}});
  CHECK_FALSE(feasible_extension(p, {{1, {1, 1}}}).has_value());

  auto order = feasible_extension(p, {{0, {1, 2}}, {1, {3, 3}}});
  REQUIRE(order.has_value());
  CHECK(order_extends(p, *order));
  CHECK((*order)[2] == 1);

  CHECK(feasible_extension(p, {}).has_value());
  CHECK_THROWS_AS(feasible_extension(p, {{0, {1, 1}}, {0, {2, 2}}}), Error);
}

TEST_CASE("voter score feasibility") {
  auto p = PartialOrder::from_pairs(3, {{0, 1}});
  CHECK_FALSE(
      voter_score_feasible(ScoringRule::plurality(), p, {1}, {1}).has_value());
  auto order = voter_score_feasible(ScoringRule::plurality(), p, {0}, {1});
  REQUIRE(order.has_value());
  CHECK((*order)[0] == 0);

  // brute-forced expectation: with no constraints, Borda targets (2,1) for
  // (a,b) admit exactly the order (a,b,c)
  auto empty = PartialOrder(3);
  std::vector<std::vector<int>> matching;
  auto vec = ScoringRule::borda().score_vector(3);
  for_each_linear_extension(empty, [&](const std::vector<int>& order) {
    std::vector<int> pos(3);
    for (int i = 0; i < 3; ++i) pos[order[i]] = i;
    if (vec[pos[0]] == 2 && vec[pos[1]] == 1) matching.push_back(order);
    return false;
  });
  REQUIRE(matching.size() == 1);
  auto got = voter_score_feasible(ScoringRule::borda(), empty, {0, 1}, {2, 1});
  REQUIRE(got.has_value());
  CHECK(*got == matching.front());
}

TEST_CASE("max score advantage") {
  auto empty = PartialOrder(3);
  CHECK(max_score_advantage(ScoringRule::borda(), empty, 0, 1).first == 2);

  auto chained = PartialOrder::from_pairs(3, {{1, 0}});  // d above c
  auto [margin, order] = max_score_advantage(ScoringRule::borda(), chained, 0, 1);
  // brute force over the 3 extensions with d before c
  Score best = -100;
  auto vec = ScoringRule::borda().score_vector(3);
  for_each_linear_extension(chained, [&](const std::vector<int>& ext) {
    std::vector<int> pos(3);
    for (int i = 0; i < 3; ++i) pos[ext[i]] = i;
    best = std::max(best, vec[pos[0]] - vec[pos[1]]);
    return false;
  });
  CHECK(best == -1);
  CHECK(margin == best);
  CHECK(order_extends(chained, order));

  auto fixed = PartialOrder::partitioned(3, {{0}, {1}, {2}});
  CHECK(max_score_advantage(ScoringRule::plurality(), fixed, 0, 1).first == 1);
}

TEST_CASE("feasibility agrees with exhaustive search up to m = 7") {
  testsupport::Rng rng(1234);
  for (int round = 0; round < 300; ++round) {
    const int m = 2 + rng.below(6);
    auto p = testsupport::random_partial_order(rng, m, 6);

    std::vector<WindowConstraint> constraints;
    const int constrained = rng.below(std::min(m, 3) + 1);
    std::vector<int> picked = testsupport::random_permutation(rng, m);
    for (int i = 0; i < constrained; ++i) {
      int lo = 1 + rng.below(m);
      int hi = lo + rng.below(m - lo + 1);
      constraints.push_back({picked[i], {lo, hi}});
    }

    auto fast = feasible_extension(p, constraints);
    auto brute = brute_window_search(p, constraints);
    REQUIRE(fast.has_value() == brute.has_value());
    if (fast) {
      CHECK(order_extends(p, *fast));
      CHECK(satisfies(*fast, constraints));
    }
  }
}

TEST_CASE("advantage equals enumerated maximum") {
  testsupport::Rng rng(99);
  for (int round = 0; round < 120; ++round) {
    const int m = 2 + rng.below(5);
    auto p = testsupport::random_partial_order(rng, m, 5);
    const auto rule = round % 2 ? ScoringRule::borda()
                                : (m > 2 ? ScoringRule::t_approval(2)
                                         : ScoringRule::plurality());
    auto vec = rule.score_vector(m);
    int c = rng.below(m), d = rng.below(m);
    if (c == d) continue;

    Score best = std::numeric_limits<Score>::min();
    for_each_linear_extension(p, [&](const std::vector<int>& ext) {
      std::vector<int> pos(m);
      for (int i = 0; i < m; ++i) pos[ext[i]] = i;
      best = std::max(best, vec[pos[c]] - vec[pos[d]]);
      return false;
    });
    auto [margin, order] = max_score_advantage(vec, p, c, d);
    CHECK(margin == best);
    CHECK(order_extends(p, order));
  }
}
