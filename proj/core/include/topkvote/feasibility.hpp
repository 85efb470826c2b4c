#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topkvote/partial_order.hpp"
#include "topkvote/rule.hpp"

namespace topkvote {

// An inclusive range of 1-based positions a candidate may occupy.
struct PositionWindow {
  int release = 1;
  int deadline = 1;

  bool operator==(const PositionWindow&) const = default;
};

struct WindowConstraint {
  int candidate = 0;
  PositionWindow window;
};

// The contiguous range of positions j with score_vector[j] == s, or nullopt
// when s never occurs. The vector is non-increasing, so equal scores are
// adjacent.
std::optional<PositionWindow> score_interval(const std::vector<Score>& vec,
                                             Score s);
std::optional<PositionWindow> score_interval(const ScoringRule& rule, int m,
                                             Score s);

// A linear extension of P placing each constrained candidate inside its
// window, or nullopt when none exists. Window bounds are propagated through
// the precedence closure, then positions are filled greedily by earliest
// deadline (ties by lowest id). Throws conflicting_constraints when a
// candidate appears in two constraints.
std::optional<std::vector<int>> feasible_extension(
    const PartialOrder& p, const std::vector<WindowConstraint>& constraints);

// An extension where candidate S[i] earns exactly targets[i] under the
// rule, i.e. a membership test (with witness) for one voter's score set.
std::optional<std::vector<int>> voter_score_feasible(
    const ScoringRule& rule, const PartialOrder& p, const std::vector<int>& S,
    const std::vector<Score>& targets);
std::optional<std::vector<int>> voter_score_feasible(
    const std::vector<Score>& vec, const PartialOrder& p,
    const std::vector<int>& S, const std::vector<Score>& targets);

// Maximum of score(c) - score(d) over all extensions of P, with an
// extension achieving it.
std::pair<Score, std::vector<int>> max_score_advantage(const ScoringRule& rule,
                                                       const PartialOrder& p,
                                                       int c, int d);
std::pair<Score, std::vector<int>> max_score_advantage(
    const std::vector<Score>& vec, const PartialOrder& p, int c, int d);

}  // namespace topkvote
