#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topkvote/instance.hpp"

namespace topkvote {

enum class Extreme { top, bottom };

// Candidates placeable first (top) or last (bottom) in some extension:
// exactly the maximal resp. minimal elements.
std::vector<int> eligible_positions(const PartialOrder& p, Extreme which);

// Polygamous matching: every unit of every left group must use one of its
// incident edges, and candidate w must receive between bounds[w].first and
// bounds[w].second units in total.
struct AssignmentProblem {
  std::vector<Mult> supply;                    // per group
  std::vector<std::vector<int>> edges;         // per group, candidate ids
  std::vector<std::pair<Mult, Mult>> bounds;   // per candidate [alpha, beta]
};

// assignment[g] lists (candidate, units) with positive units.
using Assignment = std::vector<std::vector<std::pair<int, Mult>>>;

// Solved as a feasible flow with lower bounds (super-source/super-sink
// transformation over a max-flow core); integral by construction.
std::optional<Assignment> degree_constrained_assignment(
    const AssignmentProblem& problem);

// A completion with lo[c] <= score(c) <= hi[c] for every candidate, or
// nullopt. Plurality assigns top positions, veto bottom positions. Throws
// unsupported_rule for any other rule.
std::optional<Completion> bounded_score_completion(const Instance& instance,
                                                   const std::vector<Score>& lo,
                                                   const std::vector<Score>& hi);

struct FlowResult {
  bool answer = false;
  std::optional<Completion> witness;  // present iff answer is true
};

// Possible top-k winner for plurality/veto: search complement sets D of
// size m-k and score levels s for a completion where c reaches s and every
// d in D stays at or below it (tie-adjusted).
FlowResult ptw_fixed_k(const Instance& instance, int c, int k, TiePolicy policy);

bool possible_winner_plu_veto(const Instance& instance, int c);

// Possible top-k set: pivot on the lowest-scoring member.
FlowResult possible_topk_set(const Instance& instance,
                             const std::vector<int>& set, TiePolicy policy);

enum class CommitteeMode { necessary, possible };

// Condorcet committees for plurality/veto via the `some`-tie-order top-k
// set characterization.
bool condorcet_committee(const Instance& instance, const std::vector<int>& set,
                         CommitteeMode mode);

}  // namespace topkvote
