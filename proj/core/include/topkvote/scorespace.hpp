#pragma once

#include <optional>
#include <vector>

#include "topkvote/instance.hpp"

namespace topkvote {

struct ScoreSpaceLimits {
  // Bound on the number of distinct vectors any intermediate set may hold,
  // and on the pair products formed while summing two sets. Exceeding
  // either raises space_too_large.
  std::int64_t max_vectors = 2'000'000;
  std::int64_t max_pair_products = 64'000'000;
};

// ps(P, S): all score vectors the tracked candidates can obtain jointly in
// a completion. Vectors are sorted lexicographically.
struct ScoreSpace {
  std::vector<int> tracked;
  std::vector<std::vector<Score>> vectors;
};

// Built per voter group from the feasibility tests over the rule's distinct
// score values, then combined across groups by sumsets (multiplicities via
// repeated squaring).
ScoreSpace profile_score_set(const Instance& instance,
                             const std::vector<int>& S,
                             const ScoreSpaceLimits& limits = {});

struct NtwResult {
  bool answer = false;
  std::optional<Completion> counterexample;  // present iff answer is false
};

// Necessary top-k winner for fixed k. Searches every k-subset of potential
// rivals for a joint score vector in which all of them defeat c.
NtwResult ntw_fixed_k(const Instance& instance, int c, int k, TiePolicy policy,
                      const ScoreSpaceLimits& limits = {});

// Maximum of score(c) - score(d) over all completions (per-voter maxima
// summed), and a completion achieving it.
Score max_defeat_margin(const Instance& instance, int c, int d);
Completion max_defeat_margin_witness(const Instance& instance, int c, int d);

enum class DefeatMode { strict, weak };

// Can c end up strictly above d in score (strict), or ranked above d under
// the instance tie order (weak), in at least one completion?
bool can_defeat(const Instance& instance, int c, int d, DefeatMode mode);

// True iff no rival can be ranked above c in any completion; equals
// ntw_fixed_k(c, 1, given).
bool necessary_winner(const Instance& instance, int c);

// True iff the given set is the exact top-|set| set in every completion
// under the policy.
bool necessary_topk_set(const Instance& instance, const std::vector<int>& set,
                        TiePolicy policy);

// The violating (outsider, member) pair behind a failed necessary_topk_set
// check, if any; used for counterexample reporting.
std::optional<std::pair<int, int>> topk_set_violation(
    const Instance& instance, const std::vector<int>& set, TiePolicy policy);

}  // namespace topkvote
