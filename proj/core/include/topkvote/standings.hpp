#pragma once

#include <vector>

#include "topkvote/instance.hpp"

namespace topkvote {

struct Standings {
  std::vector<Score> scores;  // by candidate id
  std::vector<int> ranking;   // candidate ids, best first (score, then tie)
  std::vector<int> rank;      // 1-based position of each candidate in ranking
};

// Scores a valid completion. Throws invalid_completion when a vote block
// does not extend its group's partial order.
Standings standings(const Instance& instance, const Completion& completion);

bool is_top_k(const Instance& instance, const Completion& completion, int c,
              int k, TiePolicy policy);

// ---- score-vector level helpers ------------------------------------------
// These operate on a full per-candidate score vector plus the instance's
// tie ranks; the completion-level functions above and the completion
// enumeration both reduce to them.

int rank_given(const std::vector<Score>& scores,
               const std::vector<int>& tie_rank, int c);
int count_strictly_above(const std::vector<Score>& scores, int c);
int count_geq_others(const std::vector<Score>& scores, int c);

bool is_top_k_scores(const std::vector<Score>& scores,
                     const std::vector<int>& tie_rank, int c, int k,
                     TiePolicy policy);

// Whether `members` (given as a mask over candidate ids, exactly k set) is
// the top-k set under the policy's quantification over tie orders.
bool is_topk_set_scores(const std::vector<Score>& scores,
                        const std::vector<int>& tie_rank,
                        const std::vector<char>& members, TiePolicy policy);

}  // namespace topkvote
