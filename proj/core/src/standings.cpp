#include "topkvote/standings.hpp"

#include <algorithm>
#include <limits>

namespace topkvote {

Standings standings(const Instance& instance, const Completion& completion) {
  const int m = instance.num_candidates();
  const auto& vec = instance.score_vector();

  if (completion.groups.size() != instance.voters().size())
    fail(Errc::invalid_completion, "completion group count mismatch");

  std::vector<Score> scores(m, 0);
  for (std::size_t g = 0; g < completion.groups.size(); ++g) {
    const auto& group = instance.voters()[g];
    Mult total = 0;
    for (const auto& block : completion.groups[g]) {
      if (block.mult < 1)
        fail(Errc::invalid_completion, "non-positive block multiplicity");
      if (!order_extends(group.order, block.order))
        fail(Errc::invalid_completion,
             "vote does not extend the voter's partial order");
      for (int pos = 0; pos < m; ++pos)
        scores[block.order[pos]] += block.mult * vec[pos];
      total += block.mult;
    }
    if (total != group.mult)
      fail(Errc::invalid_completion, "block multiplicities do not add up");
  }

  Standings out;
  out.scores = std::move(scores);
  out.ranking.resize(m);
  for (int c = 0; c < m; ++c) out.ranking[c] = c;
  std::sort(out.ranking.begin(), out.ranking.end(), [&](int a, int b) {
    if (out.scores[a] != out.scores[b]) return out.scores[a] > out.scores[b];
    return instance.tie_rank(a) < instance.tie_rank(b);
  });
  out.rank.resize(m);
  for (int i = 0; i < m; ++i) out.rank[out.ranking[i]] = i + 1;
  return out;
}

bool is_top_k(const Instance& instance, const Completion& completion, int c,
              int k, TiePolicy policy) {
  if (c < 0 || c >= instance.num_candidates())
    fail(Errc::unknown_candidate, "candidate id out of range");
  Standings s = standings(instance, completion);
  std::vector<int> tie_rank(instance.num_candidates());
  for (int d = 0; d < instance.num_candidates(); ++d)
    tie_rank[d] = instance.tie_rank(d);
  return is_top_k_scores(s.scores, tie_rank, c, k, policy);
}

int rank_given(const std::vector<Score>& scores,
               const std::vector<int>& tie_rank, int c) {
  int above = 0;
  for (std::size_t d = 0; d < scores.size(); ++d) {
    if (static_cast<int>(d) == c) continue;
    if (scores[d] > scores[c] ||
        (scores[d] == scores[c] && tie_rank[d] < tie_rank[c]))
      ++above;
  }
  return above + 1;
}

int count_strictly_above(const std::vector<Score>& scores, int c) {
  int n = 0;
  for (std::size_t d = 0; d < scores.size(); ++d)
    if (scores[d] > scores[c]) ++n;
  return n;
}

int count_geq_others(const std::vector<Score>& scores, int c) {
  int n = 0;
  for (std::size_t d = 0; d < scores.size(); ++d)
    if (static_cast<int>(d) != c && scores[d] >= scores[c]) ++n;
  return n;
}

bool is_top_k_scores(const std::vector<Score>& scores,
                     const std::vector<int>& tie_rank, int c, int k,
                     TiePolicy policy) {
  switch (policy) {
    case TiePolicy::given:
      return rank_given(scores, tie_rank, c) <= k;
    case TiePolicy::some:
      return count_strictly_above(scores, c) < k;
    case TiePolicy::every:
      return count_geq_others(scores, c) < k;
  }
  return false;
}

bool is_topk_set_scores(const std::vector<Score>& scores,
                        const std::vector<int>& tie_rank,
                        const std::vector<char>& members, TiePolicy policy) {
  const int m = static_cast<int>(scores.size());
  Score min_member = std::numeric_limits<Score>::max();
  Score max_outsider = std::numeric_limits<Score>::min();
  bool has_outsider = false;
  for (int c = 0; c < m; ++c) {
    if (members[c]) {
      min_member = std::min(min_member, scores[c]);
    } else {
      max_outsider = std::max(max_outsider, scores[c]);
      has_outsider = true;
    }
  }
  if (!has_outsider) return true;

  switch (policy) {
    case TiePolicy::some:
      return min_member >= max_outsider;
    case TiePolicy::every:
      return min_member > max_outsider;
    case TiePolicy::given: {
      if (min_member < max_outsider) return false;
      if (min_member > max_outsider) return true;
      // Boundary score: every member at it must win the tie against every
      // outsider at it.
      int worst_member_tie = -1, best_outsider_tie = m;
      for (int c = 0; c < m; ++c) {
        if (scores[c] != min_member) continue;
        if (members[c])
          worst_member_tie = std::max(worst_member_tie, tie_rank[c]);
        else
          best_outsider_tie = std::min(best_outsider_tie, tie_rank[c]);
      }
      return worst_member_tie < best_outsider_tie;
    }
  }
  return false;
}

}  // namespace topkvote
