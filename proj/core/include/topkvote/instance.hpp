#pragma once

#include <string>
#include <vector>

#include "topkvote/partial_order.hpp"
#include "topkvote/rule.hpp"
#include "topkvote/types.hpp"

namespace topkvote {

struct VoterGroup {
  PartialOrder order;
  Mult mult = 1;

  bool operator==(const VoterGroup&) const = default;
};

// A partial voting profile: named candidates, a scoring rule, voter groups
// (a partial order with a multiplicity), and the tie-breaking order.
class Instance {
 public:
  static Instance make(std::vector<std::string> candidate_names,
                       ScoringRule rule, std::vector<VoterGroup> voters,
                       std::vector<int> tie);

  int num_candidates() const { return static_cast<int>(names_.size()); }
  Mult num_voters() const { return n_; }

  const std::vector<std::string>& candidate_names() const { return names_; }
  const std::string& candidate_name(int c) const { return names_[c]; }
  int candidate_id(const std::string& name) const;  // unknown_candidate

  const ScoringRule& rule() const { return rule_; }
  const std::vector<VoterGroup>& voters() const { return voters_; }
  const std::vector<int>& tie() const { return tie_; }

  // Position of c in the tie order; lower wins ties.
  int tie_rank(int c) const { return tie_rank_[c]; }
  bool tie_prefers(int c, int d) const { return tie_rank_[c] < tie_rank_[d]; }

  // Resolved score vector for this instance's candidate count.
  const std::vector<Score>& score_vector() const { return score_vector_; }

  Instance with_rule(ScoringRule rule) const;

  bool operator==(const Instance&) const = default;

 private:
  Instance() = default;

  std::vector<std::string> names_;
  ScoringRule rule_ = ScoringRule::plurality();
  std::vector<VoterGroup> voters_;
  std::vector<int> tie_;
  std::vector<int> tie_rank_;
  std::vector<Score> score_vector_;
  Mult n_ = 0;
};

// Checks structure (group count, multiplicity sums, permutations) and that
// every vote block extends its group's partial order.
bool completion_valid(const Instance& instance, const Completion& completion);

}  // namespace topkvote
