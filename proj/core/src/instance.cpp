#include "topkvote/instance.hpp"

#include <algorithm>
#include <unordered_set>

namespace topkvote {

Instance Instance::make(std::vector<std::string> candidate_names,
                        ScoringRule rule, std::vector<VoterGroup> voters,
                        std::vector<int> tie) {
  const int m = static_cast<int>(candidate_names.size());
  if (m < 2) fail(Errc::validation_error, "need at least two candidates");

  std::unordered_set<std::string> seen_names;
  for (const auto& name : candidate_names) {
    if (name.empty()) fail(Errc::validation_error, "empty candidate name");
    if (!seen_names.insert(name).second)
      fail(Errc::validation_error, "duplicate candidate name: " + name);
  }

  if (static_cast<int>(tie.size()) != m)
    fail(Errc::validation_error, "tie order must list every candidate");
  std::vector<int> tie_rank(m, -1);
  for (int i = 0; i < m; ++i) {
    int c = tie[i];
    if (c < 0 || c >= m)
      fail(Errc::validation_error, "tie entry outside candidate range");
    if (tie_rank[c] != -1)
      fail(Errc::validation_error, "duplicate tie entry");
    tie_rank[c] = i;
  }

  if (voters.empty()) fail(Errc::validation_error, "need at least one voter");
  Mult n = 0;
  for (const auto& group : voters) {
    if (group.order.size() != m)
      fail(Errc::validation_error, "voter order over wrong candidate count");
    if (group.mult < 1)
      fail(Errc::validation_error, "voter multiplicity must be positive");
    n += group.mult;
  }

  Instance out;
  out.names_ = std::move(candidate_names);
  out.rule_ = rule;
  out.voters_ = std::move(voters);
  out.tie_ = std::move(tie);
  out.tie_rank_ = std::move(tie_rank);
  out.score_vector_ = rule.score_vector(m);
  out.n_ = n;
  return out;
}

int Instance::candidate_id(const std::string& name) const {
  for (int c = 0; c < num_candidates(); ++c)
    if (names_[c] == name) return c;
  fail(Errc::unknown_candidate, "no candidate named '" + name + "'");
}

Instance Instance::with_rule(ScoringRule rule) const {
  return make(names_, std::move(rule), voters_, tie_);
}

bool completion_valid(const Instance& instance, const Completion& completion) {
  if (completion.groups.size() != instance.voters().size()) return false;
  for (std::size_t g = 0; g < completion.groups.size(); ++g) {
    const auto& group = instance.voters()[g];
    Mult total = 0;
    for (const auto& block : completion.groups[g]) {
      if (block.mult < 1) return false;
      if (!order_extends(group.order, block.order)) return false;
      total += block.mult;
    }
    if (total != group.mult) return false;
  }
  return true;
}

}  // namespace topkvote
