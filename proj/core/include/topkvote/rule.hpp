#pragma once

#include <vector>

#include "topkvote/types.hpp"

namespace topkvote {

enum class RuleKind { plurality, veto, t_approval, t_veto, borda, custom };

// A positional scoring rule: one non-increasing score vector per number of
// candidates m, with a strict drop between the first and last entry.
// The named families generate the vector for any m; a custom rule carries
// one explicit vector and is only defined at its own length.
class ScoringRule {
 public:
  static ScoringRule plurality();
  static ScoringRule veto();
  static ScoringRule t_approval(int t);
  static ScoringRule t_veto(int t);
  static ScoringRule borda();
  static ScoringRule custom(std::vector<Score> scores);

  RuleKind kind() const { return kind_; }
  int t() const { return t_; }
  const std::vector<Score>& custom_scores() const { return custom_; }

  // The score vector at m candidates. Throws degenerate_rule when the
  // family would produce a constant vector at this m (e.g. t-approval with
  // t >= m), unsupported_m for a custom rule at a different length.
  std::vector<Score> score_vector(int m) const;

  // True when every score the rule assigns is 0 or 1 for every m
  // (plurality, veto, t-approval, t-veto, and 0/1 custom vectors).
  bool is_binary() const;

  bool operator==(const ScoringRule&) const = default;

  std::string name() const;

 private:
  ScoringRule(RuleKind kind, int t, std::vector<Score> custom)
      : kind_(kind), t_(t), custom_(std::move(custom)) {}

  RuleKind kind_;
  int t_ = 0;
  std::vector<Score> custom_;
};

}  // namespace topkvote
