#include "topkvote/rule.hpp"

#include <algorithm>

namespace topkvote {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::degenerate_rule: return "DegenerateRule";
    case Errc::unsupported_m: return "UnsupportedM";
    case Errc::cyclic_order: return "CyclicOrder";
    case Errc::overlapping_blocks: return "OverlappingBlocks";
    case Errc::incomplete_cover: return "IncompleteCover";
    case Errc::invalid_completion: return "InvalidCompletion";
    case Errc::unknown_candidate: return "UnknownCandidate";
    case Errc::too_large: return "TooLarge";
    case Errc::conflicting_constraints: return "ConflictingConstraints";
    case Errc::space_too_large: return "SpaceTooLarge";
    case Errc::bad_set_size: return "BadSetSize";
    case Errc::unsupported_rule: return "UnsupportedRule";
    case Errc::malformed_problem: return "MalformedProblem";
    case Errc::non_binary_rule: return "NonBinaryRule";
    case Errc::containment_violated: return "ContainmentViolated";
    case Errc::malformed_x3c: return "MalformedX3C";
    case Errc::malformed_graph: return "MalformedGraph";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_strongly_pure: return "NotStronglyPure";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::no_exact_method: return "NoExactMethod";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

ScoringRule ScoringRule::plurality() { return ScoringRule(RuleKind::plurality, 0, {}); }
ScoringRule ScoringRule::veto() { return ScoringRule(RuleKind::veto, 0, {}); }
ScoringRule ScoringRule::borda() { return ScoringRule(RuleKind::borda, 0, {}); }

ScoringRule ScoringRule::t_approval(int t) {
  if (t < 1) fail(Errc::degenerate_rule, "t-approval requires t >= 1");
  return ScoringRule(RuleKind::t_approval, t, {});
}

ScoringRule ScoringRule::t_veto(int t) {
  if (t < 1) fail(Errc::degenerate_rule, "t-veto requires t >= 1");
  return ScoringRule(RuleKind::t_veto, t, {});
}

ScoringRule ScoringRule::custom(std::vector<Score> scores) {
  if (scores.size() < 2)
    fail(Errc::degenerate_rule, "custom vector needs at least two entries");
  for (std::size_t i = 0; i + 1 < scores.size(); ++i) {
    if (scores[i] < scores[i + 1])
      fail(Errc::degenerate_rule, "custom vector must be non-increasing");
  }
  if (scores.front() <= scores.back())
    fail(Errc::degenerate_rule, "custom vector must strictly decrease overall");
  if (scores.back() < 0)
    fail(Errc::degenerate_rule, "scores must be non-negative");
  return ScoringRule(RuleKind::custom, 0, std::move(scores));
}

std::vector<Score> ScoringRule::score_vector(int m) const {
  if (m < 2) fail(Errc::degenerate_rule, "score vector needs m >= 2");
  switch (kind_) {
    case RuleKind::plurality: {
      std::vector<Score> v(m, 0);
      v[0] = 1;
      return v;
    }
    case RuleKind::veto: {
      std::vector<Score> v(m, 1);
      v[m - 1] = 0;
      return v;
    }
    case RuleKind::t_approval: {
      if (t_ >= m)
        fail(Errc::degenerate_rule,
             "t-approval is constant at m = " + std::to_string(m));
      std::vector<Score> v(m, 0);
      std::fill(v.begin(), v.begin() + t_, Score{1});
      return v;
    }
    case RuleKind::t_veto: {
      if (t_ >= m)
        fail(Errc::degenerate_rule,
             "t-veto is constant at m = " + std::to_string(m));
      std::vector<Score> v(m, 1);
      std::fill(v.end() - t_, v.end(), Score{0});
      return v;
    }
    case RuleKind::borda: {
      std::vector<Score> v(m);
      for (int j = 0; j < m; ++j) v[j] = m - 1 - j;
      return v;
    }
    case RuleKind::custom: {
      if (static_cast<int>(custom_.size()) != m)
        fail(Errc::unsupported_m,
             "custom rule is fixed at m = " + std::to_string(custom_.size()));
      return custom_;
    }
  }
  fail(Errc::degenerate_rule, "unreachable rule kind");
}

bool ScoringRule::is_binary() const {
  switch (kind_) {
    case RuleKind::plurality:
    case RuleKind::veto:
    case RuleKind::t_approval:
    case RuleKind::t_veto:
      return true;
    case RuleKind::borda:
      return false;
    case RuleKind::custom:
      return std::all_of(custom_.begin(), custom_.end(),
                         [](Score s) { return s == 0 || s == 1; });
  }
  return false;
}

std::string ScoringRule::name() const {
  switch (kind_) {
    case RuleKind::plurality: return "plurality";
    case RuleKind::veto: return "veto";
    case RuleKind::t_approval: return std::to_string(t_) + "-approval";
    case RuleKind::t_veto: return std::to_string(t_) + "-veto";
    case RuleKind::borda: return "borda";
    case RuleKind::custom: return "custom";
  }
  return "?";
}

}  // namespace topkvote
