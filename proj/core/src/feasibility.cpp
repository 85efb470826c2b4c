#include "topkvote/feasibility.hpp"

#include <algorithm>

namespace topkvote {

std::optional<PositionWindow> score_interval(const std::vector<Score>& vec,
                                             Score s) {
  // vec is non-increasing; find the run of positions carrying s.
  const int m = static_cast<int>(vec.size());
  int first = -1, last = -1;
  for (int j = 0; j < m; ++j) {
    if (vec[j] == s) {
      if (first == -1) first = j;
      last = j;
    }
  }
  if (first == -1) return std::nullopt;
  return PositionWindow{first + 1, last + 1};
}

std::optional<PositionWindow> score_interval(const ScoringRule& rule, int m,
                                             Score s) {
  return score_interval(rule.score_vector(m), s);
}

std::optional<std::vector<int>> feasible_extension(
    const PartialOrder& p, const std::vector<WindowConstraint>& constraints) {
  const int m = p.size();
  std::vector<int> release(m, 1), deadline(m, m);
  std::vector<char> constrained(m, 0);
  for (const auto& c : constraints) {
    if (c.candidate < 0 || c.candidate >= m)
      fail(Errc::index_out_of_range, "constraint on unknown candidate");
    if (constrained[c.candidate])
      fail(Errc::conflicting_constraints,
           "two windows for candidate " + std::to_string(c.candidate));
    constrained[c.candidate] = 1;
    if (c.window.release > c.window.deadline)
      fail(Errc::conflicting_constraints, "window with release > deadline");
    release[c.candidate] = std::max(1, c.window.release);
    deadline[c.candidate] = std::min(m, c.window.deadline);
    if (release[c.candidate] > deadline[c.candidate]) return std::nullopt;
  }

  // Tighten windows through the closure until stable: a candidate is
  // released only after each of its predecessors, and must leave room for
  // each of its successors.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (!p.prefers(x, y)) continue;
        if (release[y] < release[x] + 1) {
          release[y] = release[x] + 1;
          changed = true;
        }
        if (deadline[x] > deadline[y] - 1) {
          deadline[x] = deadline[y] - 1;
          changed = true;
        }
      }
    }
  }
  for (int c = 0; c < m; ++c)
    if (release[c] > deadline[c]) return std::nullopt;

  // Earliest-deadline-first over unit slots 1..m, restricted to candidates
  // whose predecessors are already placed. Exact for unit tasks with
  // integral windows on one machine.
  std::vector<int> order;
  order.reserve(m);
  std::vector<char> placed(m, 0);
  std::vector<int> preds_left(m, 0);
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x)
      if (p.prefers(x, y)) ++preds_left[y];

  for (int slot = 1; slot <= m; ++slot) {
    int pick = -1;
    for (int c = 0; c < m; ++c) {
      if (placed[c] || preds_left[c] > 0 || release[c] > slot) continue;
      if (pick == -1 || deadline[c] < deadline[pick]) pick = c;
    }
    if (pick == -1 || deadline[pick] < slot) return std::nullopt;
    placed[pick] = 1;
    order.push_back(pick);
    for (int y = 0; y < m; ++y)
      if (p.prefers(pick, y)) --preds_left[y];
  }
  return order;
}

std::optional<std::vector<int>> voter_score_feasible(
    const std::vector<Score>& vec, const PartialOrder& p,
    const std::vector<int>& S, const std::vector<Score>& targets) {
  if (S.size() != targets.size())
    fail(Errc::conflicting_constraints, "tracked candidates vs targets length");
  std::vector<WindowConstraint> constraints;
  constraints.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    auto window = score_interval(vec, targets[i]);
    if (!window) return std::nullopt;
    constraints.push_back({S[i], *window});
  }
  return feasible_extension(p, constraints);
}

std::optional<std::vector<int>> voter_score_feasible(
    const ScoringRule& rule, const PartialOrder& p, const std::vector<int>& S,
    const std::vector<Score>& targets) {
  return voter_score_feasible(rule.score_vector(p.size()), p, S, targets);
}

std::pair<Score, std::vector<int>> max_score_advantage(
    const std::vector<Score>& vec, const PartialOrder& p, int c, int d) {
  const int m = p.size();
  if (c == d) fail(Errc::validation_error, "advantage of a candidate over itself");

  // All (position of c, position of d) pairs, best score difference first.
  struct Option {
    Score diff;
    int ci, dj;
  };
  std::vector<Option> options;
  options.reserve(static_cast<std::size_t>(m) * (m - 1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) options.push_back({vec[i] - vec[j], i, j});
  std::sort(options.begin(), options.end(), [](const Option& a, const Option& b) {
    if (a.diff != b.diff) return a.diff > b.diff;
    if (a.ci != b.ci) return a.ci < b.ci;
    return a.dj < b.dj;
  });

  for (const auto& option : options) {
    std::vector<WindowConstraint> constraints = {
        {c, {option.ci + 1, option.ci + 1}},
        {d, {option.dj + 1, option.dj + 1}},
    };
    if (auto order = feasible_extension(p, constraints))
      return {option.diff, std::move(*order)};
  }
  // Unreachable: any extension realizes some position pair.
  fail(Errc::validation_error, "no feasible position pair");
}

std::pair<Score, std::vector<int>> max_score_advantage(const ScoringRule& rule,
                                                       const PartialOrder& p,
                                                       int c, int d) {
  return max_score_advantage(rule.score_vector(p.size()), p, c, d);
}

}  // namespace topkvote
