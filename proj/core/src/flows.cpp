#include "topkvote/flows.hpp"

#include <algorithm>
#include <limits>

#include "topkvote/feasibility.hpp"
#include "topkvote/scorespace.hpp"

namespace topkvote {

std::vector<int> eligible_positions(const PartialOrder& p, Extreme which) {
  return which == Extreme::top ? p.maximal_elements() : p.minimal_elements();
}

namespace {

constexpr Mult kInf = std::numeric_limits<Mult>::max() / 4;

// Dinic's algorithm; graphs here have a handful of nodes, capacities carry
// the voter multiplicities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : graph_(nodes) {}

  struct Handle {
    int node, index;
  };

  Handle add_edge(int from, int to, Mult cap) {
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
    return {from, static_cast<int>(graph_[from].size()) - 1};
  }

  Mult flow_on(Handle h) const {
    const Edge& e = graph_[h.node][h.index];
    return graph_[e.to][e.rev].cap;  // residual of the reverse edge
  }

  Mult run(int s, int t) {
    Mult total = 0;
    while (bfs(s, t)) {
      iter_.assign(graph_.size(), 0);
      while (Mult pushed = dfs(s, t, kInf)) total += pushed;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    Mult cap;
    int rev;
  };

  bool bfs(int s, int t) {
    level_.assign(graph_.size(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const Edge& e : graph_[v]) {
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Mult dfs(int v, int t, Mult limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Edge& e = graph_[v][i];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      Mult pushed = dfs(e.to, t, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        graph_[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

std::optional<Assignment> degree_constrained_assignment(
    const AssignmentProblem& problem) {
  const int groups = static_cast<int>(problem.supply.size());
  const int cands = static_cast<int>(problem.bounds.size());
  if (problem.edges.size() != problem.supply.size())
    fail(Errc::malformed_problem, "edge list count does not match groups");
  for (int g = 0; g < groups; ++g) {
    if (problem.supply[g] < 1)
      fail(Errc::malformed_problem, "group supply must be positive");
    if (problem.edges[g].empty())
      fail(Errc::malformed_problem, "group without incident edges");
    for (int c : problem.edges[g])
      if (c < 0 || c >= cands)
        fail(Errc::malformed_problem, "edge to unknown candidate");
  }
  for (const auto& [alpha, beta] : problem.bounds)
    if (alpha < 0 || alpha > beta)
      fail(Errc::malformed_problem, "candidate bounds must satisfy 0 <= alpha <= beta");

  // Nodes: groups, candidates, s, t, super source/sink.
  const int node_s = groups + cands;
  const int node_t = node_s + 1;
  const int super_s = node_t + 1;
  const int super_t = super_s + 1;
  MaxFlow flow(super_t + 1);
  std::vector<Mult> excess(super_t + 1, 0);

  auto add_bounded = [&](int from, int to, Mult lo, Mult hi) {
    excess[to] += lo;
    excess[from] -= lo;
    return flow.add_edge(from, to, hi - lo);
  };

  for (int g = 0; g < groups; ++g)
    add_bounded(node_s, g, problem.supply[g], problem.supply[g]);

  std::vector<std::vector<MaxFlow::Handle>> unit_edges(groups);
  for (int g = 0; g < groups; ++g) {
    std::vector<int> targets = problem.edges[g];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int c : targets)
      unit_edges[g].push_back(
          add_bounded(g, groups + c, 0, problem.supply[g]));
  }

  for (int c = 0; c < cands; ++c)
    add_bounded(groups + c, node_t, problem.bounds[c].first,
                problem.bounds[c].second);

  flow.add_edge(node_t, node_s, kInf);

  Mult needed = 0;
  for (int v = 0; v <= super_t; ++v) {
    if (excess[v] > 0) {
      flow.add_edge(super_s, v, excess[v]);
      needed += excess[v];
    } else if (excess[v] < 0) {
      flow.add_edge(v, super_t, -excess[v]);
    }
  }

  if (flow.run(super_s, super_t) != needed) return std::nullopt;

  Assignment out(groups);
  for (int g = 0; g < groups; ++g) {
    std::vector<int> targets = problem.edges[g];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Mult units = flow.flow_on(unit_edges[g][i]);
      if (units > 0) out[g].emplace_back(targets[i], units);
    }
  }
  return out;
}

std::optional<Completion> bounded_score_completion(const Instance& instance,
                                                   const std::vector<Score>& lo,
                                                   const std::vector<Score>& hi) {
  const int m = instance.num_candidates();
  const Mult n = instance.num_voters();
  const RuleKind kind = instance.rule().kind();
  if (kind != RuleKind::plurality && kind != RuleKind::veto)
    fail(Errc::unsupported_rule,
         "bounded-score completions cover plurality and veto only");
  if (static_cast<int>(lo.size()) != m || static_cast<int>(hi.size()) != m)
    fail(Errc::malformed_problem, "bound vectors must cover every candidate");
  for (int c = 0; c < m; ++c)
    if (lo[c] < 0 || lo[c] > hi[c] || hi[c] > n)
      fail(Errc::malformed_problem, "bounds must satisfy 0 <= lo <= hi <= n");

  const bool plurality = kind == RuleKind::plurality;
  AssignmentProblem problem;
  problem.supply.reserve(instance.voters().size());
  problem.edges.reserve(instance.voters().size());
  for (const auto& group : instance.voters()) {
    problem.supply.push_back(group.mult);
    problem.edges.push_back(eligible_positions(
        group.order, plurality ? Extreme::top : Extreme::bottom));
  }
  problem.bounds.resize(m);
  for (int c = 0; c < m; ++c) {
    // Veto: score s means being placed last by exactly n - s voters.
    problem.bounds[c] = plurality ? std::make_pair(lo[c], hi[c])
                                  : std::make_pair(n - hi[c], n - lo[c]);
  }

  auto assignment = degree_constrained_assignment(problem);
  if (!assignment) return std::nullopt;

  const int extreme_slot = plurality ? 1 : m;
  Completion out;
  out.groups.resize(instance.voters().size());
  for (std::size_t g = 0; g < assignment->size(); ++g) {
    for (const auto& [cand, units] : (*assignment)[g]) {
      auto order = feasible_extension(
          instance.voters()[g].order,
          {{cand, {extreme_slot, extreme_slot}}});
      if (!order)
        fail(Errc::validation_error, "eligible candidate not placeable");
      out.groups[g].push_back({std::move(*order), units});
    }
  }
  return out;
}

namespace {

bool tie_favors(const Instance& instance, TiePolicy policy, int c, int d) {
  switch (policy) {
    case TiePolicy::given: return instance.tie_prefers(c, d);
    case TiePolicy::some: return true;
    case TiePolicy::every: return false;
  }
  return false;
}

Completion default_completion(const Instance& instance) {
  Completion out;
  out.groups.resize(instance.voters().size());
  for (std::size_t g = 0; g < instance.voters().size(); ++g) {
    auto order = feasible_extension(instance.voters()[g].order, {});
    out.groups[g].push_back({std::move(*order), instance.voters()[g].mult});
  }
  return out;
}

void check_plu_veto(const Instance& instance) {
  const RuleKind kind = instance.rule().kind();
  if (kind != RuleKind::plurality && kind != RuleKind::veto)
    fail(Errc::unsupported_rule, "exact possible-side algorithms cover "
                                 "plurality and veto only");
}

}  // namespace

FlowResult ptw_fixed_k(const Instance& instance, int c, int k,
                       TiePolicy policy) {
  check_plu_veto(instance);
  const int m = instance.num_candidates();
  const Mult n = instance.num_voters();
  if (c < 0 || c >= m) fail(Errc::unknown_candidate, "candidate out of range");
  if (k < 1 || k > m) fail(Errc::validation_error, "k must lie in [1, m]");
  if (k == m) return {true, default_completion(instance)};

  std::vector<int> others;
  for (int d = 0; d < m; ++d)
    if (d != c) others.push_back(d);

  const int complement = m - k;
  std::vector<int> pick(complement);
  std::vector<Score> lo(m), hi(m);

  auto try_subsets = [&](auto&& self, int depth, int start)
      -> std::optional<Completion> {
    if (depth == complement) {
      for (Score s = 0; s <= n; ++s) {
        std::fill(lo.begin(), lo.end(), Score{0});
        std::fill(hi.begin(), hi.end(), n);
        lo[c] = s;
        bool possible = true;
        for (int d : pick) {
          hi[d] = s - (tie_favors(instance, policy, c, d) ? 0 : 1);
          if (hi[d] < 0) possible = false;
        }
        if (!possible) continue;
        if (auto witness = bounded_score_completion(instance, lo, hi))
          return witness;
      }
      return std::nullopt;
    }
    for (int i = start; i < static_cast<int>(others.size()); ++i) {
      pick[depth] = others[i];
      if (auto found = self(self, depth + 1, i + 1)) return found;
    }
    return std::nullopt;
  };

  if (auto witness = try_subsets(try_subsets, 0, 0))
    return {true, std::move(*witness)};
  return {false, std::nullopt};
}

bool possible_winner_plu_veto(const Instance& instance, int c) {
  return ptw_fixed_k(instance, c, 1, TiePolicy::given).answer;
}

FlowResult possible_topk_set(const Instance& instance,
                             const std::vector<int>& set, TiePolicy policy) {
  check_plu_veto(instance);
  const int m = instance.num_candidates();
  const Mult n = instance.num_voters();
  if (set.empty() || static_cast<int>(set.size()) > m)
    fail(Errc::bad_set_size, "set size must lie in [1, m]");
  std::vector<char> member(m, 0);
  for (int c : set) {
    if (c < 0 || c >= m) fail(Errc::unknown_candidate, "set member out of range");
    if (member[c]) fail(Errc::bad_set_size, "duplicate set member");
    member[c] = 1;
  }
  if (static_cast<int>(set.size()) == m)
    return {true, default_completion(instance)};

  std::vector<int> members = set;
  std::sort(members.begin(), members.end());
  std::vector<Score> lo(m), hi(m);

  for (int pivot : members) {
    for (Score s = 0; s <= n; ++s) {
      std::fill(lo.begin(), lo.end(), Score{0});
      std::fill(hi.begin(), hi.end(), n);
      lo[pivot] = hi[pivot] = s;
      bool possible = true;
      for (int c = 0; c < m && possible; ++c) {
        if (c == pivot) continue;
        if (member[c]) {
          // A member that loses the given tie against the pivot must beat
          // the pivot's score outright; under some/every ties among
          // members are immaterial.
          const bool strict = policy == TiePolicy::given &&
                              instance.tie_prefers(pivot, c);
          lo[c] = s + (strict ? 1 : 0);
          if (lo[c] > n) possible = false;
        } else {
          const bool strict =
              policy == TiePolicy::every ||
              (policy == TiePolicy::given && instance.tie_prefers(c, pivot));
          hi[c] = s - (strict ? 1 : 0);
          if (hi[c] < 0) possible = false;
        }
      }
      if (!possible) continue;
      if (auto witness = bounded_score_completion(instance, lo, hi))
        return {true, std::move(*witness)};
    }
  }
  return {false, std::nullopt};
}

bool condorcet_committee(const Instance& instance, const std::vector<int>& set,
                         CommitteeMode mode) {
  check_plu_veto(instance);
  if (mode == CommitteeMode::possible)
    return possible_topk_set(instance, set, TiePolicy::some).answer;

  const int m = instance.num_candidates();
  if (set.empty() || static_cast<int>(set.size()) > m)
    fail(Errc::bad_set_size, "set size must lie in [1, m]");
  std::vector<char> member(m, 0);
  for (int c : set) {
    if (c < 0 || c >= m) fail(Errc::unknown_candidate, "set member out of range");
    if (member[c]) fail(Errc::bad_set_size, "duplicate set member");
    member[c] = 1;
  }
  for (int outsider = 0; outsider < m; ++outsider) {
    if (member[outsider]) continue;
    for (int inside : set)
      if (can_defeat(instance, outsider, inside, DefeatMode::strict))
        return false;
  }
  return true;
}

}  // namespace topkvote
