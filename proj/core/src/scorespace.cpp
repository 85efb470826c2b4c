#include "topkvote/scorespace.hpp"

#include <algorithm>
#include <map>

#include "topkvote/feasibility.hpp"

namespace topkvote {

namespace {

using VecSet = std::vector<std::vector<Score>>;  // sorted, unique

void sort_unique(VecSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

VecSet sum_sets(const VecSet& a, const VecSet& b,
                const ScoreSpaceLimits& limits) {
  const std::int64_t products =
      static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size());
  if (products > limits.max_pair_products)
    fail(Errc::space_too_large, "sumset work exceeds the configured bound");
  VecSet out;
  out.reserve(products);
  std::vector<Score> sum(a.empty() ? 0 : a.front().size());
  for (const auto& u : a) {
    for (const auto& v : b) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = u[i] + v[i];
      out.push_back(sum);
    }
  }
  sort_unique(out);
  if (static_cast<std::int64_t>(out.size()) > limits.max_vectors)
    fail(Errc::space_too_large, "score set exceeds the configured bound");
  return out;
}

bool set_contains(const VecSet& set, const std::vector<Score>& v) {
  return std::binary_search(set.begin(), set.end(), v);
}

// The tuples one copy of this voter can hand the tracked candidates,
// probed over all combinations of the rule's distinct score values.
VecSet single_voter_set(const std::vector<Score>& vec, const PartialOrder& p,
                        const std::vector<int>& S) {
  std::vector<Score> values = vec;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const std::size_t q = S.size();
  VecSet out;
  std::vector<Score> targets(q, 0);
  std::vector<std::size_t> odo(q, 0);
  while (true) {
    for (std::size_t i = 0; i < q; ++i) targets[i] = values[odo[i]];
    if (voter_score_feasible(vec, p, S, targets)) out.push_back(targets);
    std::size_t i = 0;
    while (i < q && ++odo[i] == values.size()) odo[i++] = 0;
    if (i == q) break;
  }
  sort_unique(out);
  return out;
}

// Sets for 1, 2, 4, ... copies of one voter, built by repeated squaring;
// kept so that witnesses can be split back into per-copy tuples.
struct CopyLadder {
  std::map<Mult, VecSet> by_count;

  const VecSet& build(Mult w, const VecSet& base,
                      const ScoreSpaceLimits& limits) {
    auto it = by_count.find(w);
    if (it != by_count.end()) return it->second;
    if (w == 1) return by_count.emplace(1, base).first->second;
    const Mult lo = w / 2, hi = w - lo;
    const VecSet sum = sum_sets(build(lo, base, limits),
                                build(hi, base, limits), limits);
    return by_count.emplace(w, sum).first->second;
  }

  // Splits a reachable sum for w copies into per-copy tuples,
  // deterministically (first decomposition in sorted order).
  void split(Mult w, const std::vector<Score>& target,
             std::vector<std::vector<Score>>& out) const {
    if (w == 1) {
      out.push_back(target);
      return;
    }
    const Mult lo = w / 2, hi = w - lo;
    const VecSet& lo_set = by_count.at(lo);
    const VecSet& hi_set = by_count.at(hi);
    std::vector<Score> rest(target.size());
    for (const auto& u : lo_set) {
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = target[i] - u[i];
      if (set_contains(hi_set, rest)) {
        split(lo, u, out);
        split(hi, rest, out);
        return;
      }
    }
    fail(Errc::validation_error, "unsplittable sum in copy ladder");
  }
};

struct ProfileSpace {
  std::vector<int> tracked;
  std::vector<VecSet> group_sets;   // per group, scaled to its multiplicity
  std::vector<CopyLadder> ladders;  // per group
  std::vector<VecSet> suffix;       // suffix[g] = sum of groups g..end
};

ProfileSpace build_profile_space(const Instance& instance,
                                 const std::vector<int>& S,
                                 const ScoreSpaceLimits& limits) {
  const std::size_t r = instance.voters().size();
  ProfileSpace space;
  space.tracked = S;
  space.group_sets.resize(r);
  space.ladders.resize(r);
  for (std::size_t g = 0; g < r; ++g) {
    const auto& group = instance.voters()[g];
    VecSet base = single_voter_set(instance.score_vector(), group.order, S);
    space.group_sets[g] = space.ladders[g].build(group.mult, base, limits);
  }
  space.suffix.resize(r + 1);
  space.suffix[r] = {std::vector<Score>(S.size(), 0)};
  for (std::size_t g = r; g-- > 0;)
    space.suffix[g] = sum_sets(space.group_sets[g], space.suffix[g + 1], limits);
  return space;
}

// Reconstructs a completion realizing `target` (a member of suffix[0]).
Completion replay(const Instance& instance, const ProfileSpace& space,
                  const std::vector<Score>& target) {
  const std::size_t r = instance.voters().size();
  Completion out;
  out.groups.resize(r);
  std::vector<Score> remaining = target;
  std::vector<Score> rest(target.size());
  for (std::size_t g = 0; g < r; ++g) {
    const VecSet& set = space.group_sets[g];
    const VecSet& later = space.suffix[g + 1];
    bool advanced = false;
    for (const auto& u : set) {
      for (std::size_t i = 0; i < rest.size(); ++i)
        rest[i] = remaining[i] - u[i];
      if (set_contains(later, rest)) {
        std::vector<std::vector<Score>> copies;
        space.ladders[g].split(instance.voters()[g].mult, u, copies);
        std::sort(copies.begin(), copies.end());
        // Identical per-copy tuples produce identical orders; merge them.
        for (std::size_t i = 0; i < copies.size();) {
          std::size_t j = i;
          while (j < copies.size() && copies[j] == copies[i]) ++j;
          auto order = voter_score_feasible(instance.score_vector(),
                                            instance.voters()[g].order,
                                            space.tracked, copies[i]);
          if (!order)
            fail(Errc::validation_error, "replayed tuple became infeasible");
          out.groups[g].push_back({std::move(*order),
                                   static_cast<Mult>(j - i)});
          i = j;
        }
        remaining = rest;
        advanced = true;
        break;
      }
    }
    if (!advanced)
      fail(Errc::validation_error, "target vector not reachable in replay");
  }
  return out;
}

bool tie_counts_against(const Instance& instance, TiePolicy policy, int rival,
                        int c) {
  switch (policy) {
    case TiePolicy::given: return instance.tie_prefers(rival, c);
    case TiePolicy::some: return false;
    case TiePolicy::every: return true;
  }
  return false;
}

// Minimum margin rival needs over c (in some completion) to take part in a
// counterexample under the policy.
Score required_margin(const Instance& instance, TiePolicy policy, int rival,
                      int c) {
  return tie_counts_against(instance, policy, rival, c) ? 0 : 1;
}

}  // namespace

ScoreSpace profile_score_set(const Instance& instance,
                             const std::vector<int>& S,
                             const ScoreSpaceLimits& limits) {
  const int m = instance.num_candidates();
  if (S.empty()) fail(Errc::bad_set_size, "tracked sequence must be nonempty");
  std::vector<char> seen(m, 0);
  for (int c : S) {
    if (c < 0 || c >= m)
      fail(Errc::unknown_candidate, "tracked id out of range");
    if (seen[c]) fail(Errc::bad_set_size, "duplicate tracked candidate");
    seen[c] = 1;
  }
  ProfileSpace space = build_profile_space(instance, S, limits);
  return {S, std::move(space.suffix[0])};
}

NtwResult ntw_fixed_k(const Instance& instance, int c, int k, TiePolicy policy,
                      const ScoreSpaceLimits& limits) {
  const int m = instance.num_candidates();
  if (c < 0 || c >= m) fail(Errc::unknown_candidate, "candidate out of range");
  if (k < 1 || k > m) fail(Errc::validation_error, "k must lie in [1, m]");

  // A rival that cannot reach the required margin against c in isolation
  // can never defeat c jointly either.
  std::vector<int> rivals;
  for (int d = 0; d < m; ++d) {
    if (d == c) continue;
    if (max_defeat_margin(instance, d, c) >=
        required_margin(instance, policy, d, c))
      rivals.push_back(d);
  }
  if (static_cast<int>(rivals.size()) < k) return {true, std::nullopt};

  std::vector<int> pick(k);
  const std::size_t q = static_cast<std::size_t>(k) + 1;

  // Subsets of `rivals` of size k in lexicographic order.
  auto try_subsets = [&](auto&& self, int depth, int start) -> std::optional<Completion> {
    if (depth == k) {
      std::vector<int> tracked(pick.begin(), pick.end());
      tracked.push_back(c);
      ProfileSpace space = build_profile_space(instance, tracked, limits);
      for (const auto& v : space.suffix[0]) {
        bool all_defeat = true;
        for (std::size_t i = 0; i + 1 < q && all_defeat; ++i) {
          all_defeat = v[i] > v[q - 1] ||
                       (v[i] == v[q - 1] &&
                        tie_counts_against(instance, policy, tracked[i], c));
        }
        if (all_defeat) return replay(instance, space, v);
      }
      return std::nullopt;
    }
    for (int i = start; i < static_cast<int>(rivals.size()); ++i) {
      pick[depth] = rivals[i];
      if (auto found = self(self, depth + 1, i + 1)) return found;
    }
    return std::nullopt;
  };

  if (auto counterexample = try_subsets(try_subsets, 0, 0))
    return {false, std::move(*counterexample)};
  return {true, std::nullopt};
}

Score max_defeat_margin(const Instance& instance, int c, int d) {
  Score total = 0;
  for (const auto& group : instance.voters())
    total += group.mult *
             max_score_advantage(instance.score_vector(), group.order, c, d).first;
  return total;
}

Completion max_defeat_margin_witness(const Instance& instance, int c, int d) {
  Completion out;
  out.groups.resize(instance.voters().size());
  for (std::size_t g = 0; g < instance.voters().size(); ++g) {
    const auto& group = instance.voters()[g];
    auto [margin, order] =
        max_score_advantage(instance.score_vector(), group.order, c, d);
    out.groups[g].push_back({std::move(order), group.mult});
  }
  return out;
}

bool can_defeat(const Instance& instance, int c, int d, DefeatMode mode) {
  const int m = instance.num_candidates();
  if (c < 0 || c >= m || d < 0 || d >= m)
    fail(Errc::unknown_candidate, "candidate out of range");
  if (c == d) fail(Errc::validation_error, "candidate against itself");
  const Score margin = max_defeat_margin(instance, c, d);
  if (mode == DefeatMode::strict) return margin >= 1;
  return margin >= (instance.tie_prefers(c, d) ? 0 : 1);
}

bool necessary_winner(const Instance& instance, int c) {
  const int m = instance.num_candidates();
  if (c < 0 || c >= m) fail(Errc::unknown_candidate, "candidate out of range");
  for (int d = 0; d < m; ++d)
    if (d != c && can_defeat(instance, d, c, DefeatMode::weak)) return false;
  return true;
}

std::optional<std::pair<int, int>> topk_set_violation(
    const Instance& instance, const std::vector<int>& set, TiePolicy policy) {
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
    for (int inside : set) {
      if (max_defeat_margin(instance, outsider, inside) >=
          required_margin(instance, policy, outsider, inside))
        return std::make_pair(outsider, inside);
    }
  }
  return std::nullopt;
}

bool necessary_topk_set(const Instance& instance, const std::vector<int>& set,
                        TiePolicy policy) {
  return !topk_set_violation(instance, set, policy).has_value();
}

}  // namespace topkvote
