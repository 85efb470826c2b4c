#include "topkvote/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace topkvote {

bool query_is_necessary(QueryKind kind) {
  switch (kind) {
    case QueryKind::nw:
    case QueryKind::ntw:
    case QueryKind::nts:
    case QueryKind::condorcet_nec:
      return true;
    default:
      return false;
  }
}

bool query_takes_candidate(QueryKind kind) {
  return kind == QueryKind::nw || kind == QueryKind::pw ||
         kind == QueryKind::ntw || kind == QueryKind::ptw;
}

bool query_takes_set(QueryKind kind) { return !query_takes_candidate(kind); }

const char* query_kind_name(QueryKind kind) {
  switch (kind) {
    case QueryKind::nw: return "nw";
    case QueryKind::pw: return "pw";
    case QueryKind::ntw: return "ntw";
    case QueryKind::ptw: return "ptw";
    case QueryKind::nts: return "nts";
    case QueryKind::pts: return "pts";
    case QueryKind::condorcet_nec: return "condorcet-nec";
    case QueryKind::condorcet_pos: return "condorcet-pos";
  }
  return "?";
}

QuerySpec validate_query(const Instance& instance, QuerySpec q) {
  const int m = instance.num_candidates();
  if (query_takes_candidate(q.kind)) {
    if (q.candidate < 0 || q.candidate >= m)
      fail(Errc::unknown_candidate, "query candidate out of range");
    if (q.kind == QueryKind::nw || q.kind == QueryKind::pw) q.k = 1;
    if (q.k < 1 || q.k > m)
      fail(Errc::validation_error, "k must lie in [1, m]");
  } else {
    if (q.set.empty() || static_cast<int>(q.set.size()) > m)
      fail(Errc::bad_set_size, "query set size must lie in [1, m]");
    std::vector<char> seen(m, 0);
    for (int c : q.set) {
      if (c < 0 || c >= m)
        fail(Errc::unknown_candidate, "set member out of range");
      if (seen[c]) fail(Errc::bad_set_size, "duplicate set member");
      seen[c] = 1;
    }
    q.k = static_cast<int>(q.set.size());
  }
  return q;
}

std::vector<std::vector<int>> linear_extensions(const PartialOrder& p) {
  std::vector<std::vector<int>> out;
  for_each_linear_extension(p, [&](const std::vector<int>& order) {
    out.push_back(order);
    return false;
  });
  return out;
}

std::optional<std::vector<std::vector<int>>> linear_extensions_bounded(
    const PartialOrder& p, std::int64_t limit) {
  std::vector<std::vector<int>> out;
  bool exceeded = for_each_linear_extension(p, [&](const std::vector<int>& order) {
    if (static_cast<std::int64_t>(out.size()) >= limit) return true;
    out.push_back(order);
    return false;
  });
  if (exceeded) return std::nullopt;
  return out;
}

std::int64_t count_linear_extensions(const PartialOrder& p,
                                     std::int64_t limit) {
  std::int64_t n = 0;
  for_each_linear_extension(p, [&](const std::vector<int>&) {
    return ++n > limit;
  });
  return n;
}

namespace {

// One voter group prepared for the walk: the distinct score contributions
// of a single copy, with a representative extension each, plus the number
// of interchangeable copies.
struct GroupChoices {
  Mult copies = 1;
  std::vector<std::vector<Score>> contribs;
  std::vector<std::vector<int>> reps;
};

constexpr std::int64_t kBoundSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kBoundSaturated / b) return kBoundSaturated;
  return a * b;
}

// C(w + b - 1, b - 1): multisets of size w over b branches, saturating.
std::int64_t multiset_count(Mult w, std::int64_t b) {
  std::int64_t result = 1;
  // C(w + b - 1, b - 1) = prod_{i=1..b-1} (w + i) / i
  for (std::int64_t i = 1; i < b; ++i) {
    result = sat_mul(result, w + i);
    if (result == kBoundSaturated) return kBoundSaturated;
    result /= i;
  }
  return result;
}

// Distinct per-copy contributions of one group, projected to `tracked`
// (full candidate set when empty). Throws too_large when a single order
// has more than `limit` extensions.
GroupChoices prepare_group(const VoterGroup& group,
                           const std::vector<Score>& vec,
                           const std::vector<int>& tracked,
                           std::int64_t limit, bool keep_reps) {
  const int m = group.order.size();
  GroupChoices out;
  out.copies = group.mult;

  std::map<std::vector<Score>, std::vector<int>> distinct;
  std::int64_t seen = 0;
  bool exceeded =
      for_each_linear_extension(group.order, [&](const std::vector<int>& order) {
        if (++seen > limit) return true;
        std::vector<Score> contrib;
        if (tracked.empty()) {
          contrib.assign(m, 0);
          for (int pos = 0; pos < m; ++pos) contrib[order[pos]] = vec[pos];
        } else {
          std::vector<int> position(m, 0);
          for (int pos = 0; pos < m; ++pos) position[order[pos]] = pos;
          contrib.reserve(tracked.size());
          for (int c : tracked) contrib.push_back(vec[position[c]]);
        }
        // first hit is the lexicographically smallest representative
        distinct.emplace(std::move(contrib), order);
        return false;
      });
  if (exceeded)
    fail(Errc::too_large, "a voter's order has more than " +
                              std::to_string(limit) + " linear extensions");

  out.contribs.reserve(distinct.size());
  out.reps.reserve(distinct.size());
  for (auto& [contrib, rep] : distinct) {
    out.contribs.push_back(contrib);
    if (keep_reps) out.reps.push_back(rep);
  }
  return out;
}

struct Walker {
  std::vector<GroupChoices> groups;
  std::vector<Score> total;
  // counts[g][b]: copies of group g assigned to branch b; hit_counts is the
  // snapshot taken when a leaf stops the walk.
  std::vector<std::vector<Mult>> counts;
  std::vector<std::vector<Mult>> hit_counts;

  explicit Walker(std::size_t width) : total(width, 0) {}

  std::int64_t bound(std::int64_t cap) const {
    std::int64_t product = 1;
    for (const auto& g : groups) {
      product = sat_mul(product, multiset_count(g.copies,
                                                static_cast<std::int64_t>(
                                                    g.contribs.size())));
      if (product > cap) return kBoundSaturated;
    }
    return product;
  }

  template <class Leaf>
  bool walk(Leaf&& leaf) {
    counts.clear();
    for (const auto& g : groups)
      counts.emplace_back(g.contribs.size(), 0);
    return walk_group(0, leaf);
  }

 private:
  void add(const std::vector<Score>& contrib, Mult n) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += n * contrib[i];
  }

  template <class Leaf>
  bool walk_group(std::size_t g, Leaf&& leaf) {
    if (g == groups.size()) {
      if (!leaf(total)) return false;
      hit_counts = counts;
      return true;
    }
    return walk_branch(g, 0, groups[g].copies, leaf);
  }

  template <class Leaf>
  bool walk_branch(std::size_t g, std::size_t b, Mult remaining, Leaf&& leaf) {
    const auto& group = groups[g];
    if (b + 1 == group.contribs.size()) {
      counts[g][b] = remaining;
      add(group.contribs[b], remaining);
      bool stop = walk_group(g + 1, leaf);
      add(group.contribs[b], -remaining);
      counts[g][b] = 0;
      return stop;
    }
    // Weight the lexicographically smallest contributions first.
    for (Mult n = remaining; n >= 0; --n) {
      counts[g][b] = n;
      add(group.contribs[b], n);
      bool stop = walk_branch(g, b + 1, remaining - n, leaf);
      add(group.contribs[b], -n);
      counts[g][b] = 0;
      if (stop) return true;
    }
    return false;
  }
};

Walker make_walker(const Instance& instance, const std::vector<int>& tracked,
                   std::int64_t cap, bool keep_reps) {
  const std::size_t width =
      tracked.empty() ? instance.num_candidates() : tracked.size();
  Walker walker(width);
  walker.groups.reserve(instance.voters().size());
  for (const auto& group : instance.voters())
    walker.groups.push_back(prepare_group(group, instance.score_vector(),
                                          tracked, cap, keep_reps));
  if (walker.bound(cap) > cap)
    fail(Errc::too_large,
         "completion enumeration exceeds the cap of " + std::to_string(cap));
  return walker;
}

Completion completion_from_counts(const Walker& walker) {
  Completion out;
  out.groups.resize(walker.groups.size());
  for (std::size_t g = 0; g < walker.groups.size(); ++g) {
    const auto& group = walker.groups[g];
    for (std::size_t b = 0; b < group.contribs.size(); ++b) {
      if (walker.hit_counts[g][b] > 0)
        out.groups[g].push_back({group.reps[b], walker.hit_counts[g][b]});
    }
  }
  return out;
}

}  // namespace

std::optional<std::int64_t> oracle_enumeration_bound(const Instance& instance,
                                                     std::int64_t cap) {
  try {
    Walker walker = make_walker(instance, {}, cap, false);
    return walker.bound(cap);
  } catch (const Error& e) {
    if (e.code() == Errc::too_large) return std::nullopt;
    throw;
  }
}

OracleResult oracle_query(const Instance& instance, const QuerySpec& query_in,
                          std::int64_t cap) {
  const QuerySpec query = validate_query(instance, query_in);
  const int m = instance.num_candidates();
  std::vector<int> tie_rank(m);
  for (int c = 0; c < m; ++c) tie_rank[c] = instance.tie_rank(c);

  std::vector<char> members(m, 0);
  for (int c : query.set) members[c] = 1;

  // Condorcet committees are the `some`-policy set queries.
  const TiePolicy policy = (query.kind == QueryKind::condorcet_nec ||
                            query.kind == QueryKind::condorcet_pos)
                               ? TiePolicy::some
                               : query.policy;

  auto holds = [&](const std::vector<Score>& total) {
    if (query_takes_candidate(query.kind))
      return is_top_k_scores(total, tie_rank, query.candidate, query.k, policy);
    return is_topk_set_scores(total, tie_rank, members, policy);
  };

  Walker walker = make_walker(instance, {}, cap, true);
  const bool necessary = query_is_necessary(query.kind);

  OracleResult result;
  bool found = walker.walk([&](const std::vector<Score>& total) {
    return necessary ? !holds(total) : holds(total);
  });
  if (found) result.witness = completion_from_counts(walker);
  result.answer = necessary ? !found : found;
  return result;
}

std::vector<std::vector<Score>> oracle_score_set(const Instance& instance,
                                                 const std::vector<int>& S,
                                                 std::int64_t cap) {
  const int m = instance.num_candidates();
  if (S.empty()) fail(Errc::bad_set_size, "tracked sequence must be nonempty");
  std::vector<char> seen(m, 0);
  for (int c : S) {
    if (c < 0 || c >= m) fail(Errc::unknown_candidate, "tracked id out of range");
    if (seen[c]) fail(Errc::bad_set_size, "duplicate tracked candidate");
    seen[c] = 1;
  }

  Walker walker = make_walker(instance, S, cap, false);
  std::vector<std::vector<Score>> out;
  walker.walk([&](const std::vector<Score>& total) {
    out.push_back(total);
    return false;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RankBounds oracle_rank_bounds(const Instance& instance, std::int64_t cap) {
  const int m = instance.num_candidates();
  std::vector<int> tie_rank(m);
  for (int c = 0; c < m; ++c) tie_rank[c] = instance.tie_rank(c);

  RankBounds bounds;
  bounds.min_rank_given.assign(m, m + 1);
  bounds.max_rank_given.assign(m, 0);
  bounds.min_strict_above.assign(m, m + 1);
  bounds.max_strict_above.assign(m, -1);
  bounds.min_geq_others.assign(m, m + 1);
  bounds.max_geq_others.assign(m, -1);

  Walker walker = make_walker(instance, {}, cap, false);
  walker.walk([&](const std::vector<Score>& total) {
    for (int c = 0; c < m; ++c) {
      int rank = rank_given(total, tie_rank, c);
      int strict = count_strictly_above(total, c);
      int geq = count_geq_others(total, c);
      bounds.min_rank_given[c] = std::min(bounds.min_rank_given[c], rank);
      bounds.max_rank_given[c] = std::max(bounds.max_rank_given[c], rank);
      bounds.min_strict_above[c] = std::min(bounds.min_strict_above[c], strict);
      bounds.max_strict_above[c] = std::max(bounds.max_strict_above[c], strict);
      bounds.min_geq_others[c] = std::min(bounds.min_geq_others[c], geq);
      bounds.max_geq_others[c] = std::max(bounds.max_geq_others[c], geq);
    }
    return false;
  });
  return bounds;
}

}  // namespace topkvote
