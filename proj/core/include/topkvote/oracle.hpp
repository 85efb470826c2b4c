#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topkvote/instance.hpp"
#include "topkvote/standings.hpp"

namespace topkvote {

enum class QueryKind { nw, pw, ntw, ptw, nts, pts, condorcet_nec, condorcet_pos };

bool query_is_necessary(QueryKind kind);
bool query_takes_candidate(QueryKind kind);
bool query_takes_set(QueryKind kind);
const char* query_kind_name(QueryKind kind);

struct QuerySpec {
  QueryKind kind = QueryKind::nw;
  int candidate = -1;       // for nw/pw/ntw/ptw
  std::vector<int> set;     // for nts/pts/condorcet_*
  int k = 1;                // forced to 1 for nw/pw, |set| for set queries
  TiePolicy policy = TiePolicy::given;
};

// Checks the query against the instance (candidate range, set size and
// distinctness, k range) and normalizes k for nw/pw and set queries.
QuerySpec validate_query(const Instance& instance, QuerySpec q);

inline constexpr std::int64_t kDefaultOracleCap = 1'000'000;

// ---- linear extension enumeration -----------------------------------------

// Visits every linear extension of P exactly once, in lexicographic order
// of the candidate sequences (minimal-element branching, ascending ids).
// The visitor returns true to stop early.
template <class Visitor>
bool for_each_linear_extension(const PartialOrder& p, Visitor&& visit) {
  const int m = p.size();
  std::vector<int> preds_left(m, 0);
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x)
      if (p.prefers(x, y)) ++preds_left[y];
  std::vector<int> prefix;
  prefix.reserve(m);
  std::vector<char> used(m, 0);

  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(prefix.size()) == m) return visit(prefix);
    for (int c = 0; c < m; ++c) {
      if (used[c] || preds_left[c] > 0) continue;
      used[c] = 1;
      prefix.push_back(c);
      for (int y = 0; y < m; ++y)
        if (p.prefers(c, y)) --preds_left[y];
      if (self(self)) return true;
      for (int y = 0; y < m; ++y)
        if (p.prefers(c, y)) ++preds_left[y];
      prefix.pop_back();
      used[c] = 0;
    }
    return false;
  };
  return rec(rec);
}

std::vector<std::vector<int>> linear_extensions(const PartialOrder& p);

// Extensions up to `limit`; nullopt when there are more than that.
std::optional<std::vector<std::vector<int>>> linear_extensions_bounded(
    const PartialOrder& p, std::int64_t limit);

std::int64_t count_linear_extensions(const PartialOrder& p,
                                     std::int64_t limit);

// ---- brute-force query evaluation ------------------------------------------
//
// The oracle walks the whole completion space. Completions are grouped by
// the score contribution they hand each candidate: two extensions of one
// voter's order with identical contribution vectors are interchangeable
// for every query here, so only distinct contributions branch (the
// lexicographically smallest extension is kept as the representative).
// Copies of one voter group are likewise interchangeable, so the walk
// enumerates multisets of contributions per group, not tuples.

struct OracleResult {
  bool answer = false;
  // For a possible-query that holds: a certifying completion. For a
  // necessary-query that fails: a counterexample completion.
  std::optional<Completion> witness;
};

// Number of leaves the walk would visit, or nullopt when it exceeds cap.
std::optional<std::int64_t> oracle_enumeration_bound(const Instance& instance,
                                                     std::int64_t cap);

// Throws too_large when the enumeration bound exceeds cap.
OracleResult oracle_query(const Instance& instance, const QuerySpec& query,
                          std::int64_t cap = kDefaultOracleCap);

// Exactly the set of jointly achievable score vectors of the candidates in
// S over all completions, sorted lexicographically.
std::vector<std::vector<Score>> oracle_score_set(const Instance& instance,
                                                 const std::vector<int>& S,
                                                 std::int64_t cap = kDefaultOracleCap);

// Per-candidate extremes over all achievable total score vectors, enough
// to answer every NTW/PTW query on the instance in one walk:
//   NTW(c,k,given)  <=>  max_rank_given[c] <= k
//   PTW(c,k,given)  <=>  min_rank_given[c] <= k
//   NTW(c,k,some)   <=>  max_strict_above[c] < k      (and so on)
struct RankBounds {
  std::vector<int> min_rank_given, max_rank_given;
  std::vector<int> min_strict_above, max_strict_above;
  std::vector<int> min_geq_others, max_geq_others;
};

RankBounds oracle_rank_bounds(const Instance& instance,
                              std::int64_t cap = kDefaultOracleCap);

}  // namespace topkvote
