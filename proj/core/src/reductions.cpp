#include "topkvote/reductions.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace topkvote {

namespace {

ScoringRule complementary_reversed(const ScoringRule& rule) {
  switch (rule.kind()) {
    case RuleKind::plurality: return ScoringRule::veto();
    case RuleKind::veto: return ScoringRule::plurality();
    case RuleKind::t_approval: return ScoringRule::t_veto(rule.t());
    case RuleKind::t_veto: return ScoringRule::t_approval(rule.t());
    case RuleKind::custom: {
      std::vector<Score> scores = rule.custom_scores();
      std::reverse(scores.begin(), scores.end());
      for (Score& s : scores) s = 1 - s;
      return ScoringRule::custom(std::move(scores));
    }
    case RuleKind::borda:
      break;
  }
  fail(Errc::non_binary_rule, "no complementary-reversed rule");
}

PartialOrder total_order(int m, const std::vector<int>& sequence) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(sequence.size());
  for (int c : sequence) blocks.push_back({c});
  return PartialOrder::partitioned(m, blocks);
}

std::string fresh_name(const std::vector<std::string>& taken,
                       std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end())
    base.insert(base.begin(), '_');
  return base;
}

}  // namespace

Instance reverse_instance(const Instance& instance) {
  if (!instance.rule().is_binary())
    fail(Errc::non_binary_rule, "reversal needs a rule with scores in {0,1}");

  std::vector<VoterGroup> voters;
  voters.reserve(instance.voters().size());
  for (const auto& group : instance.voters())
    voters.push_back({group.order.reversed(), group.mult});

  std::vector<int> tie(instance.tie().rbegin(), instance.tie().rend());
  return Instance::make(instance.candidate_names(),
                        complementary_reversed(instance.rule()),
                        std::move(voters), std::move(tie));
}

EmbedParams plurality_to_t_approval_params(int m, int t) {
  return {ScoringRule::t_approval(t), m + t - 1, t - 1, 1, 0};
}

EmbedParams veto_to_t_veto_params(int m, int t) {
  return {ScoringRule::t_veto(t), m + t - 1, 0, 1, 0};
}

Instance embed_instance(const Instance& instance, const EmbedParams& params) {
  const int m = instance.num_candidates();
  if (params.p < m || params.i < 0 || params.i > params.p - m || params.a <= 0)
    fail(Errc::containment_violated, "malformed containment parameters");

  const std::vector<Score>& source = instance.score_vector();
  const std::vector<Score> target = params.target.score_vector(params.p);
  for (int j = 0; j < m; ++j) {
    if (source[j] != params.a * target[params.i + j] + params.b)
      fail(Errc::containment_violated,
           "containment identity fails at position " + std::to_string(j + 1));
  }

  std::vector<std::string> names = instance.candidate_names();
  std::vector<int> leading, trailing;
  for (int d = 0; d < params.i; ++d) {
    names.push_back(fresh_name(names, "top_dummy" + std::to_string(d + 1)));
    leading.push_back(m + d);
  }
  for (int d = 0; d < params.p - params.i - m; ++d) {
    names.push_back(fresh_name(names, "bot_dummy" + std::to_string(d + 1)));
    trailing.push_back(m + params.i + d);
  }

  std::vector<int> originals(m);
  for (int c = 0; c < m; ++c) originals[c] = c;
  PartialOrder pinned =
      PartialOrder::partitioned(params.p, {leading, originals, trailing});

  std::vector<VoterGroup> voters;
  voters.reserve(instance.voters().size());
  for (const auto& group : instance.voters()) {
    PartialOrder widened = PartialOrder::from_pairs(params.p, group.order.pairs());
    voters.push_back({widened.union_with(pinned), group.mult});
  }

  std::vector<int> tie = leading;
  tie.insert(tie.end(), instance.tie().begin(), instance.tie().end());
  tie.insert(tie.end(), trailing.begin(), trailing.end());

  return Instance::make(std::move(names), params.target, std::move(voters),
                        std::move(tie));
}

std::vector<int> circular_vote(const std::vector<int>& a, int i) {
  if (i < 1 || i > static_cast<int>(a.size()))
    fail(Errc::index_out_of_range, "rotation index outside [1, |A|]");
  std::vector<int> out(a.begin() + (i - 1), a.end());
  out.insert(out.end(), a.begin(), a.begin() + (i - 1));
  return out;
}

namespace {

void validate_x3c(const SetCoverInstance& x3c, bool borda) {
  if (x3c.q < 1) fail(Errc::malformed_x3c, "q must be positive");
  if (x3c.edges.empty()) fail(Errc::malformed_x3c, "no edges");
  const int universe = 3 * x3c.q;
  const int m = static_cast<int>(x3c.edges.size());
  std::set<std::array<int, 3>> seen;
  std::vector<int> degree(universe, 0);
  for (auto edge : x3c.edges) {
    std::sort(edge.begin(), edge.end());
    if (edge[0] == edge[1] || edge[1] == edge[2])
      fail(Errc::malformed_x3c, "edge with repeated elements");
    for (int u : edge) {
      if (u < 0 || u >= universe)
        fail(Errc::malformed_x3c, "edge element outside the universe");
      ++degree[u];
    }
    if (!seen.insert(edge).second)
      fail(Errc::malformed_x3c, "duplicate edge");
  }
  for (int u = 0; u < universe; ++u) {
    // An uncovered element frees its voter to vote for arbitrary edges,
    // which breaks the equivalence with the cover question.
    if (degree[u] < 1)
      fail(Errc::malformed_x3c,
           "element " + std::to_string(u) + " is not covered by any edge");
    if (borda && m >= 2 && degree[u] > m - 1)
      fail(Errc::malformed_x3c,
           "element " + std::to_string(u) + " is covered by every edge");
  }
}

// Per-vote scores handed to the rotated edge sequence in one block of the
// equalizing profile: descending odd values, then the leftover slot. For
// odd m the values m and 0 would collide with the distinguished
// candidate's slot, so they shift to m-1 and 1.
std::vector<Score> edge_score_pattern(int m) {
  std::vector<Score> scores;
  scores.reserve(m);
  for (Score s = 2 * m - 1; s >= 3; s -= 2) scores.push_back(s);
  scores.push_back(0);
  if (m % 2 == 1 && m >= 3) {
    for (Score& s : scores) {
      if (s == m) s = m - 1;
      if (s == 0) s = 1;
    }
  }
  return scores;
}

}  // namespace

GeneratedQuery gen_x3c_ntw(const SetCoverInstance& x3c, RuleKind rule) {
  if (rule != RuleKind::plurality && rule != RuleKind::borda)
    fail(Errc::unsupported_rule, "X3C generator covers plurality and Borda");
  validate_x3c(x3c, rule == RuleKind::borda);

  const int q = x3c.q;
  const int universe = 3 * q;
  const int m = static_cast<int>(x3c.edges.size());

  std::vector<std::vector<int>> incident(universe);
  for (int e = 0; e < m; ++e)
    for (int u : x3c.edges[e]) incident[u].push_back(e);

  if (rule == RuleKind::plurality) {
    // Candidates: e1..em, then the distinguished candidate.
    const int cstar = m;
    std::vector<std::string> names;
    for (int e = 0; e < m; ++e) names.push_back("e" + std::to_string(e + 1));
    names.push_back("cstar");

    std::vector<int> all_edges(m);
    for (int e = 0; e < m; ++e) all_edges[e] = e;

    std::vector<VoterGroup> voters;
    for (int u = 0; u < universe; ++u) {
      std::vector<int> rest;
      for (int e = 0; e < m; ++e)
        if (std::find(incident[u].begin(), incident[u].end(), e) ==
            incident[u].end())
          rest.push_back(e);
      voters.push_back({PartialOrder::partitioned(
                            m + 1, {incident[u], rest, {cstar}}),
                        1});
    }
    voters.push_back({total_order(m + 1, block_linearization(
                                             m + 1, {{cstar}, all_edges})),
                      3});

    std::vector<int> tie = block_linearization(m + 1, {all_edges, {cstar}});
    Instance instance = Instance::make(std::move(names),
                                       ScoringRule::plurality(),
                                       std::move(voters), std::move(tie));
    QuerySpec query{QueryKind::ntw, cstar, {}, q, TiePolicy::given};
    return {std::move(instance), query};
  }

  // Borda: candidates e1..em, cstar, d1..d(m-1); 2m in total.
  const int total = 2 * m;
  const int cstar = m;
  std::vector<std::string> names;
  for (int e = 0; e < m; ++e) names.push_back("e" + std::to_string(e + 1));
  names.push_back("cstar");
  std::vector<int> dummies;
  for (int d = 0; d < m - 1; ++d) {
    names.push_back("d" + std::to_string(d + 1));
    dummies.push_back(m + 1 + d);
  }
  std::vector<int> all_edges(m);
  for (int e = 0; e < m; ++e) all_edges[e] = e;

  std::vector<VoterGroup> voters;

  // Part one: an incomplete voter per universe element. Only covering
  // edges may reach the top score; the rest sit below m other candidates.
  for (int u = 0; u < universe; ++u) {
    const int deg = static_cast<int>(incident[u].size());
    std::vector<int> low_dummies(dummies.begin(), dummies.begin() + (m - deg));
    std::vector<int> mixed(dummies.begin() + (m - deg), dummies.end());
    for (int e = 0; e < m; ++e)
      if (std::find(incident[u].begin(), incident[u].end(), e) ==
          incident[u].end())
        mixed.push_back(e);
    voters.push_back({PartialOrder::partitioned(
                          total, {incident[u], low_dummies, mixed, {cstar}}),
                      1});
  }

  // Part two: rotation blocks that leave every edge exactly one cover's
  // worth of score behind the distinguished candidate.
  Mult s_cvr = 3 * (2 * static_cast<Mult>(m) - 1);
  for (int i = 1; i <= q - 1; ++i) s_cvr += 3 * (m - i);

  const std::vector<Score> pattern = edge_score_pattern(m);
  for (int i = 1; i <= m; ++i) {
    const std::vector<int> rotation = circular_vote(all_edges, i);
    std::vector<int> order(total, -1);
    auto place = [&](int candidate, Score score) {
      const int pos = static_cast<int>(2 * m - score);  // 1-based
      if (order[pos - 1] != -1)
        fail(Errc::validation_error, "rotation block position clash");
      order[pos - 1] = candidate;
    };
    for (int j = 0; j < m; ++j) place(rotation[j], pattern[j]);
    place(cstar, m);
    std::size_t next_dummy = 0;
    for (int pos = 0; pos < total; ++pos)
      if (order[pos] == -1) order[pos] = dummies[next_dummy++];
    voters.push_back({total_order(total, order), s_cvr});
  }

  // Part three: rotations of (e1..em, cstar) that push every dummy far
  // below the rest regardless of how part one completes.
  const Mult anchor = 4 * (3 * static_cast<Mult>(q) + s_cvr);
  std::vector<int> edges_and_cstar = all_edges;
  edges_and_cstar.push_back(cstar);
  for (int i = 1; i <= m + 1; ++i) {
    std::vector<int> order = circular_vote(edges_and_cstar, i);
    order.insert(order.end(), dummies.begin(), dummies.end());
    voters.push_back({total_order(total, order), anchor});
  }

  std::vector<int> tie =
      block_linearization(total, {all_edges, {cstar}, dummies});
  Instance instance = Instance::make(std::move(names), ScoringRule::borda(),
                                     std::move(voters), std::move(tie));
  QuerySpec query{QueryKind::ntw, cstar, {}, q, TiePolicy::given};
  return {std::move(instance), query};
}

GeneratedQuery gen_domset_ptw(const GraphInstance& g) {
  const int n = g.vertices;
  if (n < 1) fail(Errc::malformed_graph, "graph needs at least one vertex");
  if (g.budget < 1 || g.budget > n)
    fail(Errc::malformed_graph, "budget must lie in [1, vertices]");
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (auto [a, b] : g.edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Errc::malformed_graph, "edge endpoint out of range");
    if (a == b) fail(Errc::malformed_graph, "self loop");
    if (!seen.insert(std::minmax(a, b)).second)
      fail(Errc::malformed_graph, "duplicate edge");
    adjacent[a][b] = adjacent[b][a] = 1;
  }

  const int cstar = n;
  std::vector<std::string> names;
  for (int u = 0; u < n; ++u) names.push_back("u" + std::to_string(u + 1));
  names.push_back("cstar");

  std::vector<VoterGroup> voters;
  for (int u = 0; u < n; ++u) {
    std::vector<int> closed, rest;
    for (int v = 0; v < n; ++v)
      (v == u || adjacent[u][v] ? closed : rest).push_back(v);
    voters.push_back({PartialOrder::partitioned(
                          n + 1, {closed, rest, {cstar}}),
                      1});
  }

  std::vector<int> vertices(n);
  for (int u = 0; u < n; ++u) vertices[u] = u;
  std::vector<int> tie = block_linearization(n + 1, {{cstar}, vertices});

  Instance instance = Instance::make(std::move(names), ScoringRule::plurality(),
                                     std::move(voters), std::move(tie));
  // A size-b dominating set lets the voters concentrate on b vertices, so
  // the distinguished candidate is outranked by at most b of them: top-(b+1).
  QuerySpec query{QueryKind::ptw, cstar, {}, g.budget + 1, TiePolicy::given};
  return {std::move(instance), query};
}

GeneratedQuery gen_pw_to_ptwk(const Instance& source, int c, int k) {
  const int m = source.num_candidates();
  if (c < 0 || c >= m) fail(Errc::unknown_candidate, "candidate out of range");
  if (k < 1) fail(Errc::validation_error, "k must be positive");

  const int wide = m + k - 1;
  const std::vector<Score>& base = source.score_vector();
  const std::vector<Score> widened = source.rule().score_vector(wide);

  int split = -1;
  for (int t = 0; t + m <= wide && t <= k - 1; ++t) {
    if (std::equal(base.begin(), base.end(), widened.begin() + t)) {
      split = t;
      break;
    }
  }
  if (split < 0)
    fail(Errc::not_strongly_pure,
         "score vector at m' = " + std::to_string(wide) +
             " does not contain the one at m as a boundary segment");

  std::vector<std::string> names = source.candidate_names();
  std::vector<int> dummies;
  for (int d = 0; d < k - 1; ++d) {
    names.push_back(fresh_name(names, "d" + std::to_string(d + 1)));
    dummies.push_back(m + d);
  }
  std::vector<int> leading(dummies.begin(), dummies.begin() + split);
  std::vector<int> trailing(dummies.begin() + split, dummies.end());
  std::vector<int> originals(m);
  for (int j = 0; j < m; ++j) originals[j] = j;

  PartialOrder pinned =
      PartialOrder::partitioned(wide, {leading, originals, trailing});

  std::vector<VoterGroup> voters;
  for (const auto& group : source.voters()) {
    PartialOrder widened_order =
        PartialOrder::from_pairs(wide, group.order.pairs());
    voters.push_back({widened_order.union_with(pinned), group.mult});
  }

  // Equalizing blocks: all rotations of the dummies over all rotations of
  // the original candidates, weighted so the dummies stay on top.
  if (k > 1) {
    const Mult copies = source.num_voters() * widened.front();
    for (int i = 1; i <= k - 1; ++i) {
      const std::vector<int> dummy_rotation = circular_vote(dummies, i);
      for (int j = 1; j <= m; ++j) {
        std::vector<int> order = dummy_rotation;
        const std::vector<int> original_rotation = circular_vote(originals, j);
        order.insert(order.end(), original_rotation.begin(),
                     original_rotation.end());
        voters.push_back({total_order(wide, order), copies});
      }
    }
  }

  std::vector<int> others;
  for (int j = 0; j < m; ++j)
    if (j != c) others.push_back(j);
  std::vector<int> tie = block_linearization(wide, {dummies, {c}, others});

  Instance instance = Instance::make(std::move(names), source.rule(),
                                     std::move(voters), std::move(tie));
  QuerySpec query{QueryKind::ptw, c, {}, k, TiePolicy::given};
  return {std::move(instance), query};
}

bool solve_x3c(const SetCoverInstance& x3c) {
  const int universe = 3 * x3c.q;
  if (universe > 20) fail(Errc::too_large, "brute force limited to 3q <= 20");
  const int m = static_cast<int>(x3c.edges.size());

  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(pick.size()) == x3c.q) {
      std::vector<char> covered(universe, 0);
      for (int e : pick)
        for (int u : x3c.edges[e]) {
          if (covered[u]) return false;
          covered[u] = 1;
        }
      return std::find(covered.begin(), covered.end(), 0) == covered.end();
    }
    for (int e = start; e < m; ++e) {
      pick.push_back(e);
      if (self(self, e + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

bool solve_domset(const GraphInstance& g) {
  const int n = g.vertices;
  if (n > 20) fail(Errc::too_large, "brute force limited to 20 vertices");
  std::vector<unsigned> closed(n, 0);
  for (int u = 0; u < n; ++u) closed[u] = 1u << u;
  for (auto [a, b] : g.edges) {
    closed[a] |= 1u << b;
    closed[b] |= 1u << a;
  }
  const unsigned all = (n == 32) ? ~0u : ((1u << n) - 1);
  for (unsigned mask = 0; mask <= all; ++mask) {
    if (__builtin_popcount(mask) > g.budget) continue;
    unsigned dominated = 0;
    for (int u = 0; u < n; ++u)
      if (mask & (1u << u)) dominated |= closed[u];
    if (dominated == all) return true;
  }
  return false;
}

}  // namespace topkvote
