#pragma once

#include <array>
#include <vector>

#include "topkvote/instance.hpp"
#include "topkvote/oracle.hpp"

namespace topkvote {

// Exact cover by 3-sets over a universe of 3q elements (0-based ids).
struct SetCoverInstance {
  int q = 1;
  std::vector<std::array<int, 3>> edges;
};

// Simple undirected graph with a dominating-set budget.
struct GraphInstance {
  int vertices = 1;
  std::vector<std::pair<int, int>> edges;
  int budget = 1;
};

// Reverses every voter order and the tie order, and swaps the binary rule
// for its complementary-reversed counterpart (plurality <-> veto,
// t-approval <-> t-veto). Ranks map to m+1-rank, so top-k questions map to
// complemented top-(m-k) questions on the result.
Instance reverse_instance(const Instance& instance);

// Embedding of a rule into a larger one whose score vector contains an
// affine image of the original: s(m, j) = a * s'(p, i + j) + b for all j.
struct EmbedParams {
  ScoringRule target = ScoringRule::plurality();
  int p = 0;       // target candidate count
  int i = 0;       // leading dummy count; top-k maps to top-(k+i)
  Score a = 1;     // scale (positive)
  Score b = 0;     // offset
};

EmbedParams plurality_to_t_approval_params(int m, int t);
EmbedParams veto_to_t_veto_params(int m, int t);

// Adds i leading and p-i-m trailing dummy candidates pinned around the
// original profile; validates the containment identity numerically at this
// m (containment_violated otherwise).
Instance embed_instance(const Instance& instance, const EmbedParams& params);

// (a_i, a_{i+1}, ..., a_t, a_1, ..., a_{i-1}) for 1-based i.
std::vector<int> circular_vote(const std::vector<int>& a, int i);

struct GeneratedQuery {
  Instance instance;
  QuerySpec query;
};

// X3C -> necessary top-q winner. The cover exists iff the query answers
// false. Supported rules: plurality and Borda (the latter via circular
// voting blocks carried as multiplicities).
GeneratedQuery gen_x3c_ntw(const SetCoverInstance& x3c, RuleKind rule);

// Dominating set -> possible top-k winner under plurality. A dominating
// set of size <= budget exists iff the query answers true. The emitted
// query asks for top-(budget+1): a set of size b dominates exactly when
// the distinguished candidate can be outranked by at most b vertices.
GeneratedQuery gen_domset_ptw(const GraphInstance& g);

// Possible winner -> possible top-k winner for strongly pure rules: k-1
// dummies plus circular-block padding voters. The source candidate is a
// possible co-winner iff the target query answers true.
GeneratedQuery gen_pw_to_ptwk(const Instance& source, int c, int k);

// Brute-force deciders for the source problems, for labeling fixtures.
bool solve_x3c(const SetCoverInstance& x3c);
bool solve_domset(const GraphInstance& g);

}  // namespace topkvote
