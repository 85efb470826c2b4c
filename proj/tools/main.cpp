// Command-line front end: `topkvote query` evaluates a winner-determination
// query on an instance file, `topkvote gen` produces instances from the
// built-in hardness-reduction generators and transforms.
//
// Exit codes for `query`: 0 = answer true, 1 = answer false, 2 = error.

#include <algorithm>
#include <array>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topkvote/io.hpp"
#include "topkvote/reductions.hpp"
#include "topkvote/runner.hpp"

namespace {

using namespace topkvote;

QueryKind parse_kind(const std::string& name) {
  if (name == "nw") return QueryKind::nw;
  if (name == "pw") return QueryKind::pw;
  if (name == "ntw") return QueryKind::ntw;
  if (name == "ptw") return QueryKind::ptw;
  if (name == "nts") return QueryKind::nts;
  if (name == "pts") return QueryKind::pts;
  if (name == "condorcet-nec") return QueryKind::condorcet_nec;
  if (name == "condorcet-pos") return QueryKind::condorcet_pos;
  fail(Errc::validation_error, "unknown query kind '" + name + "'");
}

TiePolicy parse_policy(const std::string& name) {
  if (name == "given") return TiePolicy::given;
  if (name == "some") return TiePolicy::some;
  if (name == "every") return TiePolicy::every;
  fail(Errc::validation_error, "unknown tie policy '" + name + "'");
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::auto_select;
  if (name == "exact") return Method::exact;
  if (name == "oracle") return Method::oracle;
  fail(Errc::validation_error, "unknown method '" + name + "'");
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : csv) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

struct QueryArgs {
  std::string instance_path;
  std::string kind = "nw";
  std::string candidate;
  std::string set;
  int k = 1;
  std::string policy = "given";
  std::string method = "auto";
  std::int64_t cap = default_oracle_cap();
  std::string output;
};

int run_query_command(const QueryArgs& args) {
  Instance instance = parse_instance_file(args.instance_path);

  QuerySpec query;
  query.kind = parse_kind(args.kind);
  query.policy = parse_policy(args.policy);
  query.k = args.k;
  if (query_takes_candidate(query.kind)) {
    if (args.candidate.empty())
      fail(Errc::validation_error, "--candidate required for this query");
    query.candidate = instance.candidate_id(args.candidate);
  } else {
    if (args.set.empty())
      fail(Errc::validation_error, "--set required for this query");
    for (const std::string& name : split_names(args.set))
      query.set.push_back(instance.candidate_id(name));
  }

  RunConfig config;
  config.method = parse_method(args.method);
  config.cap = args.cap;

  RunResult result = run_query(instance, query, config);
  emit_result(serialize_result(result, instance), args.output);
  return result.answer ? 0 : 1;
}

struct GenArgs {
  std::string family;
  std::string out;
  unsigned long long seed = 1;
  int q = 1;
  int num_edges = 1;
  int vertices = 1;
  int k = 1;
  std::string instance_path;
  std::string candidate;
};

SetCoverInstance random_x3c(std::mt19937_64& rng, int q, int num_edges,
                            bool borda) {
  const int universe = 3 * q;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    SetCoverInstance x3c;
    x3c.q = q;
    std::set<std::array<int, 3>> chosen;
    while (static_cast<int>(chosen.size()) < num_edges) {
      std::array<int, 3> edge;
      edge[0] = static_cast<int>(rng() % universe);
      do edge[1] = static_cast<int>(rng() % universe); while (edge[1] == edge[0]);
      do edge[2] = static_cast<int>(rng() % universe);
      while (edge[2] == edge[0] || edge[2] == edge[1]);
      std::sort(edge.begin(), edge.end());
      chosen.insert(edge);
    }
    x3c.edges.assign(chosen.begin(), chosen.end());
    std::vector<int> degree(universe, 0);
    for (const auto& edge : x3c.edges)
      for (int u : edge) ++degree[u];
    bool ok = true;
    for (int u = 0; u < universe && ok; ++u) {
      if (degree[u] < 1) ok = false;
      if (borda && num_edges > 1 && degree[u] > num_edges - 1) ok = false;
    }
    if (ok) return x3c;
  }
  fail(Errc::malformed_x3c,
       "could not sample a valid X3C instance with these parameters");
}

GraphInstance random_graph(std::mt19937_64& rng, int vertices, int num_edges,
                           int budget) {
  const int max_edges = vertices * (vertices - 1) / 2;
  if (num_edges > max_edges)
    fail(Errc::malformed_graph, "more edges than a simple graph allows");
  GraphInstance g;
  g.vertices = vertices;
  g.budget = budget;
  std::set<std::pair<int, int>> chosen;
  while (static_cast<int>(chosen.size()) < num_edges) {
    int a = static_cast<int>(rng() % vertices);
    int b = static_cast<int>(rng() % vertices);
    if (a == b) continue;
    chosen.insert(std::minmax(a, b));
  }
  g.edges.assign(chosen.begin(), chosen.end());
  return g;
}

int run_gen_command(const GenArgs& args) {
  std::mt19937_64 rng(args.seed);
  nlohmann::json meta;
  meta["family"] = args.family;

  GeneratedQuery generated{Instance::make({"a", "b"}, ScoringRule::plurality(),
                                          {{PartialOrder(2), 1}}, {0, 1}),
                           {}};
  bool has_query = true;

  if (args.family == "x3c-plurality" || args.family == "x3c-borda") {
    const bool borda = args.family == "x3c-borda";
    SetCoverInstance x3c = random_x3c(rng, args.q, args.num_edges, borda);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& edge : x3c.edges) edges.push_back(edge);
    meta["x3c"] = {{"q", x3c.q}, {"edges", edges}};
    if (3 * x3c.q <= 20) meta["np_answer"] = solve_x3c(x3c);
    generated = gen_x3c_ntw(x3c, borda ? RuleKind::borda : RuleKind::plurality);
  } else if (args.family == "domset") {
    GraphInstance g = random_graph(rng, args.vertices, args.num_edges, args.k);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    meta["graph"] = {{"vertices", g.vertices}, {"edges", edges},
                     {"budget", g.budget}};
    if (g.vertices <= 20) meta["np_answer"] = solve_domset(g);
    generated = gen_domset_ptw(g);
  } else if (args.family == "pw-embed") {
    Instance source = parse_instance_file(args.instance_path);
    int c = source.candidate_id(args.candidate);
    generated = gen_pw_to_ptwk(source, c, args.k);
  } else if (args.family == "reverse") {
    Instance source = parse_instance_file(args.instance_path);
    generated.instance = reverse_instance(source);
    has_query = false;
    meta["note"] =
        "top-k questions on the source map to complemented top-(m-k) "
        "questions on this instance";
  } else {
    fail(Errc::validation_error, "unknown family '" + args.family + "'");
  }

  if (args.out.empty()) {
    std::cout << serialize_instance(generated.instance);
  } else {
    write_instance_file(generated.instance, args.out);
    meta["instance"] = args.out;
  }
  if (has_query) {
    meta["query"] = {
        {"query", query_kind_name(generated.query.kind)},
        {"candidate",
         generated.instance.candidate_name(generated.query.candidate)},
        {"k", generated.query.k},
        {"tie-policy", "given"},
    };
  }
  std::cerr << meta.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact necessary/possible top-k winner queries over partial "
               "voting profiles"};
  app.require_subcommand(1);

  QueryArgs query_args;
  CLI::App* query = app.add_subcommand("query", "Evaluate a query on an instance file");
  query->add_option("--instance", query_args.instance_path, "Instance file (JSON)")
      ->required();
  query->add_option("--query", query_args.kind,
                    "One of nw,pw,ntw,ptw,nts,pts,condorcet-nec,condorcet-pos")
      ->required();
  query->add_option("--candidate", query_args.candidate, "Candidate name");
  query->add_option("--set", query_args.set, "Comma-separated candidate names");
  query->add_option("--k", query_args.k, "Rank bound for ntw/ptw");
  query->add_option("--tie-policy", query_args.policy, "given|some|every");
  query->add_option("--method", query_args.method, "auto|exact|oracle");
  query->add_option("--cap", query_args.cap,
                    "Completion-enumeration cap for the oracle");
  query->add_option("--output", query_args.output,
                    "Write the result record here instead of stdout");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate reduction instances");
  gen->add_option("--family", gen_args.family,
                  "x3c-plurality|x3c-borda|domset|pw-embed|reverse")
      ->required();
  gen->add_option("--out", gen_args.out, "Instance file to write (default stdout)");
  gen->add_option("--seed", gen_args.seed, "Seed for random generation");
  gen->add_option("--q", gen_args.q, "X3C: number of cover sets (universe 3q)");
  gen->add_option("--num-edges", gen_args.num_edges,
                  "X3C: number of 3-sets / domset: number of graph edges");
  gen->add_option("--vertices", gen_args.vertices, "domset: vertex count");
  gen->add_option("--k", gen_args.k,
                  "domset: dominating-set budget / pw-embed: target k");
  gen->add_option("--instance", gen_args.instance_path,
                  "pw-embed/reverse: source instance file");
  gen->add_option("--candidate", gen_args.candidate,
                  "pw-embed: distinguished candidate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (query->parsed()) return run_query_command(query_args);
    if (gen->parsed()) return run_gen_command(gen_args);
  } catch (const topkvote::Error& e) {
    topkvote::emit_result(
        topkvote::serialize_error(topkvote::errc_name(e.code()), e.what()),
        query->parsed() ? query_args.output : std::string{});
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
