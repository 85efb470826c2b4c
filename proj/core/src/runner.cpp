#include "topkvote/runner.hpp"

#include <chrono>
#include <cstdlib>

#include "topkvote/flows.hpp"
#include "topkvote/scorespace.hpp"

namespace topkvote {

std::int64_t default_oracle_cap() {
  if (const char* env = std::getenv("TOPKVOTE_CAP")) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return kDefaultOracleCap;
}

namespace {

bool exact_covers(const Instance& instance, const QuerySpec& query) {
  switch (query.kind) {
    case QueryKind::nw:
    case QueryKind::ntw:
    case QueryKind::nts:
      return true;  // any rule; polynomial scores enforced by the space bound
    case QueryKind::pw:
    case QueryKind::ptw:
    case QueryKind::pts:
    case QueryKind::condorcet_nec:
    case QueryKind::condorcet_pos: {
      const RuleKind kind = instance.rule().kind();
      return kind == RuleKind::plurality || kind == RuleKind::veto;
    }
  }
  return false;
}

RunResult run_exact(const Instance& instance, const QuerySpec& query,
                    const ScoreSpaceLimits& space) {
  RunResult out;
  switch (query.kind) {
    case QueryKind::nw:
    case QueryKind::ntw: {
      NtwResult r = ntw_fixed_k(instance, query.candidate, query.k,
                                query.policy, space);
      out.answer = r.answer;
      out.witness = std::move(r.counterexample);
      out.method_used = "exact/scorespace";
      return out;
    }
    case QueryKind::nts: {
      auto violation = topk_set_violation(instance, query.set, query.policy);
      out.answer = !violation.has_value();
      if (violation)
        out.witness = max_defeat_margin_witness(instance, violation->first,
                                                violation->second);
      out.method_used = "exact/scorespace";
      return out;
    }
    case QueryKind::pw:
    case QueryKind::ptw: {
      FlowResult r = ptw_fixed_k(instance, query.candidate, query.k,
                                 query.policy);
      out.answer = r.answer;
      out.witness = std::move(r.witness);
      out.method_used = "exact/flows";
      return out;
    }
    case QueryKind::pts: {
      FlowResult r = possible_topk_set(instance, query.set, query.policy);
      out.answer = r.answer;
      out.witness = std::move(r.witness);
      out.method_used = "exact/flows";
      return out;
    }
    case QueryKind::condorcet_pos: {
      FlowResult r = possible_topk_set(instance, query.set, TiePolicy::some);
      out.answer = r.answer;
      out.witness = std::move(r.witness);
      out.method_used = "exact/flows";
      return out;
    }
    case QueryKind::condorcet_nec: {
      out.answer = condorcet_committee(instance, query.set,
                                       CommitteeMode::necessary);
      if (!out.answer) {
        auto violation =
            topk_set_violation(instance, query.set, TiePolicy::some);
        if (violation)
          out.witness = max_defeat_margin_witness(instance, violation->first,
                                                  violation->second);
      }
      out.method_used = "exact/flows";
      return out;
    }
  }
  fail(Errc::no_exact_method, "unreachable query kind");
}

RunResult run_oracle(const Instance& instance, const QuerySpec& query,
                     std::int64_t cap) {
  OracleResult r = oracle_query(instance, query, cap);
  RunResult out;
  out.answer = r.answer;
  out.witness = std::move(r.witness);
  out.method_used = "oracle";
  return out;
}

}  // namespace

RunResult run_query(const Instance& instance, const QuerySpec& query_in,
                    const RunConfig& config) {
  const QuerySpec query = validate_query(instance, query_in);
  const auto start = std::chrono::steady_clock::now();

  RunResult out;
  switch (config.method) {
    case Method::exact:
      if (!exact_covers(instance, query))
        fail(Errc::no_exact_method,
             std::string("no exact algorithm for ") +
                 query_kind_name(query.kind) + " under " +
                 instance.rule().name());
      out = run_exact(instance, query, config.space);
      break;
    case Method::oracle:
      out = run_oracle(instance, query, config.cap);
      break;
    case Method::auto_select:
      if (exact_covers(instance, query)) {
        try {
          out = run_exact(instance, query, config.space);
        } catch (const Error& e) {
          if (e.code() != Errc::space_too_large) throw;
          out = run_oracle(instance, query, config.cap);
        }
      } else {
        out = run_oracle(instance, query, config.cap);
      }
      break;
  }

  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

}  // namespace topkvote
