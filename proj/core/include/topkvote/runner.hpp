#pragma once

#include <optional>
#include <string>

#include "topkvote/oracle.hpp"
#include "topkvote/scorespace.hpp"

namespace topkvote {

enum class Method { auto_select, exact, oracle };

// Default oracle cap, overridable through the TOPKVOTE_CAP environment
// variable.
std::int64_t default_oracle_cap();

struct RunConfig {
  Method method = Method::auto_select;
  std::int64_t cap = default_oracle_cap();
  ScoreSpaceLimits space;
};

struct RunResult {
  bool answer = false;
  std::optional<Completion> witness;
  std::string method_used;  // "exact/scorespace", "exact/flows", "oracle"
  std::int64_t elapsed_ms = 0;
};

// Dispatches a query to the exact algorithms where they apply (scorespace
// for necessary-side queries under any rule, flows for possible-side
// queries under plurality/veto) and otherwise, or on SpaceTooLarge under
// auto, to the brute-force oracle within the cap.
RunResult run_query(const Instance& instance, const QuerySpec& query,
                    const RunConfig& config = {});

}  // namespace topkvote
