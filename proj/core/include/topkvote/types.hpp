#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace topkvote {

// Scores and multiplicities can get large in generated instances (copy
// counts in the thousands times per-position scores), so everything that
// accumulates uses 64 bits.
using Score = std::int64_t;
using Mult = std::int64_t;

// How tie-breaking is quantified when asking whether a candidate is a
// top-k winner: against the instance's tie order, against at least one
// tie order, or against every tie order.
enum class TiePolicy { given, some, every };

enum class Errc {
  degenerate_rule,
  unsupported_m,
  cyclic_order,
  overlapping_blocks,
  incomplete_cover,
  invalid_completion,
  unknown_candidate,
  too_large,
  conflicting_constraints,
  space_too_large,
  bad_set_size,
  unsupported_rule,
  malformed_problem,
  non_binary_rule,
  containment_violated,
  malformed_x3c,
  malformed_graph,
  index_out_of_range,
  not_strongly_pure,
  parse_error,
  validation_error,
  no_exact_method,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

// One bundle of identical complete votes. A completion assigns each voter
// group a list of these; groups whose members end up voting differently
// (an incomplete order with multiplicity > 1) split into several blocks
// whose multiplicities add up to the group's.
struct VoteBlock {
  std::vector<int> order;  // candidate ids, most preferred first
  Mult mult = 1;

  bool operator==(const VoteBlock&) const = default;
};

struct Completion {
  // groups[g] lists the vote blocks of voter group g.
  std::vector<std::vector<VoteBlock>> groups;

  bool operator==(const Completion&) const = default;
};

}  // namespace topkvote
