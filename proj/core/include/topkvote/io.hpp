#pragma once

#include <string>

#include "topkvote/instance.hpp"
#include "topkvote/runner.hpp"

namespace topkvote {

// Instance files are JSON documents:
//
//   {
//     "version": 1,
//     "candidates": ["a", "b", "c"],
//     "rule": {"name": "t_approval", "t": 2},
//     "tie": ["a", "b", "c"],
//     "voters": [
//       {"mult": 1, "pairs": [["a", "b"], ["b", "c"]]},
//       {"mult": 2, "blocks": [["b"], ["a", "c"]]}
//     ]
//   }
//
// Rule names: plurality, veto, t_approval, t_veto, borda, custom (the last
// with a "scores" array instead of "t"). A voter carries either "pairs"
// (above/below name pairs) or "blocks" (a partitioned order). Syntax
// problems raise parse_error, semantic ones validation_error.

Instance parse_instance(const std::string& text);
Instance parse_instance_file(const std::string& path);

std::string serialize_instance(const Instance& instance);
void write_instance_file(const Instance& instance, const std::string& path);

// Result records: {"answer": ..., "method": ..., "witness": [...],
// "elapsed_ms": ...}; the witness lists {"mult", "order"} blocks in voter
// group order and is omitted when there is none.
std::string serialize_result(const RunResult& result, const Instance& instance);

// Error records for failed runs: {"error": code, "message": ...}.
std::string serialize_error(const std::string& code, const std::string& message);

// Writes to the path, or to stdout when path is empty. Throws io_error.
void emit_result(const std::string& serialized, const std::string& path);

}  // namespace topkvote
