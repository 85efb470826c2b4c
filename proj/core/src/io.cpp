#include "topkvote/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace topkvote {

namespace {

using nlohmann::json;

ScoringRule parse_rule(const json& node) {
  if (!node.is_object() || !node.contains("name") || !node["name"].is_string())
    fail(Errc::parse_error, "rule: expected an object with a \"name\" field");
  const std::string name = node["name"].get<std::string>();

  auto need_t = [&]() {
    if (!node.contains("t") || !node["t"].is_number_integer())
      fail(Errc::parse_error, "rule \"" + name + "\": integer field \"t\" required");
    return node["t"].get<int>();
  };

  if (name == "plurality") return ScoringRule::plurality();
  if (name == "veto") return ScoringRule::veto();
  if (name == "borda") return ScoringRule::borda();
  if (name == "t_approval") return ScoringRule::t_approval(need_t());
  if (name == "t_veto") return ScoringRule::t_veto(need_t());
  if (name == "custom") {
    if (!node.contains("scores") || !node["scores"].is_array())
      fail(Errc::parse_error, "rule \"custom\": array field \"scores\" required");
    std::vector<Score> scores;
    for (const auto& s : node["scores"]) {
      if (!s.is_number_integer())
        fail(Errc::parse_error, "rule \"custom\": scores must be integers");
      scores.push_back(s.get<Score>());
    }
    return ScoringRule::custom(std::move(scores));
  }
  fail(Errc::parse_error, "unknown rule name \"" + name + "\"");
}

json rule_to_json(const ScoringRule& rule) {
  json out;
  switch (rule.kind()) {
    case RuleKind::plurality: out["name"] = "plurality"; break;
    case RuleKind::veto: out["name"] = "veto"; break;
    case RuleKind::borda: out["name"] = "borda"; break;
    case RuleKind::t_approval:
      out["name"] = "t_approval";
      out["t"] = rule.t();
      break;
    case RuleKind::t_veto:
      out["name"] = "t_veto";
      out["t"] = rule.t();
      break;
    case RuleKind::custom:
      out["name"] = "custom";
      out["scores"] = rule.custom_scores();
      break;
  }
  return out;
}

std::vector<std::string> parse_name_list(const json& node, const char* field) {
  if (!node.is_array())
    fail(Errc::parse_error, std::string(field) + ": expected an array of names");
  std::vector<std::string> out;
  for (const auto& entry : node) {
    if (!entry.is_string())
      fail(Errc::parse_error, std::string(field) + ": entries must be strings");
    out.push_back(entry.get<std::string>());
  }
  return out;
}

int lookup(const std::vector<std::string>& names, const std::string& name,
           const std::string& where) {
  for (std::size_t c = 0; c < names.size(); ++c)
    if (names[c] == name) return static_cast<int>(c);
  fail(Errc::validation_error, where + ": unknown candidate name \"" + name + "\"");
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  if (!doc.is_object()) fail(Errc::parse_error, "top level must be an object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    fail(Errc::parse_error, "version: expected the integer 1");
  for (const char* field : {"candidates", "rule", "tie", "voters"})
    if (!doc.contains(field))
      fail(Errc::parse_error, std::string("missing field \"") + field + "\"");

  const std::vector<std::string> names =
      parse_name_list(doc["candidates"], "candidates");
  const int m = static_cast<int>(names.size());
  const ScoringRule rule = parse_rule(doc["rule"]);

  std::vector<int> tie;
  for (const std::string& name : parse_name_list(doc["tie"], "tie"))
    tie.push_back(lookup(names, name, "tie"));

  if (!doc["voters"].is_array())
    fail(Errc::parse_error, "voters: expected an array");
  std::vector<VoterGroup> voters;
  int index = 0;
  for (const auto& voter : doc["voters"]) {
    const std::string where = "voters[" + std::to_string(index++) + "]";
    if (!voter.is_object())
      fail(Errc::parse_error, where + ": expected an object");
    if (!voter.contains("mult") || !voter["mult"].is_number_integer())
      fail(Errc::parse_error, where + ": integer field \"mult\" required");
    const Mult mult = voter["mult"].get<Mult>();

    const bool has_pairs = voter.contains("pairs");
    const bool has_blocks = voter.contains("blocks");
    if (has_pairs == has_blocks)
      fail(Errc::parse_error,
           where + ": exactly one of \"pairs\" or \"blocks\" required");

    try {
      if (has_pairs) {
        if (!voter["pairs"].is_array())
          fail(Errc::parse_error, where + ".pairs: expected an array");
        std::vector<std::pair<int, int>> pairs;
        for (const auto& pair : voter["pairs"]) {
          if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
              !pair[1].is_string())
            fail(Errc::parse_error,
                 where + ".pairs: entries must be [above, below] name pairs");
          pairs.emplace_back(
              lookup(names, pair[0].get<std::string>(), where),
              lookup(names, pair[1].get<std::string>(), where));
        }
        voters.push_back({PartialOrder::from_pairs(m, pairs), mult});
      } else {
        if (!voter["blocks"].is_array())
          fail(Errc::parse_error, where + ".blocks: expected an array");
        std::vector<std::vector<int>> blocks;
        for (const auto& block : voter["blocks"]) {
          std::vector<int> ids;
          for (const std::string& name :
               parse_name_list(block, (where + ".blocks").c_str()))
            ids.push_back(lookup(names, name, where));
          blocks.push_back(std::move(ids));
        }
        voters.push_back({PartialOrder::partitioned(m, blocks), mult});
      }
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error || e.code() == Errc::validation_error)
        throw;
      fail(Errc::validation_error, where + ": " + e.what());
    }
  }

  try {
    return Instance::make(names, rule, std::move(voters), std::move(tie));
  } catch (const Error& e) {
    if (e.code() == Errc::validation_error) throw;
    fail(Errc::validation_error, e.what());
  }
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  json doc;
  doc["version"] = 1;
  doc["candidates"] = instance.candidate_names();
  doc["rule"] = rule_to_json(instance.rule());

  json tie = json::array();
  for (int c : instance.tie()) tie.push_back(instance.candidate_name(c));
  doc["tie"] = tie;

  json voters = json::array();
  for (const auto& group : instance.voters()) {
    json pairs = json::array();
    for (const auto& [x, y] : group.order.pairs())
      pairs.push_back({instance.candidate_name(x), instance.candidate_name(y)});
    voters.push_back({{"mult", group.mult}, {"pairs", pairs}});
  }
  doc["voters"] = voters;
  return doc.dump(2) + "\n";
}

void write_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  out << serialize_instance(instance);
  if (!out) fail(Errc::io_error, "write to '" + path + "' failed");
}

std::string serialize_result(const RunResult& result,
                             const Instance& instance) {
  json doc;
  doc["answer"] = result.answer;
  doc["method"] = result.method_used;
  doc["elapsed_ms"] = result.elapsed_ms;
  if (result.witness) {
    json blocks = json::array();
    for (const auto& group : result.witness->groups) {
      for (const auto& block : group) {
        json order = json::array();
        for (int c : block.order) order.push_back(instance.candidate_name(c));
        blocks.push_back({{"mult", block.mult}, {"order", order}});
      }
    }
    doc["witness"] = blocks;
  }
  return doc.dump(2) + "\n";
}

std::string serialize_error(const std::string& code,
                            const std::string& message) {
  json doc;
  doc["error"] = code;
  doc["message"] = message;
  return doc.dump(2) + "\n";
}

void emit_result(const std::string& serialized, const std::string& path) {
  if (path.empty()) {
    std::cout << serialized;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  out << serialized;
  if (!out) fail(Errc::io_error, "write to '" + path + "' failed");
}

}  // namespace topkvote
