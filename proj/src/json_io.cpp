#include "ccm/json_io.hpp"

#include <vector>

#include "ccm/errors.hpp"

namespace ccm {

Json assignment_to_json(const Assignment& a, std::int64_t cost) {
  Json j;
  const std::vector<AlternativeId> image = a.image();
  j["k"] = image.size();
  j["cost"] = cost;
  Json committee = Json::array();
  for (AlternativeId c : image) committee.push_back(c.index);
  j["committee"] = std::move(committee);
  Json map = Json::object();
  for (int v = 0; v < a.num_voters(); ++v) {
    map[std::to_string(v)] = a[VoterId{v}].index;
  }
  j["assignment"] = std::move(map);
  return j;
}

Assignment assignment_from_json(const Json& j, int num_voters) {
  if (!j.is_object() || !j.contains("assignment") ||
      !j["assignment"].is_object()) {
    throw InputError("assignment JSON needs an \"assignment\" object");
  }
  std::vector<int> target(num_voters, -1);
  for (const auto& [key, value] : j["assignment"].items()) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || v < 0 || v >= num_voters) {
      throw InputError("assignment key \"" + key + "\" is not a voter id");
    }
    if (!value.is_number_integer()) {
      throw InputError("assignment of voter " + key + " is not an integer");
    }
    if (target[v] != -1) throw InputError("voter " + key + " assigned twice");
    target[v] = value.get<int>();
  }
  std::vector<AlternativeId> out;
  out.reserve(num_voters);
  for (int v = 0; v < num_voters; ++v) {
    if (target[v] < 0) {
      throw InputError("voter " + std::to_string(v) + " has no assignment");
    }
    out.push_back(AlternativeId{target[v]});
  }
  return Assignment(std::move(out));
}

Json outcome_to_json(const SolveOutcome& outcome) {
  Json j;
  j["status"] = std::string(status_name(outcome.status));
  if (outcome.result) {
    j["cost"] = outcome.result->cost;
    Json committee = Json::array();
    for (AlternativeId c : outcome.committee->members()) {
      committee.push_back(c.index);
    }
    j["committee"] = std::move(committee);
    j["assignment"] =
        assignment_to_json(outcome.result->assignment, outcome.result->cost)
            ["assignment"];
  }
  j["nodes"] = outcome.nodes_explored;
  return j;
}

std::string blocker_mode_name(const ReductionParams& params) {
  if (params.blocker_mode == BlockerMode::kPaperLiteral) return "paper";
  return "compact(" + std::to_string(params.blocker_size) + ")";
}

Json metadata_to_json(const ReducedInstance& inst) {
  Json j;
  j["rule"] = std::string(rule_name(inst.rule));
  j["h"] = inst.params.h;
  j["s1"] = inst.params.s1;
  j["s2"] = inst.params.s2;
  j["k"] = inst.k;
  j["beta"] = inst.beta;
  if (inst.rule == RuleKind::kMonroe) j["L"] = inst.L;
  j["blocker_mode"] = blocker_mode_name(inst.params);
  j["graph"] = {{"vertices", inst.graph_vertices},
                {"edges", inst.graph_edges}};
  j["trivially_no"] = inst.trivially_no;
  Json alts = Json::object();
  for (std::size_t c = 0; c < inst.alternative_roles.size(); ++c) {
    alts[std::to_string(c)] = describe(inst.alternative_roles[c]);
  }
  Json voters = Json::object();
  for (std::size_t v = 0; v < inst.voter_roles.size(); ++v) {
    voters[std::to_string(v)] = describe(inst.voter_roles[v]);
  }
  j["roles"] = {{"alternatives", std::move(alts)},
                {"voters", std::move(voters)}};
  if (!inst.warnings.empty()) j["warnings"] = inst.warnings;
  return j;
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ccm
