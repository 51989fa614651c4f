#ifndef CCM_JSON_IO_HPP_
#define CCM_JSON_IO_HPP_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ccm/profile.hpp"
#include "ccm/reduction.hpp"
#include "ccm/solvers.hpp"

namespace ccm {

using Json = nlohmann::ordered_json;

// {"k", "cost", "committee", "assignment": {"<voter>": alternative}}
Json assignment_to_json(const Assignment& a, std::int64_t cost);

// Reads the "assignment" object; every voter 0..n-1 must appear once.
Assignment assignment_from_json(const Json& j, int num_voters);

Json outcome_to_json(const SolveOutcome& outcome);

Json metadata_to_json(const ReducedInstance& inst);

std::string blocker_mode_name(const ReductionParams& params);

// Dumps with two-space indentation and a trailing newline.
std::string to_text(const Json& j);

}  // namespace ccm

#endif  // CCM_JSON_IO_HPP_
