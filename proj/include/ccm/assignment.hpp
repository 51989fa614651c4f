#ifndef CCM_ASSIGNMENT_HPP_
#define CCM_ASSIGNMENT_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "ccm/profile.hpp"

namespace ccm {

// Per-member usage bounds for a committee of size k over n voters.
// CC: [1, n] (every member must represent someone). Monroe:
// [floor(n/k), ceil(n/k)].
struct QuotaInterval {
  int lower = 0;
  int upper = 0;
};

QuotaInterval quota_for(RuleKind rule, int num_voters, int k);

struct AssignmentResult {
  Assignment assignment;
  std::int64_t cost = 0;
};

// Minimum-misrepresentation assignment onto the committee, every member used
// within its quota. Solved as a transportation problem: each voter supplies
// one unit, member c takes between lower and upper units, cost rank(v, c).
// Throws InfeasibleError when n < k.
AssignmentResult optimal_assignment_for_committee(
    const PreferenceProfile& profile, const Committee& committee,
    RuleKind rule);

// Same problem restricted to solutions of cost <= budget: voter/member pairs
// ranked above the budget are never considered, and the solve stops once the
// committed cost passes the budget. nullopt when no such assignment exists.
std::optional<AssignmentResult> assignment_within_budget(
    const PreferenceProfile& profile, std::span<const int> committee,
    RuleKind rule, std::int64_t budget);

// Sum over voters of the best rank available in `alternatives`, ignoring
// usage constraints. A lower bound for both rules.
std::int64_t free_cc_cost(const PreferenceProfile& profile,
                          std::span<const AlternativeId> alternatives);

// Exhaustive oracle over all k^n maps; throws SizeError above 10^7 maps.
AssignmentResult brute_force_assignment(const PreferenceProfile& profile,
                                        const Committee& committee,
                                        RuleKind rule);

inline constexpr std::int64_t kBruteForceAssignmentLimit = 10'000'000;

}  // namespace ccm

#endif  // CCM_ASSIGNMENT_HPP_
