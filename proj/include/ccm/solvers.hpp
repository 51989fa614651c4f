#ifndef CCM_SOLVERS_HPP_
#define CCM_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ccm/assignment.hpp"
#include "ccm/committee_search.hpp"
#include "ccm/profile.hpp"

namespace ccm {

enum class SolveStatus {
  kOptimal,
  kFeasibleWithinBudget,
  kInfeasibleWithinBudget,
  kLimitReached,  // node or time cap hit before the answer was proven
};

std::string_view status_name(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasibleWithinBudget;
  std::optional<Committee> committee;
  std::optional<AssignmentResult> result;
  std::uint64_t nodes_explored = 0;
};

// Enumerates all C(m, k) committees; throws SizeError above 10^6 of them.
SolveOutcome brute_force_solve(const PreferenceProfile& profile, int k,
                               RuleKind rule);

// Does some size-k committee admit an assignment of cost <= beta?
SolveOutcome decide_budget(const PreferenceProfile& profile, int k,
                           RuleKind rule, std::int64_t beta,
                           const SolveLimits& limits = {});

// Without a budget: minimum over all committees (status kOptimal). With a
// budget: the minimum among solutions of cost <= budget, reported as
// kFeasibleWithinBudget, or kInfeasibleWithinBudget when there is none.
SolveOutcome solve_exact(const PreferenceProfile& profile, int k,
                         RuleKind rule,
                         std::optional<std::int64_t> budget = std::nullopt,
                         const SolveLimits& limits = {});

// Alternatives ranked <= beta by at least one voter, ascending. Every member
// of a committee within budget must serve some voter at such a rank.
std::vector<AlternativeId> candidate_filter(const PreferenceProfile& profile,
                                            int k, std::int64_t beta);

inline constexpr std::int64_t kBruteForceCommitteeLimit = 1'000'000;

}  // namespace ccm

#endif  // CCM_SOLVERS_HPP_
