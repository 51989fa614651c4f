#include "ccm/solvers.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

void check_k(const PreferenceProfile& profile, int k) {
  if (k < 1 || k > profile.num_alternatives()) {
    throw InputError("k = " + std::to_string(k) + " outside [1, m = " +
                     std::to_string(profile.num_alternatives()) + "]");
  }
}

SolveOutcome make_outcome(const PreferenceProfile& profile, SolveStatus status,
                          std::vector<int> members, AssignmentResult result,
                          std::uint64_t nodes) {
  std::vector<AlternativeId> ids;
  ids.reserve(members.size());
  for (int c : members) ids.push_back(AlternativeId{c});
  SolveOutcome out;
  out.status = status;
  out.committee = Committee(std::move(ids), profile.num_alternatives());
  out.result = std::move(result);
  out.nodes_explored = nodes;
  return out;
}

// Greedy free-CC committee, evaluated under the rule. Gives the optimizing
// search its first incumbent.
AssignmentResult greedy_incumbent(const PreferenceProfile& profile, int k,
                                  RuleKind rule, std::vector<int>& members) {
  const int n = profile.num_voters();
  const int m = profile.num_alternatives();
  std::vector<int> best(n, m);
  std::vector<char> taken(m, 0);
  members.clear();
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    std::int64_t pick_cost = std::numeric_limits<std::int64_t>::max();
    for (int c = 0; c < m; ++c) {
      if (taken[c]) continue;
      std::int64_t cost = 0;
      for (int v = 0; v < n; ++v) cost += std::min(best[v], profile.rank(v, c));
      if (cost < pick_cost) {
        pick_cost = cost;
        pick = c;
      }
    }
    taken[pick] = 1;
    members.push_back(pick);
    for (int v = 0; v < n; ++v) best[v] = std::min(best[v], profile.rank(v, pick));
  }
  std::sort(members.begin(), members.end());
  std::vector<AlternativeId> ids;
  for (int c : members) ids.push_back(AlternativeId{c});
  return optimal_assignment_for_committee(profile, Committee(ids, m), rule);
}

}  // namespace

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasibleWithinBudget:
      return "feasible";
    case SolveStatus::kInfeasibleWithinBudget:
      return "infeasible";
    case SolveStatus::kLimitReached:
      return "inconclusive";
  }
  return "unknown";
}

SolveOutcome brute_force_solve(const PreferenceProfile& profile, int k,
                               RuleKind rule) {
  check_k(profile, k);
  const int m = profile.num_alternatives();
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count = count * (m - i) / (i + 1);
    if (count > kBruteForceCommitteeLimit) {
      throw SizeError("C(m, k) exceeds the brute-force limit of 10^6");
    }
  }

  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  std::optional<AssignmentResult> best;
  std::vector<int> best_combo;
  std::uint64_t evaluated = 0;
  while (true) {
    std::vector<AlternativeId> ids;
    for (int c : combo) ids.push_back(AlternativeId{c});
    AssignmentResult r =
        optimal_assignment_for_committee(profile, Committee(ids, m), rule);
    ++evaluated;
    if (!best || r.cost < best->cost) {
      best = std::move(r);
      best_combo = combo;
    }
    int i = k - 1;
    while (i >= 0 && combo[i] == m - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return make_outcome(profile, SolveStatus::kOptimal, best_combo,
                      *std::move(best), evaluated);
}

SolveOutcome decide_budget(const PreferenceProfile& profile, int k,
                           RuleKind rule, std::int64_t beta,
                           const SolveLimits& limits) {
  check_k(profile, k);
  if (beta < 0) throw InputError("budget must be nonnegative");
  if (profile.num_voters() < k) return {};

  CommitteeSearch search(profile, k, rule, beta);
  auto found = search.run(beta, /*stop_at_first=*/true, limits);
  if (found.found) {
    return make_outcome(profile, SolveStatus::kFeasibleWithinBudget,
                        std::move(found.committee),
                        std::move(found.assignment), found.nodes);
  }
  SolveOutcome out;
  out.status = found.aborted ? SolveStatus::kLimitReached
                             : SolveStatus::kInfeasibleWithinBudget;
  out.nodes_explored = found.nodes;
  return out;
}

SolveOutcome solve_exact(const PreferenceProfile& profile, int k,
                         RuleKind rule, std::optional<std::int64_t> budget,
                         const SolveLimits& limits) {
  check_k(profile, k);
  if (budget) {
    if (*budget < 0 || profile.num_voters() < k) return {};
    CommitteeSearch search(profile, k, rule, *budget);
    auto found = search.run(*budget, /*stop_at_first=*/false, limits);
    if (found.found) {
      return make_outcome(profile,
                          found.aborted ? SolveStatus::kLimitReached
                                        : SolveStatus::kFeasibleWithinBudget,
                          std::move(found.committee),
                          std::move(found.assignment), found.nodes);
    }
    SolveOutcome out;
    out.status = found.aborted ? SolveStatus::kLimitReached
                               : SolveStatus::kInfeasibleWithinBudget;
    out.nodes_explored = found.nodes;
    return out;
  }

  if (profile.num_voters() < k) {
    throw InfeasibleError("fewer voters than committee seats");
  }
  std::vector<int> members;
  AssignmentResult incumbent = greedy_incumbent(profile, k, rule, members);
  if (incumbent.cost == 0) {
    return make_outcome(profile, SolveStatus::kOptimal, std::move(members),
                        std::move(incumbent), 0);
  }
  CommitteeSearch search(profile, k, rule, incumbent.cost - 1);
  auto found = search.run(incumbent.cost - 1, /*stop_at_first=*/false, limits);
  const SolveStatus status =
      found.aborted ? SolveStatus::kLimitReached : SolveStatus::kOptimal;
  if (found.found) {
    return make_outcome(profile, status, std::move(found.committee),
                        std::move(found.assignment), found.nodes);
  }
  return make_outcome(profile, status, std::move(members),
                      std::move(incumbent), found.nodes);
}

std::vector<AlternativeId> candidate_filter(const PreferenceProfile& profile,
                                            int k, std::int64_t beta) {
  check_k(profile, k);
  if (beta < 0) throw InputError("budget must be nonnegative");
  const int m = profile.num_alternatives();
  std::vector<char> keep(m, 0);
  for (int v = 0; v < profile.num_voters(); ++v) {
    auto order = profile.order(v);
    const std::int64_t width = std::min<std::int64_t>(beta + 1, m);
    for (std::int64_t r = 0; r < width; ++r) keep[order[r]] = 1;
  }
  std::vector<AlternativeId> out;
  for (int c = 0; c < m; ++c) {
    if (keep[c]) out.push_back(AlternativeId{c});
  }
  return out;
}

}  // namespace ccm
