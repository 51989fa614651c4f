#include "ccm/assignment.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccm/errors.hpp"
#include "ccm/min_cost_flow.hpp"

namespace ccm {

namespace {

void require_usable(int n, int k) {
  if (n < k) {
    throw InfeasibleError("cannot use all " + std::to_string(k) +
                          " committee members with only " + std::to_string(n) +
                          " voters");
  }
}

// Throws if any member's usage falls outside the quota interval.
void check_quota(const Assignment& a, std::span<const int> members,
                 QuotaInterval quota) {
  std::vector<int> usage(members.size(), 0);
  for (AlternativeId c : a.targets()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] == c.index) {
        ++usage[i];
        break;
      }
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (usage[i] < quota.lower || usage[i] > quota.upper) {
      throw std::logic_error("transportation solve broke quota of member " +
                             std::to_string(members[i]));
    }
  }
}

std::optional<AssignmentResult> solve_transportation(
    const PreferenceProfile& profile, std::span<const int> members,
    RuleKind rule, int max_rank, std::int64_t cost_limit) {
  const int n = profile.num_voters();
  const int k = static_cast<int>(members.size());
  require_usable(n, k);
  const QuotaInterval quota = quota_for(rule, n, k);

  // voters [0, n), members [n, n+k), hub n+k, sink n+k+1
  const int hub = n + k;
  const int sink = n + k + 1;
  MinCostFlow flow(n + k + 2);
  std::vector<std::vector<std::pair<int, int>>> voter_arcs(n);
  for (int v = 0; v < n; ++v) {
    flow.set_supply(v, 1);
    for (int i = 0; i < k; ++i) {
      const int r = profile.rank(v, members[i]);
      if (r > max_rank) continue;
      voter_arcs[v].push_back({flow.add_arc(v, n + i, 1, r), members[i]});
    }
  }
  for (int i = 0; i < k; ++i) {
    flow.add_arc(n + i, sink, quota.lower, 0);
    flow.add_arc(n + i, hub, quota.upper - quota.lower, 0);
  }
  flow.add_arc(hub, sink, n - k * quota.lower, 0);
  flow.set_supply(sink, -n);

  if (flow.solve(cost_limit) != MinCostFlow::Status::kOptimal) {
    return std::nullopt;
  }
  std::vector<AlternativeId> targets(n);
  for (int v = 0; v < n; ++v) {
    for (auto [arc, c] : voter_arcs[v]) {
      if (flow.flow(arc) == 1) targets[v] = AlternativeId{c};
    }
  }
  AssignmentResult result{Assignment(std::move(targets)), flow.total_cost()};
  check_quota(result.assignment, members, quota);
  return result;
}

std::vector<int> member_indices(const Committee& committee) {
  std::vector<int> out;
  out.reserve(committee.k());
  for (AlternativeId c : committee.members()) out.push_back(c.index);
  return out;
}

void check_members(const PreferenceProfile& profile, const Committee& c) {
  for (AlternativeId a : c.members()) {
    if (a.index >= profile.num_alternatives()) {
      throw InputError("committee member " + std::to_string(a.index) +
                       " not in profile");
    }
  }
}

}  // namespace

QuotaInterval quota_for(RuleKind rule, int num_voters, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  if (rule == RuleKind::kCC) return {1, num_voters};
  return {num_voters / k, (num_voters + k - 1) / k};
}

AssignmentResult optimal_assignment_for_committee(
    const PreferenceProfile& profile, const Committee& committee,
    RuleKind rule) {
  check_members(profile, committee);
  const std::vector<int> members = member_indices(committee);
  auto result =
      solve_transportation(profile, members, rule,
                           std::numeric_limits<int>::max(),
                           std::numeric_limits<std::int64_t>::max());
  // Complete bipartite arcs and balanced quotas always admit a flow once
  // n >= k.
  if (!result) throw std::logic_error("transportation solve failed");
  return *std::move(result);
}

std::optional<AssignmentResult> assignment_within_budget(
    const PreferenceProfile& profile, std::span<const int> committee,
    RuleKind rule, std::int64_t budget) {
  if (budget < 0) return std::nullopt;
  const int max_rank =
      budget >= std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                                : static_cast<int>(budget);
  return solve_transportation(profile, committee, rule, max_rank, budget);
}

std::int64_t free_cc_cost(const PreferenceProfile& profile,
                          std::span<const AlternativeId> alternatives) {
  if (alternatives.empty()) {
    throw InputError("free_cc_cost needs a nonempty alternative set");
  }
  for (AlternativeId c : alternatives) {
    if (c.index < 0 || c.index >= profile.num_alternatives()) {
      throw InputError("alternative " + std::to_string(c.index) +
                       " out of range");
    }
  }
  std::int64_t total = 0;
  for (int v = 0; v < profile.num_voters(); ++v) {
    int best = std::numeric_limits<int>::max();
    for (AlternativeId c : alternatives) {
      best = std::min(best, profile.rank(v, c.index));
    }
    total += best;
  }
  return total;
}

AssignmentResult brute_force_assignment(const PreferenceProfile& profile,
                                        const Committee& committee,
                                        RuleKind rule) {
  check_members(profile, committee);
  const int n = profile.num_voters();
  const int k = committee.k();
  std::int64_t maps = 1;
  for (int v = 0; v < n; ++v) {
    maps *= k;
    if (maps > kBruteForceAssignmentLimit) {
      throw SizeError("k^n exceeds the brute-force limit of 10^7");
    }
  }
  require_usable(n, k);
  const QuotaInterval quota = quota_for(rule, n, k);
  const std::vector<int> members = member_indices(committee);

  // Odometer over choice[v] in [0, k).
  std::vector<int> choice(n, 0);
  std::vector<int> usage(k, 0);
  usage[0] = n;
  std::int64_t cost = 0;
  for (int v = 0; v < n; ++v) cost += profile.rank(v, members[0]);

  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_choice;
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      ok = usage[i] >= quota.lower && usage[i] <= quota.upper;
    }
    if (ok && cost < best_cost) {
      best_cost = cost;
      best_choice = choice;
    }
    int v = n - 1;
    while (v >= 0 && choice[v] == k - 1) {
      cost += profile.rank(v, members[0]) - profile.rank(v, members[k - 1]);
      --usage[k - 1];
      ++usage[0];
      choice[v] = 0;
      --v;
    }
    if (v < 0) break;
    cost += profile.rank(v, members[choice[v] + 1]) -
            profile.rank(v, members[choice[v]]);
    --usage[choice[v]];
    ++usage[choice[v] + 1];
    ++choice[v];
  }
  if (best_choice.empty()) {
    throw InfeasibleError("no assignment satisfies the quota");
  }
  std::vector<AlternativeId> targets(n);
  for (int v = 0; v < n; ++v) targets[v] = AlternativeId{members[best_choice[v]]};
  return {Assignment(std::move(targets)), best_cost};
}

}  // namespace ccm
