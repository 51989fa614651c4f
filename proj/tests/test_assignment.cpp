#include <doctest.h>

#include <random>

#include "ccm/assignment.hpp"
#include "ccm/errors.hpp"
#include "ccm/min_cost_flow.hpp"
#include "oracles.hpp"

using namespace ccm;

namespace {

Committee committee(std::vector<int> members, int m) {
  std::vector<AlternativeId> ids;
  for (int c : members) ids.push_back(AlternativeId{c});
  return Committee(ids, m);
}

void check_quota(const PreferenceProfile& p, const AssignmentResult& r,
                 const Committee& s, RuleKind rule) {
  const QuotaInterval q = quota_for(rule, p.num_voters(), s.k());
  std::vector<int> usage(p.num_alternatives(), 0);
  for (AlternativeId c : r.assignment.targets()) {
    REQUIRE(s.contains(c));
    ++usage[c.index];
  }
  for (AlternativeId c : s.members()) {
    CHECK(usage[c.index] >= q.lower);
    CHECK(usage[c.index] <= q.upper);
  }
  CHECK(r.cost == misrepresentation_sum(p, r.assignment));
}

}  // namespace

TEST_CASE("quota intervals") {
  CHECK(quota_for(RuleKind::kCC, 5, 2).lower == 1);
  CHECK(quota_for(RuleKind::kCC, 5, 2).upper == 5);
  CHECK(quota_for(RuleKind::kMonroe, 5, 2).lower == 2);
  CHECK(quota_for(RuleKind::kMonroe, 5, 2).upper == 3);
  CHECK(quota_for(RuleKind::kMonroe, 4, 2).lower == 2);
  CHECK(quota_for(RuleKind::kMonroe, 4, 2).upper == 2);
}

TEST_CASE("forced second choices") {
  // a = 0, b = 1; every voter prefers a
  const auto p = build_profile({{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  const Committee s = committee({0, 1}, 2);
  const auto monroe = optimal_assignment_for_committee(p, s, RuleKind::kMonroe);
  const auto cc = optimal_assignment_for_committee(p, s, RuleKind::kCC);
  CHECK(monroe.cost == 2);
  CHECK(cc.cost == 1);
  CHECK(*oracle::best_assignment({{0, 1}, {0, 1}, {0, 1}, {0, 1}}, {0, 1},
                                 true) == 2);
  CHECK(*oracle::best_assignment({{0, 1}, {0, 1}, {0, 1}, {0, 1}}, {0, 1},
                                 false) == 1);
  check_quota(p, monroe, s, RuleKind::kMonroe);
  check_quota(p, cc, s, RuleKind::kCC);

  std::vector<AlternativeId> both{AlternativeId{0}, AlternativeId{1}};
  CHECK(free_cc_cost(p, both) == 0);
}

TEST_CASE("single member committee") {
  const auto p = build_profile({{2, 0, 1}, {1, 2, 0}, {0, 1, 2}});
  for (int c = 0; c < 3; ++c) {
    const auto r =
        optimal_assignment_for_committee(p, committee({c}, 3), RuleKind::kCC);
    std::int64_t expect = 0;
    for (int v = 0; v < 3; ++v) expect += p.rank(v, c);
    CHECK(r.cost == expect);
  }
}

TEST_CASE("small Monroe split n=3 k=2") {
  const oracle::Orders orders{{0, 1, 2}, {0, 2, 1}, {2, 1, 0}};
  const auto p = build_profile(orders);
  const Committee s = committee({0, 1}, 3);
  // value from the exhaustive oracle: voters 0,1 -> 0, voter 2 -> 1
  const std::int64_t expect = 1;
  REQUIRE(*oracle::best_assignment(orders, {0, 1}, true) == expect);
  CHECK(brute_force_assignment(p, s, RuleKind::kMonroe).cost == expect);
  CHECK(optimal_assignment_for_committee(p, s, RuleKind::kMonroe).cost ==
        expect);
}

TEST_CASE("free_cc_cost") {
  const auto worked = build_profile({{1, 2, 0}});
  std::vector<AlternativeId> s{AlternativeId{0}, AlternativeId{2}};
  CHECK(free_cc_cost(worked, s) == 1);
  std::vector<AlternativeId> all{AlternativeId{0}, AlternativeId{1},
                                 AlternativeId{2}};
  CHECK(free_cc_cost(worked, all) == 0);
  CHECK_THROWS_AS(free_cc_cost(worked, {}), InputError);
}

TEST_CASE("errors") {
  const auto p = build_profile({{0, 1, 2}});
  CHECK_THROWS_AS(
      optimal_assignment_for_committee(p, committee({0, 1}, 3), RuleKind::kCC),
      InfeasibleError);
  CHECK_THROWS_AS(optimal_assignment_for_committee(p, committee({0, 1}, 3),
                                                   RuleKind::kMonroe),
                  InfeasibleError);
  std::mt19937_64 rng(1);
  const auto big = build_profile(oracle::random_orders(rng, 4, 14));
  CHECK_THROWS_AS(
      brute_force_assignment(big, committee({0, 1, 2, 3}, 4), RuleKind::kCC),
      SizeError);
}

TEST_CASE("flow engine agrees with both oracles") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const int m = 2 + static_cast<int>(rng() % 7);
    const int n = 1 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % std::min(3, std::min(m, n)));
    const auto orders = oracle::random_orders(rng, m, n);
    const auto p = build_profile(orders);
    std::vector<int> members(m);
    for (int c = 0; c < m; ++c) members[c] = c;
    std::shuffle(members.begin(), members.end(), rng);
    members.resize(k);
    std::sort(members.begin(), members.end());
    const Committee s = committee(members, m);
    for (RuleKind rule : {RuleKind::kCC, RuleKind::kMonroe}) {
      const auto flow = optimal_assignment_for_committee(p, s, rule);
      const auto brute = brute_force_assignment(p, s, rule);
      const auto naive =
          oracle::best_assignment(orders, members, rule == RuleKind::kMonroe);
      REQUIRE(naive.has_value());
      CHECK(flow.cost == *naive);
      CHECK(brute.cost == *naive);
      check_quota(p, flow, s, rule);
      check_quota(p, brute, s, rule);
      for (std::int64_t budget : {flow.cost - 1, flow.cost, flow.cost + 2}) {
        const auto within = assignment_within_budget(p, members, rule, budget);
        CHECK(within.has_value() == (flow.cost <= budget));
        if (within) CHECK(within->cost == flow.cost);
      }
    }
  }
}

TEST_CASE("rule ordering and free cost monotonicity") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const int m = 3 + static_cast<int>(rng() % 6);
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto orders = oracle::random_orders(rng, m, n);
    const auto p = build_profile(orders);
    std::vector<AlternativeId> sub{AlternativeId{0}, AlternativeId{1}};
    std::vector<AlternativeId> super = sub;
    super.push_back(AlternativeId{2});
    CHECK(free_cc_cost(p, super) <= free_cc_cost(p, sub));
    CHECK(free_cc_cost(p, super) == oracle::free_cost(orders, {0, 1, 2}));
    const Committee s(super, m);
    const auto cc = optimal_assignment_for_committee(p, s, RuleKind::kCC);
    const auto mon = optimal_assignment_for_committee(p, s, RuleKind::kMonroe);
    CHECK(free_cc_cost(p, super) <= cc.cost);
    CHECK(cc.cost <= mon.cost);
  }
}

TEST_CASE("min cost flow basics") {
  // two sources, two sinks, crossing costs
  MinCostFlow f(4);
  const int a = f.add_arc(0, 2, 1, 5);
  const int b = f.add_arc(0, 3, 1, 1);
  const int c = f.add_arc(1, 2, 1, 1);
  const int d = f.add_arc(1, 3, 1, 5);
  f.set_supply(0, 1);
  f.set_supply(1, 1);
  f.set_supply(2, -1);
  f.set_supply(3, -1);
  CHECK(f.solve() == MinCostFlow::Status::kOptimal);
  CHECK(f.total_cost() == 2);
  CHECK(f.flow(a) == 0);
  CHECK(f.flow(b) == 1);
  CHECK(f.flow(c) == 1);
  CHECK(f.flow(d) == 0);

  MinCostFlow g(2);
  g.add_arc(0, 1, 1, 0);
  g.set_supply(0, 2);
  g.set_supply(1, -2);
  CHECK(g.solve() == MinCostFlow::Status::kInfeasible);
}
