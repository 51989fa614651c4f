// Acceptance run: one PASS/FAIL line per criterion. Criterion 12 repeats
// 1-11 and compares the report text byte for byte.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ccm/assignment.hpp"
#include "ccm/harness.hpp"
#include "ccm/reduction.hpp"
#include "ccm/solvers.hpp"
#include "oracles.hpp"

using namespace ccm;

namespace {

// Wall-clock caps in seconds, per criterion (0 = none).
constexpr double kCap1 = 1.0;
constexpr double kCap2 = 60.0;
constexpr double kCap3 = 120.0;
constexpr double kCap5 = 600.0;
constexpr double kCap7 = 10.0;
constexpr double kInstanceCap9 = 600.0;

struct Outcome {
  bool pass = false;
  std::string report;  // deterministic text, no timings
};

struct Criterion {
  int id;
  std::string title;
  double cap;
  std::function<Outcome()> run;
};

int jobs() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Committee random_committee(std::mt19937_64& rng, int m, int k) {
  std::vector<int> all(m);
  for (int c = 0; c < m; ++c) all[c] = c;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<AlternativeId> ids;
  for (int i = 0; i < k; ++i) ids.push_back(AlternativeId{all[i]});
  return Committee(ids, m);
}

struct Shape {
  int m, n, k;
};

Shape random_shape(std::mt19937_64& rng) {
  const int m = 2 + static_cast<int>(rng() % 9);   // 2..10
  const int n = 1 + static_cast<int>(rng() % 8);   // 1..8
  const int k = 1 + static_cast<int>(rng() % std::min({3, m, n}));
  return {m, n, k};
}

Outcome c1() {
  const auto p = PreferenceProfile::from_orders({{1, 2, 0}}, {"1", "2", "3"});
  const int r2 = rank_of(p, VoterId{0}, AlternativeId{1});
  const int r3 = rank_of(p, VoterId{0}, AlternativeId{2});
  const int r1 = rank_of(p, VoterId{0}, AlternativeId{0});
  std::ostringstream os;
  os << "ranks 2->" << r2 << " 3->" << r3 << " 1->" << r1;
  return {r2 == 0 && r3 == 1 && r1 == 2, os.str()};
}

Outcome c2() {
  std::mt19937_64 rng(2002);
  int agree = 0, total = 0;
  std::int64_t cost_sum = 0;
  for (int t = 0; t < 200; ++t) {
    const Shape s = random_shape(rng);
    const auto p = build_profile(oracle::random_orders(rng, s.m, s.n));
    const Committee c = random_committee(rng, s.m, s.k);
    const RuleKind rule = t % 2 ? RuleKind::kMonroe : RuleKind::kCC;
    const auto flow = optimal_assignment_for_committee(p, c, rule);
    const auto brute = brute_force_assignment(p, c, rule);
    ++total;
    if (flow.cost == brute.cost) ++agree;
    cost_sum += flow.cost;
  }
  std::ostringstream os;
  os << agree << "/" << total << " equal costs, cost sum " << cost_sum;
  return {agree == total, os.str()};
}

Outcome c3() {
  std::mt19937_64 rng(3003);
  int agree = 0, total = 0;
  std::int64_t cost_sum = 0;
  for (int t = 0; t < 200; ++t) {
    const Shape s = random_shape(rng);
    const auto p = build_profile(oracle::random_orders(rng, s.m, s.n));
    const RuleKind rule = t % 2 ? RuleKind::kMonroe : RuleKind::kCC;
    const auto brute = brute_force_solve(p, s.k, rule);
    const auto exact = solve_exact(p, s.k, rule);
    ++total;
    if (exact.status == SolveStatus::kOptimal &&
        exact.result->cost == brute.result->cost) {
      ++agree;
    }
    cost_sum += brute.result->cost;
  }
  std::ostringstream os;
  os << agree << "/" << total << " equal optima, cost sum " << cost_sum;
  return {agree == total, os.str()};
}

Outcome c4() {
  std::mt19937_64 rng(4004);
  int violations = 0;
  for (int t = 0; t < 500; ++t) {
    const Shape s = random_shape(rng);
    const auto p = build_profile(oracle::random_orders(rng, s.m, s.n));
    const Committee c = random_committee(rng, s.m, s.k);
    const std::int64_t f = free_cc_cost(p, c.members());
    const std::int64_t cc =
        optimal_assignment_for_committee(p, c, RuleKind::kCC).cost;
    const std::int64_t mon =
        optimal_assignment_for_committee(p, c, RuleKind::kMonroe).cost;
    if (!(f <= cc && cc <= mon)) ++violations;
  }
  std::ostringstream os;
  os << "500 pairs, " << violations << " violations";
  return {violations == 0, os.str()};
}

std::string summary_text(const BatchReport& r) {
  std::ostringstream os;
  os << r.summary.total << " graphs: " << r.summary.agree << " agree, "
     << r.summary.disagree << " disagree, " << r.summary.inconclusive
     << " inconclusive, " << r.summary.errors << " errors";
  for (const auto& item : r.items) {
    if (item.verdict != Verdict::kAgree) {
      os << "; " << item.graph_id << " " << verdict_name(item.verdict);
    }
  }
  return os.str();
}

struct Families {
  BatchReport cc;
  BatchReport monroe;
};

Families& families() {
  static Families f;
  return f;
}

Outcome c5() {
  families().cc = batch_verify(graph_source("exhaustive:n=3..6,min-edges=3"),
                               RuleKind::kCC, {}, {}, jobs());
  const BatchReport& r = families().cc;
  return {r.summary.agree == r.summary.total && r.summary.total > 0,
          summary_text(r)};
}

Outcome c6() {
  int with_clique = 0, exact = 0;
  for (const auto& item : families().cc.items) {
    if (!item.clique_found) continue;
    ++with_clique;
    if (item.witness_cost == 21 && item.witness_exact.value_or(false)) ++exact;
  }
  std::ostringstream os;
  os << exact << "/" << with_clique << " witnesses at cost 21 with k members";
  return {with_clique > 0 && exact == with_clique, os.str()};
}

Outcome c7() {
  int checked = 0, ok = 0, skipped = 0;
  for (std::uint64_t seed = 1; checked < 50 && seed < 10000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const Graph g = random_graph(n, 0.5, 7000 + seed);
    const auto inst = monroe_reduction(g, {});
    if (inst.trivially_no) {
      ++skipped;
      continue;
    }
    ++checked;
    try {
      const InstanceStats s = instance_stats(inst);
      if (s.n == s.L * s.k && 2 * inst.x_count + inst.y_count == inst.L) ++ok;
    } catch (const std::exception&) {
    }
  }
  std::ostringstream os;
  os << ok << "/" << checked << " instances satisfy n = L k and 2|X|+|Y| = L ("
     << skipped << " trivially negative draws skipped)";
  return {checked == 50 && ok == checked, os.str()};
}

Outcome c8() {
  int found = 0, ok = 0;
  for (std::uint64_t seed = 1; found < 20 && seed < 10000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);  // 4..8
    const Graph g = random_graph(n, 0.5, 8000 + seed);
    const auto clique = find_clique(g, 3);
    if (!clique) continue;
    ++found;
    const auto inst = monroe_reduction(g, {});
    const Assignment w = monroe_witness(g, *clique, inst);
    const auto vr = validate_assignment(inst.prof(), w, inst.k,
                                        RuleKind::kMonroe);
    bool usage7 = true;
    for (const auto& [c, count] : vr.usage_histogram) {
      usage7 = usage7 && count == 7;
    }
    if (misrepresentation_sum(inst.prof(), w) == 42 && vr.valid &&
        vr.used_count == inst.k && usage7) {
      ++ok;
    }
  }
  std::ostringstream os;
  os << ok << "/" << found << " witnesses at cost 42, k members, usage 7";
  return {found == 20 && ok == 20, os.str()};
}

Outcome c9() {
  SolveLimits limits;
  limits.max_nodes = std::numeric_limits<std::uint64_t>::max();
  limits.time_cap_seconds = kInstanceCap9;
  std::vector<GraphItem> graphs =
      graph_source("exhaustive:n=3..5,min-edges=3");
  for (auto& item : graph_source("random:n=6..7,p=0.5,count=25,seed=1")) {
    graphs.push_back(std::move(item));
  }
  families().monroe =
      batch_verify(graphs, RuleKind::kMonroe, {}, limits, jobs());
  const BatchReport& r = families().monroe;
  return {r.summary.agree == r.summary.total && r.summary.total > 0,
          summary_text(r)};
}

Outcome c10() {
  int cc_total = 0, cc_ok = 0, mon_total = 0, mon_ok = 0;
  for (const auto& item : families().cc.items) {
    if (!item.claim_holds) continue;
    ++cc_total;
    if (*item.claim_holds) ++cc_ok;
  }
  for (const auto& item : families().monroe.items) {
    if (!item.claim_holds) continue;
    ++mon_total;
    if (*item.claim_holds) ++mon_ok;
  }
  std::ostringstream os;
  os << "check_claim1 on " << cc_ok << "/" << cc_total
     << " CC optima, check_claim2 on "
     << mon_ok << "/" << mon_total << " Monroe optima";
  return {cc_total > 0 && mon_total > 0 && cc_ok == cc_total &&
              mon_ok == mon_total,
          os.str()};
}

Outcome c11() {
  std::mt19937_64 rng(1111);
  int tested = 0, ok = 0;
  for (int t = 0; tested < 50 && t < 10000; ++t) {
    const Shape s = random_shape(rng);
    const auto p = build_profile(oracle::random_orders(rng, s.m, s.n));
    const RuleKind rule = t % 2 ? RuleKind::kMonroe : RuleKind::kCC;
    const auto best = solve_exact(p, s.k, rule);
    const std::int64_t opt = best.result->cost;
    if (opt == 0) continue;  // no budget below the optimum
    ++tested;
    const bool below = decide_budget(p, s.k, rule, opt - 1).status ==
                       SolveStatus::kInfeasibleWithinBudget;
    const bool at = decide_budget(p, s.k, rule, opt).status ==
                    SolveStatus::kFeasibleWithinBudget;
    if (below && at) ++ok;
  }
  std::ostringstream os;
  os << ok << "/" << tested << " instances flip exactly at the optimum";
  return {tested == 50 && ok == 50, os.str()};
}

std::vector<Criterion> criteria() {
  return {
      {1, "rank semantics", kCap1, c1},
      {2, "assignment oracle equivalence", kCap2, c2},
      {3, "committee oracle equivalence", kCap3, c3},
      {4, "rule ordering", 0, c4},
      {5, "CC reduction equivalence", kCap5, c5},
      {6, "CC witness exactness", 0, c6},
      {7, "Monroe construction identities", kCap7, c7},
      {8, "Monroe witness exactness", 0, c8},
      {9, "Monroe reduction equivalence", 0, c9},
      {10, "claim validators", 0, c10},
      {11, "budget boundary", 0, c11},
  };
}

struct Pass {
  std::vector<bool> ok;
  std::vector<double> seconds;
  std::string text;
};

Pass run_all() {
  Pass pass;
  for (const Criterion& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    pass.ok.push_back(o.pass && (c.cap == 0 || s < c.cap));
    pass.seconds.push_back(s);
    pass.text += std::to_string(c.id) + " " + o.report + "\n";
  }
  return pass;
}

}  // namespace

int main() {
  const Pass first = run_all();
  const auto list = criteria();
  std::istringstream lines(first.text);
  bool all = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string line;
    std::getline(lines, line);
    const std::string detail = line.substr(line.find(' ') + 1);
    std::printf("[%s] %2d %s: %s (%.2f s", first.ok[i] ? "PASS" : "FAIL",
                list[i].id, list[i].title.c_str(), detail.c_str(),
                first.seconds[i]);
    if (list[i].cap > 0) std::printf(", cap %.0f s", list[i].cap);
    std::printf(")\n");
    std::fflush(stdout);
    all = all && first.ok[i];
  }

  const auto start = std::chrono::steady_clock::now();
  const Pass second = run_all();
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool same = second.text == first.text;
  std::printf("[%s] 12 determinism: second run of 1-11 %s (%zu bytes, %.2f s)\n",
              same ? "PASS" : "FAIL",
              same ? "byte-identical" : "differs", second.text.size(), s);
  all = all && same;
  return all ? 0 : 1;
}
