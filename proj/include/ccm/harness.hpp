#ifndef CCM_HARNESS_HPP_
#define CCM_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccm/graph.hpp"
#include "ccm/json_io.hpp"
#include "ccm/reduction.hpp"
#include "ccm/solvers.hpp"

namespace ccm {

enum class Verdict { kAgree, kDisagree, kInconclusive, kError };

std::string_view verdict_name(Verdict verdict);

struct VerdictReport {
  std::string graph_id;
  RuleKind rule = RuleKind::kCC;
  ReductionParams params;  // resolved
  int graph_vertices = 0;
  int graph_edges = 0;
  int k = 0;
  std::int64_t beta = 0;
  bool trivially_no = false;

  bool clique_found = false;
  std::vector<int> clique;

  SolveStatus decide_status = SolveStatus::kInfeasibleWithinBudget;
  bool budget_feasible = false;
  std::optional<std::int64_t> cost;
  std::vector<int> committee;
  std::uint64_t nodes = 0;

  // Minimum cost within budget and the claim validator run on it.
  std::optional<std::int64_t> optimum;
  std::optional<bool> claim_holds;

  std::optional<std::int64_t> witness_cost;
  std::optional<bool> witness_exact;

  bool agree = false;  // clique_found == budget_feasible, conclusive only
  Verdict verdict = Verdict::kInconclusive;

  // Set when a compact-mode disagreement was re-run with doubled blockers.
  std::optional<int> escalated_blocker_size;
  std::optional<bool> escalated_agree;

  std::string error;
  std::vector<std::string> warnings;
  double seconds = 0;  // wall time, kept out of JSON
};

VerdictReport verify_equivalence(const Graph& g, RuleKind rule,
                                 const ReductionParams& params,
                                 const SolveLimits& limits = {},
                                 std::string graph_id = "");

// Every assigned rank <= 1 and the image lies in U, D, E.
bool check_claim1(const ReducedInstance& inst, const AssignmentResult& result);

// X and Y inside the image, every rank <= 1, every usage exactly L.
bool check_claim2(const ReducedInstance& inst, const AssignmentResult& result);

struct GraphItem {
  std::string id;
  std::optional<Graph> graph;
  std::string error;  // set when the graph could not be read
};

using GraphFilter = std::function<bool(const Graph&)>;

// All labeled simple graphs on n vertices (n <= 8) in ascending edge-mask
// order, where bit t of the mask is the t-th pair (a, b), a < b, in
// lexicographic order.
void enumerate_graphs(int n, const GraphFilter& filter,
                      const std::function<void(Graph, std::uint64_t)>& sink);

Graph random_graph(int n, double p, std::uint64_t seed);

// Sources: a directory of graph files, "exhaustive:n=A[..B][,min-edges=E]"
// or "random:n=A[..B],p=P,count=C[,seed=S]".
std::vector<GraphItem> graph_source(const std::string& spec);

struct BatchSummary {
  int total = 0;
  int agree = 0;
  int disagree = 0;
  int inconclusive = 0;
  int errors = 0;
};

struct BatchReport {
  std::vector<VerdictReport> items;
  BatchSummary summary;
  int exit_code() const;  // 0 all agree, 2 any disagree, 3 otherwise
};

BatchReport batch_verify(const std::vector<GraphItem>& graphs, RuleKind rule,
                         const ReductionParams& params,
                         const SolveLimits& limits = {}, int jobs = 1);

Json report_to_json(const VerdictReport& r);
Json batch_to_json(const BatchReport& report);
std::string batch_table(const BatchReport& report);

}  // namespace ccm

#endif  // CCM_HARNESS_HPP_
