#ifndef CCM_MIN_COST_FLOW_HPP_
#define CCM_MIN_COST_FLOW_HPP_

#include <cstdint>
#include <limits>
#include <vector>

namespace ccm {

// Successive shortest paths with Dijkstra over reduced costs. Nodes carry
// supplies (positive) or demands (negative) that must balance; arc costs
// must be nonnegative. Integral throughout.
class MinCostFlow {
 public:
  using Flow = std::int64_t;
  using Cost = std::int64_t;

  enum class Status { kNotSolved, kOptimal, kInfeasible, kCostLimitExceeded };

  explicit MinCostFlow(int num_nodes);

  // Returns the arc index used by flow().
  int add_arc(int tail, int head, Flow capacity, Cost unit_cost);
  void set_supply(int node, Flow supply);

  // Stops with kCostLimitExceeded as soon as the cost already committed
  // exceeds cost_limit. Shortest augmenting paths never get cheaper, so
  // this can only happen when the optimum itself exceeds the limit.
  Status solve(Cost cost_limit = std::numeric_limits<Cost>::max());

  Flow flow(int arc) const;
  Cost total_cost() const { return total_cost_; }
  int num_nodes() const { return num_nodes_; }

 private:
  struct Arc {
    int head;
    Flow residual;
    Cost cost;
  };

  int push_arc(int tail, int head, Flow capacity, Cost cost);

  int num_nodes_;
  std::vector<Arc> arcs_;  // arc 2i is forward, 2i+1 its reverse
  std::vector<std::vector<int>> out_;
  std::vector<Flow> supply_;
  std::vector<Flow> capacity_;  // original capacity per forward arc
  Cost total_cost_ = 0;
  Status status_ = Status::kNotSolved;
};

}  // namespace ccm

#endif  // CCM_MIN_COST_FLOW_HPP_
