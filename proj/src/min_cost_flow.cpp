#include "ccm/min_cost_flow.hpp"

#include <cassert>
#include <queue>
#include <stdexcept>

namespace ccm {

MinCostFlow::MinCostFlow(int num_nodes)
    : num_nodes_(num_nodes), out_(num_nodes), supply_(num_nodes, 0) {}

int MinCostFlow::push_arc(int tail, int head, Flow capacity, Cost cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({head, capacity, cost});
  arcs_.push_back({tail, 0, -cost});
  out_[tail].push_back(id);
  out_[head].push_back(id + 1);
  return id;
}

int MinCostFlow::add_arc(int tail, int head, Flow capacity, Cost unit_cost) {
  if (tail < 0 || tail >= num_nodes_ || head < 0 || head >= num_nodes_) {
    throw std::out_of_range("arc endpoint out of range");
  }
  if (capacity < 0 || unit_cost < 0) {
    throw std::invalid_argument("arc capacity and cost must be nonnegative");
  }
  capacity_.push_back(capacity);
  return push_arc(tail, head, capacity, unit_cost) / 2;
}

void MinCostFlow::set_supply(int node, Flow supply) { supply_[node] = supply; }

MinCostFlow::Flow MinCostFlow::flow(int arc) const {
  return capacity_[arc] - arcs_[2 * arc].residual;
}

MinCostFlow::Status MinCostFlow::solve(Cost cost_limit) {
  const int source = num_nodes_;
  const int sink = num_nodes_ + 1;
  const int total_nodes = num_nodes_ + 2;
  out_.resize(total_nodes);

  Flow total_supply = 0;
  Flow total_demand = 0;
  for (int v = 0; v < num_nodes_; ++v) {
    if (supply_[v] > 0) {
      push_arc(source, v, supply_[v], 0);
      total_supply += supply_[v];
    } else if (supply_[v] < 0) {
      push_arc(v, sink, -supply_[v], 0);
      total_demand -= supply_[v];
    }
  }
  total_cost_ = 0;
  if (total_supply != total_demand) return status_ = Status::kInfeasible;

  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> potential(total_nodes, 0);
  std::vector<Cost> dist(total_nodes);
  std::vector<int> parent_arc(total_nodes);
  using Entry = std::pair<Cost, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  Flow sent = 0;
  while (sent < total_supply) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (int id : out_[u]) {
        const Arc& a = arcs_[id];
        if (a.residual <= 0) continue;
        const Cost reduced = a.cost + potential[u] - potential[a.head];
        assert(reduced >= 0);
        if (dist[u] + reduced < dist[a.head]) {
          dist[a.head] = dist[u] + reduced;
          parent_arc[a.head] = id;
          heap.push({dist[a.head], a.head});
        }
      }
    }
    if (dist[sink] >= kInf) return status_ = Status::kInfeasible;
    for (int v = 0; v < total_nodes; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }

    Flow push = total_supply - sent;
    for (int v = sink; v != source;) {
      const int id = parent_arc[v];
      push = std::min(push, arcs_[id].residual);
      v = arcs_[id ^ 1].head;
    }
    const Cost path_cost = potential[sink] - potential[source];
    for (int v = sink; v != source;) {
      const int id = parent_arc[v];
      arcs_[id].residual -= push;
      arcs_[id ^ 1].residual += push;
      v = arcs_[id ^ 1].head;
    }
    sent += push;
    total_cost_ += push * path_cost;
    if (total_cost_ > cost_limit) return status_ = Status::kCostLimitExceeded;
  }
  return status_ = Status::kOptimal;
}

}  // namespace ccm
