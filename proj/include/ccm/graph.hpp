#ifndef CCM_GRAPH_HPP_
#define CCM_GRAPH_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccm {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  bool operator==(const Edge&) const = default;
};

// Undirected simple graph on vertices 0..n-1. Edges keep insertion order;
// that order defines the edge ids used by the reductions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  // Throws InputError on loops, duplicates and out-of-range endpoints.
  void add_edge(int u, int v);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
};

// Edge list: "u v" lines (0-based), optional "p <n> <m>" / "p edge <n> <m>"
// header, DIMACS "e u v" lines (1-based), '#' and DIMACS 'c' comments.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Lexicographically first h-clique, or nullopt.
std::optional<std::vector<int>> find_clique(const Graph& g, int h);

bool is_clique(const Graph& g, std::span<const int> vertices);

}  // namespace ccm

#endif  // CCM_GRAPH_HPP_
