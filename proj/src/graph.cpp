#include "ccm/graph.hpp"

#include <algorithm>
#include <charconv>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

bool extend_clique(const Graph& g, int h, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == h) return true;
  const int start = chosen.empty() ? 0 : chosen.back() + 1;
  const int remaining = h - static_cast<int>(chosen.size());
  for (int v = start; v + remaining <= g.num_vertices(); ++v) {
    bool ok = true;
    for (int u : chosen) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(v);
    if (extend_clique(g, h, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Graph::Graph(int num_vertices) : n_(num_vertices) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} out of range for " + std::to_string(n_) +
                     " vertices");
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw InputError("duplicate edge {" + std::to_string(u) + "," +
                     std::to_string(v) + "}");
  }
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v});
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

Graph parse_graph(std::string_view text) {
  int declared_n = -1;
  int declared_m = -1;
  std::vector<std::pair<Edge, int>> raw;  // edge, line
  int line_no = 0;
  int max_vertex = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = tokenize(line);
    if (tok.empty() || tok[0].front() == '#' || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (declared_n >= 0) throw ParseError(line_no, "second 'p' header");
      std::size_t first = 1;
      if (tok.size() == 4) first = 2;  // "p edge n m"
      if (tok.size() != first + 2) {
        throw ParseError(line_no, "expected 'p <n> <m>'");
      }
      declared_n = to_int(tok[first], line_no);
      declared_m = to_int(tok[first + 1], line_no);
      if (declared_n < 0 || declared_m < 0) {
        throw ParseError(line_no, "negative header value");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      u = to_int(tok[1], line_no) - 1;
      v = to_int(tok[2], line_no) - 1;
    } else {
      if (tok.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
      u = to_int(tok[0], line_no);
      v = to_int(tok[1], line_no);
    }
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    raw.push_back({{u, v}, line_no});
    max_vertex = std::max({max_vertex, u, v});
  }

  const int n = declared_n >= 0 ? declared_n : max_vertex + 1;
  Graph g(n);
  for (const auto& [e, line] : raw) {
    try {
      g.add_edge(e.u, e.v);
    } catch (const InputError& err) {
      throw ParseError(line, err.what());
    }
  }
  if (declared_m >= 0 && declared_m != g.num_edges()) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_m) +
                                  " edges, found " +
                                  std::to_string(g.num_edges()));
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int h) {
  if (h < 1) throw InputError("clique size must be at least 1");
  std::vector<int> chosen;
  if (extend_clique(g, h, chosen)) return chosen;
  return std::nullopt;
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] < 0 || vertices[a] >= g.num_vertices()) return false;
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || vertices[b] < 0 ||
          vertices[b] >= g.num_vertices() ||
          !g.adjacent(vertices[a], vertices[b])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ccm
