#include "ccm/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

bool claim(const ReducedInstance& inst, const AssignmentResult& result) {
  return inst.rule == RuleKind::kCC ? check_claim1(inst, result)
                                    : check_claim2(inst, result);
}

bool ranks_at_most_one(const PreferenceProfile& p, const Assignment& a) {
  for (int v = 0; v < p.num_voters(); ++v) {
    if (p.rank(v, a[VoterId{v}].index) > 1) return false;
  }
  return true;
}

bool shape_ok(const ReducedInstance& inst, const Assignment& a) {
  if (inst.trivially_no) return false;
  const PreferenceProfile& p = inst.prof();
  if (a.num_voters() != p.num_voters()) return false;
  for (AlternativeId c : a.targets()) {
    if (c.index < 0 || c.index >= p.num_alternatives()) return false;
  }
  return true;
}

VerdictReport verify_once(const Graph& g, RuleKind rule,
                          const ReductionParams& params,
                          const SolveLimits& limits, std::string graph_id) {
  VerdictReport r;
  r.graph_id = std::move(graph_id);
  r.rule = rule;
  r.params = params;
  r.graph_vertices = g.num_vertices();
  r.graph_edges = g.num_edges();

  const ReducedInstance inst = make_reduction(rule, g, params);
  r.params = inst.params;
  r.k = inst.k;
  r.beta = inst.beta;
  r.trivially_no = inst.trivially_no;
  r.warnings = inst.warnings;

  if (auto c = find_clique(g, inst.params.h)) {
    r.clique_found = true;
    r.clique = *c;
  }

  bool conclusive = true;
  if (!inst.trivially_no) {
    const PreferenceProfile& p = inst.prof();
    const SolveOutcome d = decide_budget(p, inst.k, rule, inst.beta, limits);
    r.decide_status = d.status;
    r.nodes = d.nodes_explored;
    if (d.status == SolveStatus::kLimitReached) {
      conclusive = false;
    } else if (d.status == SolveStatus::kFeasibleWithinBudget) {
      r.budget_feasible = true;
      r.cost = d.result->cost;
      for (AlternativeId c : d.committee->members()) {
        r.committee.push_back(c.index);
      }
      const SolveOutcome best = solve_exact(p, inst.k, rule, inst.beta, limits);
      r.nodes += best.nodes_explored;
      if (best.status == SolveStatus::kFeasibleWithinBudget) {
        r.optimum = best.result->cost;
        r.claim_holds = claim(inst, *best.result);
      } else {
        conclusive = false;
      }
    }

    if (r.clique_found) {
      const Assignment w = forward_witness(g, r.clique, inst);
      r.witness_cost = misrepresentation_sum(p, w);
      const ValidationReport vr = validate_assignment(p, w, inst.k, rule);
      r.witness_exact = vr.valid && *r.witness_cost == inst.beta;
    }
  }

  if (!conclusive) {
    r.verdict = Verdict::kInconclusive;
    return r;
  }
  r.agree = r.clique_found == r.budget_feasible;
  r.verdict = r.agree && r.witness_exact.value_or(true) ? Verdict::kAgree
                                                       : Verdict::kDisagree;
  return r;
}

struct SourceSpec {
  std::string kind;
  std::map<std::string, std::string> keys;
};

SourceSpec parse_source(const std::string& spec) {
  SourceSpec out;
  const auto colon = spec.find(':');
  out.kind = spec.substr(0, colon);
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("graph source item \"" + item + "\" is not key=value");
    }
    out.keys[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

long long to_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InputError(what + " \"" + text + "\" is not an integer");
  }
  return value;
}

std::pair<int, int> int_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = static_cast<int>(to_int(text, "n"));
    return {v, v};
  }
  const int lo = static_cast<int>(to_int(text.substr(0, dots), "n"));
  const int hi = static_cast<int>(to_int(text.substr(dots + 2), "n"));
  if (hi < lo) throw InputError("empty vertex range " + text);
  return {lo, hi};
}

std::string take(SourceSpec& s, const std::string& key,
                 const std::string& fallback = "") {
  auto it = s.keys.find(key);
  if (it == s.keys.end()) {
    if (fallback.empty()) {
      throw InputError("graph source needs " + key + "=...");
    }
    return fallback;
  }
  std::string value = it->second;
  s.keys.erase(it);
  return value;
}

void reject_leftovers(const SourceSpec& s) {
  if (!s.keys.empty()) {
    throw InputError("unknown graph source key " + s.keys.begin()->first);
  }
}

std::string format_p(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAgree: return "agree";
    case Verdict::kDisagree: return "disagree";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kError: return "error";
  }
  return "?";
}

VerdictReport verify_equivalence(const Graph& g, RuleKind rule,
                                 const ReductionParams& params,
                                 const SolveLimits& limits,
                                 std::string graph_id) {
  const auto start = std::chrono::steady_clock::now();
  VerdictReport r;
  try {
    r = verify_once(g, rule, params, limits, graph_id);
    if (r.verdict == Verdict::kDisagree &&
        r.params.blocker_mode == BlockerMode::kCompact) {
      ReductionParams wider = r.params;
      wider.blocker_size *= 2;
      const VerdictReport again = verify_once(g, rule, wider, limits, graph_id);
      r.escalated_blocker_size = wider.blocker_size;
      r.escalated_agree = again.verdict == Verdict::kAgree;
    }
  } catch (const std::exception& e) {
    r = VerdictReport{};
    r.graph_id = std::move(graph_id);
    r.rule = rule;
    r.params = params;
    r.graph_vertices = g.num_vertices();
    r.graph_edges = g.num_edges();
    r.verdict = Verdict::kError;
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

bool check_claim1(const ReducedInstance& inst, const AssignmentResult& result) {
  const Assignment& a = result.assignment;
  if (!shape_ok(inst, a) || !ranks_at_most_one(inst.prof(), a)) return false;
  for (AlternativeId c : a.image()) {
    const AltKind kind = inst.alternative_roles[c.index].kind;
    if (kind != AltKind::kVertex && kind != AltKind::kDummy &&
        kind != AltKind::kEdge) {
      return false;
    }
  }
  return true;
}

bool check_claim2(const ReducedInstance& inst, const AssignmentResult& result) {
  const Assignment& a = result.assignment;
  if (!shape_ok(inst, a) || !ranks_at_most_one(inst.prof(), a)) return false;
  std::vector<int> usage(inst.prof().num_alternatives(), 0);
  for (AlternativeId c : a.targets()) ++usage[c.index];
  for (std::size_t c = 0; c < usage.size(); ++c) {
    const AltKind kind = inst.alternative_roles[c].kind;
    const bool needed = kind == AltKind::kX || kind == AltKind::kY;
    if (needed && usage[c] == 0) return false;
    if (usage[c] != 0 && usage[c] != inst.L) return false;
  }
  return true;
}

void enumerate_graphs(int n, const GraphFilter& filter,
                      const std::function<void(Graph, std::uint64_t)>& sink) {
  if (n < 1 || n > 8) {
    throw InputError("exhaustive enumeration supports 1 to 8 vertices, got " +
                     std::to_string(n));
  }
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g(n);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (mask >> t & 1) g.add_edge(pairs[t].u, pairs[t].v);
    }
    if (!filter || filter(g)) sink(std::move(g), mask);
  }
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability not in [0,1]");
  std::mt19937_64 rng(seed);
  const bool all = p >= 1.0;
  const auto threshold =
      static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(p), 64));
  Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const std::uint64_t draw = rng();
      if (all || draw < threshold) g.add_edge(a, b);
    }
  }
  return g;
}

std::vector<GraphItem> graph_source(const std::string& spec) {
  namespace fs = std::filesystem;
  std::vector<GraphItem> out;
  if (spec.rfind("exhaustive:", 0) == 0) {
    SourceSpec s = parse_source(spec);
    const auto [lo, hi] = int_range(take(s, "n"));
    const int min_edges =
        static_cast<int>(to_int(take(s, "min-edges", "0"), "min-edges"));
    reject_leftovers(s);
    for (int n = lo; n <= hi; ++n) {
      enumerate_graphs(
          n, [&](const Graph& g) { return g.num_edges() >= min_edges; },
          [&](Graph g, std::uint64_t mask) {
            out.push_back({"exhaustive:n=" + std::to_string(n) +
                               ",mask=" + std::to_string(mask),
                           std::move(g), ""});
          });
    }
    return out;
  }
  if (spec.rfind("random:", 0) == 0) {
    SourceSpec s = parse_source(spec);
    const auto [lo, hi] = int_range(take(s, "n"));
    const std::string p_text = take(s, "p");
    double p = 0;
    try {
      p = std::stod(p_text);
    } catch (const std::exception&) {
      throw InputError("p \"" + p_text + "\" is not a number");
    }
    const long long count = to_int(take(s, "count"), "count");
    const long long seed0 = to_int(take(s, "seed", "1"), "seed");
    reject_leftovers(s);
    for (long long t = 0; t < count; ++t) {
      const int n = lo + static_cast<int>(t % (hi - lo + 1));
      const auto seed = static_cast<std::uint64_t>(seed0 + t);
      out.push_back({"random:n=" + std::to_string(n) + ",p=" + format_p(p) +
                         ",seed=" + std::to_string(seed),
                     random_graph(n, p, seed), ""});
    }
    return out;
  }

  std::error_code ec;
  std::vector<fs::path> files;
  if (fs::is_directory(spec, ec)) {
    for (const auto& entry : fs::directory_iterator(spec, ec)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    if (ec) throw InputError("cannot list directory " + spec);
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(spec, ec)) {
    files.push_back(spec);
  } else {
    throw InputError("graph source " + spec +
                     " is neither a directory, a file, nor a generator spec");
  }
  for (const fs::path& path : files) {
    GraphItem item;
    item.id = path.filename().string();
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      item.error = "cannot open " + path.string();
    } else {
      std::ostringstream text;
      text << in.rdbuf();
      try {
        item.graph = parse_graph(text.str());
      } catch (const std::exception& e) {
        item.error = e.what();
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

int BatchReport::exit_code() const {
  if (summary.disagree > 0) return 2;
  if (summary.inconclusive > 0 || summary.errors > 0) return 3;
  return 0;
}

BatchReport batch_verify(const std::vector<GraphItem>& graphs, RuleKind rule,
                         const ReductionParams& params,
                         const SolveLimits& limits, int jobs) {
  BatchReport report;
  report.items.resize(graphs.size());
  auto run = [&](std::size_t i) {
    const GraphItem& item = graphs[i];
    if (!item.graph) {
      VerdictReport& r = report.items[i];
      r.graph_id = item.id;
      r.rule = rule;
      r.params = params;
      r.verdict = Verdict::kError;
      r.error = item.error;
      return;
    }
    report.items[i] =
        verify_equivalence(*item.graph, rule, params, limits, item.id);
  };

  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) run(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  BatchSummary& s = report.summary;
  for (const VerdictReport& r : report.items) {
    ++s.total;
    switch (r.verdict) {
      case Verdict::kAgree: ++s.agree; break;
      case Verdict::kDisagree: ++s.disagree; break;
      case Verdict::kInconclusive: ++s.inconclusive; break;
      case Verdict::kError: ++s.errors; break;
    }
  }
  return report;
}

Json report_to_json(const VerdictReport& r) {
  Json j;
  j["graph"] = r.graph_id;
  j["rule"] = std::string(rule_name(r.rule));
  j["h"] = r.params.h;
  j["params"] = {{"s1", r.params.s1},
                 {"s2", r.params.s2},
                 {"blocker_mode", blocker_mode_name(r.params)},
                 {"strict", r.params.strict}};
  j["graph_vertices"] = r.graph_vertices;
  j["graph_edges"] = r.graph_edges;
  if (r.verdict == Verdict::kError) {
    j["verdict"] = std::string(verdict_name(r.verdict));
    j["error"] = r.error;
    return j;
  }
  j["k"] = r.k;
  j["beta"] = r.beta;
  j["trivially_no"] = r.trivially_no;
  j["clique_found"] = r.clique_found;
  j["clique"] = r.clique;
  j["budget_feasible"] = r.budget_feasible;
  j["decide_status"] = std::string(status_name(r.decide_status));
  if (r.cost) {
    j["cost"] = *r.cost;
    j["committee"] = r.committee;
  }
  if (r.optimum) j["optimum"] = *r.optimum;
  if (r.claim_holds) j["claim_holds"] = *r.claim_holds;
  if (r.witness_cost) {
    j["witness_cost"] = *r.witness_cost;
    j["witness_exact"] = r.witness_exact.value_or(false);
  }
  j["nodes"] = r.nodes;
  j["agree"] = r.agree;
  j["verdict"] = std::string(verdict_name(r.verdict));
  if (r.escalated_blocker_size) {
    j["escalation"] = {{"blocker_size", *r.escalated_blocker_size},
                       {"agree", r.escalated_agree.value_or(false)}};
  }
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

Json batch_to_json(const BatchReport& report) {
  Json items = Json::array();
  for (const VerdictReport& r : report.items) items.push_back(report_to_json(r));
  const BatchSummary& s = report.summary;
  Json j;
  j["reports"] = std::move(items);
  j["summary"] = {{"total", s.total},
                  {"agree", s.agree},
                  {"disagree", s.disagree},
                  {"inconclusive", s.inconclusive},
                  {"errors", s.errors}};
  return j;
}

std::string batch_table(const BatchReport& report) {
  std::vector<std::array<std::string, 7>> rows;
  rows.push_back({"graph", "n", "m", "clique", "feasible", "cost", "verdict"});
  for (const VerdictReport& r : report.items) {
    rows.push_back({r.graph_id, std::to_string(r.graph_vertices),
                    std::to_string(r.graph_edges),
                    r.clique_found ? "yes" : "no",
                    r.budget_feasible ? "yes" : "no",
                    r.cost ? std::to_string(*r.cost) : "-",
                    std::string(verdict_name(r.verdict))});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      if (c + 1 < row.size()) cell.resize(width[c] + 2, ' ');
      line += cell;
    }
    os << line << '\n';
  }
  const BatchSummary& s = report.summary;
  os << "total " << s.total << ", agree " << s.agree << ", disagree "
     << s.disagree << ", inconclusive " << s.inconclusive << ", errors "
     << s.errors << '\n';
  return os.str();
}

}  // namespace ccm
