#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "ccm/assignment.hpp"
#include "ccm/errors.hpp"
#include "ccm/graph.hpp"
#include "ccm/harness.hpp"
#include "ccm/json_io.hpp"
#include "ccm/profile.hpp"
#include "ccm/reduction.hpp"
#include "ccm/solvers.hpp"

namespace ccm::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string rule = "cc";
  std::string graph;
  std::string profile;
  std::string assignment;
  int h = 3;
  int k = 0;
  std::optional<long long> budget;
  std::string blocker_size;
  bool strict = false;
  std::optional<long long> seed;
  int jobs = 1;
  double time_cap = 60.0;
  std::string out;
  std::string meta;
  std::string clique;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return text.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write " + tmp.string());
    os << content;
    os.flush();
    if (!os) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path);
  }
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_atomic(cfg.out, text);
  }
}

ReductionParams reduction_params(const Config& cfg) {
  ReductionParams p;
  p.h = cfg.h;
  p.strict = cfg.strict;
  if (cfg.blocker_size == "paper") {
    p.blocker_mode = BlockerMode::kPaperLiteral;
  } else if (!cfg.blocker_size.empty()) {
    std::size_t used = 0;
    int b = 0;
    try {
      b = std::stoi(cfg.blocker_size, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cfg.blocker_size.size() || b < 1) {
      throw UsageError("--blocker-size takes a positive integer or 'paper'");
    }
    p.blocker_size = b;
  }
  return p;
}

SolveLimits limits(const Config& cfg) {
  SolveLimits l;
  l.time_cap_seconds = cfg.time_cap;
  return l;
}

std::vector<int> parse_clique(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError("--clique entry \"" + item + "\" is not a vertex");
    }
    out.push_back(v);
  }
  return out;
}

Json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int run_gen_reduction(const Config& cfg, std::ostream& out) {
  const Graph g = parse_graph(read_file(cfg.graph));
  const ReducedInstance inst =
      make_reduction(parse_rule(cfg.rule), g, reduction_params(cfg));
  if (inst.trivially_no) {
    throw InputError("graph has fewer than " + std::to_string(cfg.h) +
                     " vertices or " + std::to_string(choose2(cfg.h)) +
                     " edges; the instance is trivially negative");
  }
  const InstanceStats s = instance_stats(inst);
  write_atomic(cfg.out, serialize_profile(inst.prof()));
  if (!cfg.meta.empty()) write_atomic(cfg.meta, to_text(metadata_to_json(inst)));
  out << "m=" << s.m << " n=" << s.n << " k=" << s.k << " beta=" << s.beta;
  if (inst.rule == RuleKind::kMonroe) out << " L=" << s.L;
  out << '\n';
  for (const std::string& w : inst.warnings) out << "warning: " << w << '\n';
  return 0;
}

int run_solve(const Config& cfg, std::ostream& out) {
  const PreferenceProfile p = parse_profile(read_file(cfg.profile));
  const SolveOutcome o =
      solve_exact(p, cfg.k, parse_rule(cfg.rule),
                  cfg.budget ? std::optional<std::int64_t>(*cfg.budget)
                             : std::nullopt,
                  limits(cfg));
  emit(cfg, to_text(outcome_to_json(o)), out);
  return o.status == SolveStatus::kLimitReached ? 3 : 0;
}

int run_eval(const Config& cfg, std::ostream& out) {
  const PreferenceProfile p = parse_profile(read_file(cfg.profile));
  const Json j = parse_json_file(cfg.assignment);
  const Assignment a = assignment_from_json(j, p.num_voters());
  for (AlternativeId c : a.targets()) {
    if (c.index < 0 || c.index >= p.num_alternatives()) {
      throw InputError("assignment names alternative " +
                       std::to_string(c.index) + " outside the profile");
    }
  }
  int k = cfg.k;
  if (k == 0) k = j.contains("k") ? j["k"].get<int>()
                                  : static_cast<int>(a.image().size());
  const RuleKind rule = parse_rule(cfg.rule);
  const ValidationReport vr = validate_assignment(p, a, k, rule);
  Json r;
  r["rule"] = std::string(rule_name(rule));
  r["k"] = k;
  r["cost"] = misrepresentation_sum(p, a);
  r["used"] = vr.used_count;
  r["valid"] = vr.valid;
  r["violations"] = vr.violations;
  Json usage = Json::object();
  for (const auto& [c, count] : vr.usage_histogram) {
    usage[std::to_string(c)] = count;
  }
  r["usage"] = std::move(usage);
  emit(cfg, to_text(r), out);
  return vr.valid ? 0 : 1;
}

int run_witness(const Config& cfg, std::ostream& out) {
  const Graph g = parse_graph(read_file(cfg.graph));
  const ReducedInstance inst =
      make_reduction(parse_rule(cfg.rule), g, reduction_params(cfg));
  std::vector<int> clique;
  if (!cfg.clique.empty()) {
    clique = parse_clique(cfg.clique);
  } else if (auto found = find_clique(g, cfg.h)) {
    clique = *found;
  } else {
    throw InputError("graph has no " + std::to_string(cfg.h) + "-clique");
  }
  const Assignment w = forward_witness(g, clique, inst);
  const std::int64_t cost = misrepresentation_sum(inst.prof(), w);
  emit(cfg, to_text(assignment_to_json(w, cost)), out);
  if (!cfg.out.empty()) {
    out << "cost=" << cost << " beta=" << inst.beta
        << " k=" << w.image().size() << '\n';
  }
  return 0;
}

int run_clique(const Config& cfg, std::ostream& out) {
  const Graph g = parse_graph(read_file(cfg.graph));
  if (cfg.h < 1) throw InputError("--h must be positive");
  const auto c = find_clique(g, cfg.h);
  Json j;
  j["h"] = cfg.h;
  j["clique"] = c ? Json(*c) : Json(nullptr);
  emit(cfg, to_text(j), out);
  return 0;
}

int run_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph(read_file(cfg.graph));
  const VerdictReport r =
      verify_equivalence(g, parse_rule(cfg.rule), reduction_params(cfg),
                         limits(cfg), std::filesystem::path(cfg.graph)
                                          .filename()
                                          .string());
  emit(cfg, to_text(report_to_json(r)), out);
  err << "elapsed " << r.seconds << "s\n";
  switch (r.verdict) {
    case Verdict::kAgree: return 0;
    case Verdict::kDisagree: return 2;
    case Verdict::kError: throw InputError(r.error);
    case Verdict::kInconclusive: return 3;
  }
  return 3;
}

int run_batch(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::string source = cfg.graph;
  if (cfg.seed && source.rfind("random:", 0) == 0 &&
      source.find("seed=") == std::string::npos) {
    source += ",seed=" + std::to_string(*cfg.seed);
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<GraphItem> graphs = graph_source(source);
  const BatchReport report =
      batch_verify(graphs, parse_rule(cfg.rule), reduction_params(cfg),
                   limits(cfg), cfg.jobs);
  if (!cfg.out.empty()) write_atomic(cfg.out, to_text(batch_to_json(report)));
  out << batch_table(report);
  err << "elapsed "
      << std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
             .count()
      << "s\n";
  return report.exit_code();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Config cfg;
  CLI::App app{"Committee selection under CC and Monroe, and the clique "
               "reductions for them"};
  app.name("ccm");
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  auto add_rule = [&](CLI::App* sub) {
    sub->add_option("--rule", cfg.rule, "cc or monroe")
        ->check(CLI::IsMember({"cc", "monroe"}));
  };
  auto add_h = [&](CLI::App* sub) {
    sub->add_option("--h", cfg.h, "clique size")->required();
  };
  auto add_blockers = [&](CLI::App* sub) {
    sub->add_option("--blocker-size", cfg.blocker_size,
                    "compact blocker size, or 'paper'");
    sub->add_flag("--strict", cfg.strict,
                  "refuse graphs below the asymptotic size preconditions");
  };
  auto add_time = [&](CLI::App* sub) {
    sub->add_option("--time-cap", cfg.time_cap, "seconds per solve")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand("gen-reduction",
                                     "build the reduced voting instance");
  add_rule(gen);
  gen->add_option("--graph", cfg.graph, "graph file")->required();
  add_h(gen);
  add_blockers(gen);
  gen->add_option("--out", cfg.out, "profile output")->required();
  gen->add_option("--meta", cfg.meta, "metadata JSON output");

  CLI::App* solve = app.add_subcommand("solve", "exact committee solve");
  add_rule(solve);
  solve->add_option("--profile", cfg.profile, "profile file")->required();
  solve->add_option("--k", cfg.k, "committee size")
      ->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("--budget", cfg.budget, "cost budget")
      ->check(CLI::NonNegativeNumber);
  add_time(solve);
  solve->add_option("--out", cfg.out, "outcome JSON output");

  CLI::App* eval = app.add_subcommand("eval",
                                      "recompute cost and validity");
  add_rule(eval);
  eval->add_option("--profile", cfg.profile, "profile file")->required();
  eval->add_option("--assignment", cfg.assignment, "assignment JSON")
      ->required();
  eval->add_option("--k", cfg.k, "committee size (default: from JSON)")
      ->check(CLI::PositiveNumber);
  eval->add_option("--out", cfg.out, "report JSON output");

  CLI::App* witness = app.add_subcommand(
      "witness", "assignment built from a clique of the graph");
  add_rule(witness);
  witness->add_option("--graph", cfg.graph, "graph file")->required();
  add_h(witness);
  add_blockers(witness);
  witness->add_option("--clique", cfg.clique, "v1,v2,... (default: search)");
  witness->add_option("--out", cfg.out, "assignment JSON output");

  CLI::App* clique = app.add_subcommand("clique", "find an h-clique");
  clique->add_option("--graph", cfg.graph, "graph file")->required();
  add_h(clique);
  clique->add_option("--out", cfg.out, "JSON output");

  CLI::App* verify = app.add_subcommand(
      "verify", "compare clique existence with budget feasibility");
  add_rule(verify);
  verify->add_option("--graph", cfg.graph, "graph file")->required();
  add_h(verify);
  add_blockers(verify);
  add_time(verify);
  verify->add_option("--out", cfg.out, "report JSON output");

  CLI::App* batch = app.add_subcommand(
      "batch-verify", "verify a directory or generated family of graphs");
  add_rule(batch);
  batch->add_option("--graph", cfg.graph,
                    "directory, exhaustive:n=A[..B][,min-edges=E], or "
                    "random:n=A[..B],p=P,count=C[,seed=S]")
      ->required();
  add_h(batch);
  add_blockers(batch);
  add_time(batch);
  batch->add_option("--seed", cfg.seed, "seed for random sources");
  batch->add_option("--jobs", cfg.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  batch->add_option("--out", cfg.out, "report JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return run_gen_reduction(cfg, out);
    if (*solve) return run_solve(cfg, out);
    if (*eval) return run_eval(cfg, out);
    if (*witness) return run_witness(cfg, out);
    if (*clique) return run_clique(cfg, out);
    if (*verify) return run_verify(cfg, out, err);
    if (*batch) return run_batch(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace ccm::cli
