#include "ccm/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

// Collects alternatives with roles and voters with the head of their
// order; finish() appends every unlisted alternative in ascending order.
class GadgetBuilder {
 public:
  int add_alternative(AlternativeRole role) {
    out_.alternatives.push_back(role);
    return static_cast<int>(out_.alternatives.size()) - 1;
  }

  std::vector<int> add_block(AltKind kind, int owner, int size) {
    std::vector<int> ids(size);
    for (int t = 0; t < size; ++t) ids[t] = add_alternative({kind, owner, t});
    return ids;
  }

  void add_voter(VoterRole role, std::vector<int> head) {
    out_.voters.push_back(role);
    heads_.push_back(std::move(head));
  }

  GadgetProfile finish() {
    const int m = static_cast<int>(out_.alternatives.size());
    std::vector<int> stamp(m, -1);
    out_.orders.reserve(heads_.size());
    for (std::size_t v = 0; v < heads_.size(); ++v) {
      std::vector<int> order = std::move(heads_[v]);
      order.reserve(m);
      for (int c : order) stamp[c] = static_cast<int>(v);
      for (int c = 0; c < m; ++c) {
        if (stamp[c] != static_cast<int>(v)) order.push_back(c);
      }
      out_.orders.push_back(std::move(order));
    }
    heads_.clear();
    return std::move(out_);
  }

 private:
  GadgetProfile out_;
  std::vector<std::vector<int>> heads_;
};

std::vector<int> concat(std::initializer_list<int> front,
                        const std::vector<int>& block) {
  std::vector<int> out(front);
  out.insert(out.end(), block.begin(), block.end());
  return out;
}

struct BaseIds {
  std::vector<int> vertex, dummy, edge;
  std::vector<std::vector<int>> vertex_blockers, edge_blockers;
};

BaseIds add_base_alternatives(GadgetBuilder& b, const Graph& g,
                              const BlockerSizes& sizes) {
  const int nv = g.num_vertices();
  const int ne = g.num_edges();
  BaseIds ids;
  for (int i = 0; i < nv; ++i) {
    ids.vertex.push_back(b.add_alternative({AltKind::kVertex, i, 0}));
  }
  for (int i = 0; i < nv; ++i) {
    ids.dummy.push_back(b.add_alternative({AltKind::kDummy, i, 0}));
  }
  for (int i = 0; i < nv; ++i) {
    ids.vertex_blockers.push_back(
        b.add_block(AltKind::kVertexBlocker, i, sizes.vertex));
  }
  for (int j = 0; j < ne; ++j) {
    ids.edge.push_back(b.add_alternative({AltKind::kEdge, j, 0}));
  }
  for (int j = 0; j < ne; ++j) {
    ids.edge_blockers.push_back(
        b.add_block(AltKind::kEdgeBlocker, j, sizes.edge));
  }
  return ids;
}

void add_base_voters(GadgetBuilder& b, const Graph& g, const BaseIds& ids,
                     int s1, int s2) {
  for (int i = 0; i < g.num_vertices(); ++i) {
    for (int z = 0; z < s1; ++z) {
      b.add_voter({VoterKind::kVertexVoter, i, 0, z, 0},
                  concat({ids.dummy[i], ids.vertex[i]}, ids.vertex_blockers[i]));
    }
  }
  for (int j = 0; j < g.num_edges(); ++j) {
    const Edge e = g.edges()[j];
    for (int endpoint : {e.u, e.v}) {
      for (int z = 0; z < s2; ++z) {
        b.add_voter({VoterKind::kEdgeVoter, j, endpoint, z, 0},
                    concat({ids.edge[j], ids.vertex[endpoint]},
                           ids.edge_blockers[j]));
      }
    }
  }
}

void validate_common(const ReductionParams& p) {
  if (p.h < 3) throw InputError("clique size h must be at least 3");
  if (p.s1 < 1 || p.s2 < 0) throw InputError("s1 and s2 must be positive");
}

ReductionParams resolve(ReductionParams p) {
  if (p.s2 == 0) p.s2 = p.h;
  return p;
}

BlockerSizes blocker_sizes(const ReductionParams& p, const Graph& g,
                           std::int64_t) {
  if (p.blocker_mode == BlockerMode::kPaperLiteral) {
    const int nv = g.num_vertices();
    const int ne = g.num_edges();
    return {nv, ne, nv, ne, nv + ne};
  }
  const int b = p.blocker_size;
  return {b, b, b, b, b};
}

// Resolves the compact size, applies strict checks and records soundness
// warnings.
void finish_params(ReducedInstance& inst, const Graph& g) {
  ReductionParams& p = inst.params;
  const std::int64_t nv = g.num_vertices();
  const std::int64_t ne = g.num_edges();
  if (p.blocker_mode == BlockerMode::kCompact) {
    if (p.blocker_size == 0) {
      p.blocker_size = static_cast<int>(inst.beta + 1);
    } else if (p.blocker_size < inst.beta + 1) {
      throw InputError("compact blocker size " +
                       std::to_string(p.blocker_size) +
                       " must be at least beta + 1 = " +
                       std::to_string(inst.beta + 1));
    }
  }
  if (p.strict) {
    const std::int64_t cube = static_cast<std::int64_t>(p.h) * p.h * p.h;
    if (std::min(nv, ne) <= inst.beta) {
      throw PreconditionError("strict: min(n̂, m̂) = " +
                              std::to_string(std::min(nv, ne)) +
                              " does not exceed beta = " +
                              std::to_string(inst.beta));
    }
    if (nv < cube || ne < cube) {
      throw PreconditionError("strict: n̂ and m̂ must be at least h^3 = " +
                              std::to_string(cube));
    }
  }
  if (p.blocker_mode == BlockerMode::kPaperLiteral &&
      std::min(nv, ne) <= inst.beta) {
    inst.warnings.push_back(
        "graph-sized blocker sets (n̂ = " + std::to_string(nv) +
        ", m̂ = " + std::to_string(ne) + ") do not exceed beta = " +
        std::to_string(inst.beta) + "; equivalence is not guaranteed");
  }
  inst.blockers = blocker_sizes(p, g, inst.beta);
  inst.graph_vertices = static_cast<int>(nv);
  inst.graph_edges = static_cast<int>(ne);
  inst.trivially_no = ne < choose2(p.h) || nv < p.h;
}

void attach(ReducedInstance& inst, GadgetProfile gadget) {
  inst.alternative_roles = std::move(gadget.alternatives);
  inst.voter_roles = std::move(gadget.voters);
  for (std::size_t c = 0; c < inst.alternative_roles.size(); ++c) {
    inst.alternative_by_role.emplace(inst.alternative_roles[c],
                                     static_cast<int>(c));
  }
  for (std::size_t v = 0; v < inst.voter_roles.size(); ++v) {
    inst.voter_by_role.emplace(inst.voter_roles[v], static_cast<int>(v));
  }
  inst.profile = PreferenceProfile::from_orders(gadget.orders);
}

void require_clique(const Graph& g, std::span<const int> clique,
                    const ReducedInstance& inst) {
  if (inst.trivially_no) {
    throw InputError("instance is trivially negative; no witness exists");
  }
  if (static_cast<int>(clique.size()) != inst.params.h ||
      !is_clique(g, clique)) {
    throw InputError("vertex set is not an " + std::to_string(inst.params.h) +
                     "-clique of the graph");
  }
  if (g.num_vertices() != inst.graph_vertices ||
      g.num_edges() != inst.graph_edges) {
    throw InputError("graph does not match the reduced instance");
  }
}

// Shared forward assignment for the base voters; Monroe extends it.
std::vector<AlternativeId> base_witness(const Graph& g,
                                        std::span<const int> clique,
                                        const ReducedInstance& inst,
                                        std::vector<char>& in_clique) {
  in_clique.assign(g.num_vertices(), 0);
  for (int v : clique) in_clique[v] = 1;
  auto alt = [&](AltKind kind, int owner) {
    return AlternativeId{inst.alternative({kind, owner, 0})};
  };
  std::vector<AlternativeId> targets(inst.voter_roles.size());
  for (std::size_t v = 0; v < inst.voter_roles.size(); ++v) {
    const VoterRole& r = inst.voter_roles[v];
    if (r.kind == VoterKind::kVertexVoter) {
      targets[v] = in_clique[r.owner] ? alt(AltKind::kVertex, r.owner)
                                      : alt(AltKind::kDummy, r.owner);
    } else if (r.kind == VoterKind::kEdgeVoter) {
      const Edge e = g.edges()[r.owner];
      targets[v] = in_clique[e.u] && in_clique[e.v]
                       ? alt(AltKind::kVertex, r.endpoint)
                       : alt(AltKind::kEdge, r.owner);
    }
  }
  return targets;
}

}  // namespace

std::string_view kind_name(AltKind kind) {
  switch (kind) {
    case AltKind::kVertex: return "VertexAlt";
    case AltKind::kDummy: return "Dummy";
    case AltKind::kVertexBlocker: return "VertexBlocker";
    case AltKind::kEdge: return "EdgeAlt";
    case AltKind::kEdgeBlocker: return "EdgeBlocker";
    case AltKind::kVertexSideBlocker: return "VertexSideBlocker";
    case AltKind::kEdgeSideBlocker: return "EdgeSideBlocker";
    case AltKind::kX: return "XAlt";
    case AltKind::kY: return "YAlt";
    case AltKind::kXYBlocker: return "FBlocker";
  }
  return "?";
}

std::string_view kind_name(VoterKind kind) {
  switch (kind) {
    case VoterKind::kVertexVoter: return "VertexVoter";
    case VoterKind::kEdgeVoter: return "EdgeVoter";
    case VoterKind::kXSideVoter: return "XSideVoter";
    case VoterKind::kYSideVoter: return "YSideVoter";
    case VoterKind::kXSpecial: return "XSpecial";
    case VoterKind::kYSpecial: return "YSpecial";
  }
  return "?";
}

std::string describe(const AlternativeRole& role) {
  std::string out(kind_name(role.kind));
  out += "(" + std::to_string(role.owner);
  switch (role.kind) {
    case AltKind::kVertexBlocker:
    case AltKind::kEdgeBlocker:
    case AltKind::kVertexSideBlocker:
    case AltKind::kEdgeSideBlocker:
    case AltKind::kXYBlocker:
      out += "," + std::to_string(role.index);
      break;
    default:
      break;
  }
  return out + ")";
}

std::string describe(const VoterRole& role) {
  std::string out(kind_name(role.kind));
  switch (role.kind) {
    case VoterKind::kVertexVoter:
    case VoterKind::kYSideVoter:
      return out + "(" + std::to_string(role.owner) + "," +
             std::to_string(role.z) + ")";
    case VoterKind::kEdgeVoter:
      return out + "(" + std::to_string(role.owner) + "," +
             std::to_string(role.endpoint) + "," + std::to_string(role.z) +
             ")";
    case VoterKind::kXSideVoter:
      return out + "(" + std::to_string(role.owner) + "," +
             std::to_string(role.z) + "," + std::to_string(role.copy) + ")";
    case VoterKind::kXSpecial:
    case VoterKind::kYSpecial:
      return out + "(" + std::to_string(role.z) + "," +
             std::to_string(role.copy) + ")";
  }
  return out;
}

const PreferenceProfile& ReducedInstance::prof() const {
  if (!profile) throw InputError("trivially negative instance has no profile");
  return *profile;
}

int ReducedInstance::alternative(const AlternativeRole& role) const {
  auto it = alternative_by_role.find(role);
  if (it == alternative_by_role.end()) {
    throw InputError("no alternative with role " + describe(role));
  }
  return it->second;
}

std::int64_t choose2(std::int64_t h) { return h * (h - 1) / 2; }

GadgetProfile base_construction(const Graph& g, int s1, int s2,
                                const BlockerSizes& sizes) {
  GadgetBuilder b;
  const BaseIds ids = add_base_alternatives(b, g, sizes);
  add_base_voters(b, g, ids, s1, s2);
  return b.finish();
}

ReducedInstance cc_reduction(const Graph& g, const ReductionParams& params) {
  validate_common(params);
  ReducedInstance inst;
  inst.rule = RuleKind::kCC;
  inst.params = resolve(params);
  const ReductionParams& p = inst.params;
  const std::int64_t c2 = choose2(p.h);
  inst.k = static_cast<int>(g.num_edges() - c2 + g.num_vertices());
  inst.beta = static_cast<std::int64_t>(p.s1) * p.h + p.s2 * 2 * c2;
  finish_params(inst, g);
  if (inst.trivially_no) return inst;
  attach(inst, base_construction(g, p.s1, p.s2, inst.blockers));
  return inst;
}

ReducedInstance monroe_reduction(const Graph& g,
                                 const ReductionParams& params) {
  validate_common(params);
  ReducedInstance inst;
  inst.rule = RuleKind::kMonroe;
  inst.params = resolve(params);
  const ReductionParams& p = inst.params;
  const std::int64_t h = p.h;
  const std::int64_t c2 = choose2(h);
  inst.L = static_cast<int>(p.s1 + p.s2 * (h - 1));
  inst.x_count = p.s2;
  inst.y_count = inst.L - 2 * p.s2;
  if (inst.y_count < 0 || inst.L < h * (h - 1) || inst.L < c2) {
    throw InputError("s1, s2 leave a negative voter group for the Monroe "
                     "extension");
  }
  inst.k = static_cast<int>(g.num_edges() + g.num_vertices() - c2 + p.s1 +
                            p.s2 * (h - 2));
  inst.beta = p.s1 * h + 2 * c2 * p.s2 + c2 * inst.L;
  finish_params(inst, g);
  if (inst.trivially_no) return inst;

  const BlockerSizes& sizes = inst.blockers;
  GadgetBuilder b;
  const BaseIds ids = add_base_alternatives(b, g, sizes);
  std::vector<std::vector<int>> vertex_side, edge_side, xy_blockers;
  for (int i = 0; i < g.num_vertices(); ++i) {
    vertex_side.push_back(
        b.add_block(AltKind::kVertexSideBlocker, i, sizes.vertex_side));
  }
  for (int j = 0; j < g.num_edges(); ++j) {
    edge_side.push_back(
        b.add_block(AltKind::kEdgeSideBlocker, j, sizes.edge_side));
  }
  std::vector<int> xs, ys;
  for (int z = 0; z < inst.x_count; ++z) {
    xs.push_back(b.add_alternative({AltKind::kX, z, 0}));
  }
  for (int z = 0; z < inst.y_count; ++z) {
    ys.push_back(b.add_alternative({AltKind::kY, z, 0}));
  }
  for (int t = 0; t < inst.x_count + inst.y_count; ++t) {
    xy_blockers.push_back(b.add_block(AltKind::kXYBlocker, t, sizes.xy));
  }

  add_base_voters(b, g, ids, p.s1, p.s2);
  for (int i = 0; i < g.num_vertices(); ++i) {
    for (int z = 0; z < inst.x_count; ++z) {
      for (int copy = 0; copy < h - 1; ++copy) {
        b.add_voter({VoterKind::kXSideVoter, i, 0, z, copy},
                    concat({ids.dummy[i], xs[z]}, vertex_side[i]));
      }
    }
  }
  for (int j = 0; j < g.num_edges(); ++j) {
    for (int z = 0; z < inst.y_count; ++z) {
      b.add_voter({VoterKind::kYSideVoter, j, 0, z, 0},
                  concat({ids.edge[j], ys[z]}, edge_side[j]));
    }
  }
  for (int z = 0; z < inst.x_count; ++z) {
    for (int copy = 0; copy < inst.L - h * (h - 1); ++copy) {
      b.add_voter({VoterKind::kXSpecial, 0, 0, z, copy},
                  concat({xs[z]}, xy_blockers[z]));
    }
  }
  for (int z = 0; z < inst.y_count; ++z) {
    for (int copy = 0; copy < inst.L - c2; ++copy) {
      b.add_voter({VoterKind::kYSpecial, 0, 0, z, copy},
                  concat({ys[z]}, xy_blockers[inst.x_count + z]));
    }
  }
  attach(inst, b.finish());
  return inst;
}

ReducedInstance make_reduction(RuleKind rule, const Graph& g,
                               const ReductionParams& params) {
  return rule == RuleKind::kCC ? cc_reduction(g, params)
                               : monroe_reduction(g, params);
}

Assignment cc_witness(const Graph& g, std::span<const int> clique,
                      const ReducedInstance& inst) {
  require_clique(g, clique, inst);
  std::vector<char> in_clique;
  return Assignment(base_witness(g, clique, inst, in_clique));
}

Assignment monroe_witness(const Graph& g, std::span<const int> clique,
                          const ReducedInstance& inst) {
  require_clique(g, clique, inst);
  if (inst.rule != RuleKind::kMonroe) {
    throw InputError("monroe_witness needs a Monroe instance");
  }
  std::vector<char> in_clique;
  std::vector<AlternativeId> targets = base_witness(g, clique, inst, in_clique);
  auto alt = [&](AltKind kind, int owner) {
    return AlternativeId{inst.alternative({kind, owner, 0})};
  };
  for (std::size_t v = 0; v < inst.voter_roles.size(); ++v) {
    const VoterRole& r = inst.voter_roles[v];
    switch (r.kind) {
      case VoterKind::kXSideVoter:
        targets[v] = in_clique[r.owner] ? alt(AltKind::kX, r.z)
                                        : alt(AltKind::kDummy, r.owner);
        break;
      case VoterKind::kYSideVoter: {
        const Edge e = g.edges()[r.owner];
        targets[v] = in_clique[e.u] && in_clique[e.v]
                         ? alt(AltKind::kY, r.z)
                         : alt(AltKind::kEdge, r.owner);
        break;
      }
      case VoterKind::kXSpecial:
        targets[v] = alt(AltKind::kX, r.z);
        break;
      case VoterKind::kYSpecial:
        targets[v] = alt(AltKind::kY, r.z);
        break;
      default:
        break;
    }
  }
  return Assignment(std::move(targets));
}

Assignment forward_witness(const Graph& g, std::span<const int> clique,
                           const ReducedInstance& inst) {
  return inst.rule == RuleKind::kCC ? cc_witness(g, clique, inst)
                                    : monroe_witness(g, clique, inst);
}

InstanceStats instance_stats(const ReducedInstance& inst) {
  InstanceStats s;
  s.k = inst.k;
  s.beta = inst.beta;
  s.L = inst.L;
  if (inst.trivially_no) return s;
  const PreferenceProfile& p = inst.prof();
  s.m = p.num_alternatives();
  s.n = p.num_voters();
  for (const auto& r : inst.alternative_roles) {
    ++s.alternative_counts[std::string(kind_name(r.kind))];
  }
  for (const auto& r : inst.voter_roles) {
    ++s.voter_counts[std::string(kind_name(r.kind))];
  }

  auto fail = [](const std::string& what) {
    throw ConstructionError("reduced instance identity violated: " + what);
  };
  if (static_cast<int>(inst.alternative_roles.size()) != s.m ||
      static_cast<int>(inst.alternative_by_role.size()) != s.m) {
    fail("alternative role map is not total and injective");
  }
  if (static_cast<int>(inst.voter_roles.size()) != s.n ||
      static_cast<int>(inst.voter_by_role.size()) != s.n) {
    fail("voter role map is not total and injective");
  }
  const std::int64_t base_voters =
      static_cast<std::int64_t>(inst.params.s1) * inst.graph_vertices +
      2LL * inst.params.s2 * inst.graph_edges;
  const int counted_base = s.voter_counts["VertexVoter"] +
                           s.voter_counts["EdgeVoter"];
  if (counted_base != base_voters) fail("base voters != s1 n̂ + 2 s2 m̂");
  if (inst.rule == RuleKind::kCC) {
    if (s.n != base_voters) fail("n != s1 n̂ + 2 s2 m̂");
  } else {
    if (2 * inst.x_count + inst.y_count != inst.L) fail("2|X| + |Y| != L");
    if (static_cast<std::int64_t>(s.n) !=
        static_cast<std::int64_t>(inst.L) * inst.k) {
      fail("n = " + std::to_string(s.n) + " != L k = " +
           std::to_string(static_cast<std::int64_t>(inst.L) * inst.k));
    }
  }
  return s;
}

}  // namespace ccm
