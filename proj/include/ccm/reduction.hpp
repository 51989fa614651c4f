#ifndef CCM_REDUCTION_HPP_
#define CCM_REDUCTION_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccm/graph.hpp"
#include "ccm/profile.hpp"

namespace ccm {

// Clique -> multiwinner reductions. Given (G, h) the generated profile has
// an assignment using exactly k alternatives with total misrepresentation
// <= beta iff G has an h-clique.
//
// Alternative layout (stable ids): vertex alternatives u_i, dummies d_i,
// vertex blockers A_i, edge alternatives e_j, edge blockers B_j, and for
// Monroe additionally side blockers Â_i, B̂_j, the sets X and Y, and the
// blockers F_c for c in X ∪ Y. Every "arbitrary but fixed" order is
// ascending global index.

enum class BlockerMode { kPaperLiteral, kCompact };

struct ReductionParams {
  int h = 3;
  int s1 = 1;
  int s2 = 0;  // 0 selects h
  BlockerMode blocker_mode = BlockerMode::kCompact;
  int blocker_size = 0;  // compact size b; 0 selects beta + 1
  bool strict = false;   // enforce min(n̂, m̂) > beta and n̂, m̂ >= h^3
};

struct BlockerSizes {
  int vertex = 0;       // |A_i|
  int edge = 0;         // |B_j|
  int vertex_side = 0;  // |Â_i|
  int edge_side = 0;    // |B̂_j|
  int xy = 0;           // |F_c|
};

enum class AltKind {
  kVertex,
  kDummy,
  kVertexBlocker,
  kEdge,
  kEdgeBlocker,
  kVertexSideBlocker,
  kEdgeSideBlocker,
  kX,
  kY,
  kXYBlocker,
};

// owner: vertex i, edge j, or z for X/Y. For kXYBlocker the owner is the
// position in X followed by Y (x_0.., then y_0..). index: position inside
// a blocker set.
struct AlternativeRole {
  AltKind kind = AltKind::kVertex;
  int owner = 0;
  int index = 0;
  friend auto operator<=>(const AlternativeRole&,
                          const AlternativeRole&) = default;
};

enum class VoterKind {
  kVertexVoter,  // v_i^z
  kEdgeVoter,    // w_j^z(u_endpoint)
  kXSideVoter,   // member `copy` of V̂_i^z
  kYSideVoter,   // ŵ_j^z
  kXSpecial,     // member `copy` of V̂_0^z
  kYSpecial,     // member `copy` of Ŵ_0^z
};

struct VoterRole {
  VoterKind kind = VoterKind::kVertexVoter;
  int owner = 0;     // vertex i or edge j (unused for specials)
  int endpoint = 0;  // edge voters only
  int z = 0;
  int copy = 0;
  friend auto operator<=>(const VoterRole&, const VoterRole&) = default;
};

std::string describe(const AlternativeRole& role);
std::string describe(const VoterRole& role);

struct GadgetProfile {
  std::vector<AlternativeRole> alternatives;
  std::vector<VoterRole> voters;
  std::vector<std::vector<int>> orders;
};

// Vertex and edge gadgets shared by both reductions.
GadgetProfile base_construction(const Graph& g, int s1, int s2,
                                const BlockerSizes& sizes);

struct ReducedInstance {
  RuleKind rule = RuleKind::kCC;
  ReductionParams params;  // s2 and blocker_size resolved
  BlockerSizes blockers;
  int graph_vertices = 0;
  int graph_edges = 0;
  int k = 0;
  std::int64_t beta = 0;
  int L = 0;  // Monroe only
  int x_count = 0;
  int y_count = 0;
  // Set when m̂ < C(h,2) or n̂ < h: the answer is "no" and no profile is
  // generated.
  bool trivially_no = false;
  std::optional<PreferenceProfile> profile;
  std::vector<AlternativeRole> alternative_roles;
  std::vector<VoterRole> voter_roles;
  std::map<AlternativeRole, int> alternative_by_role;
  std::map<VoterRole, int> voter_by_role;
  std::vector<std::string> warnings;

  const PreferenceProfile& prof() const;
  int alternative(const AlternativeRole& role) const;
};

std::int64_t choose2(std::int64_t h);

// k = m̂ - C(h,2) + n̂, beta = s1*h + 2*s2*C(h,2).
ReducedInstance cc_reduction(const Graph& g, const ReductionParams& params);

// L = s1 + s2(h-1), |X| = s2, |Y| = L - 2 s2,
// k = m̂ + n̂ - C(h,2) + s1 + s2(h-2), beta = s1*h + 2 C(h,2) s2 + C(h,2) L.
ReducedInstance monroe_reduction(const Graph& g, const ReductionParams& params);

ReducedInstance make_reduction(RuleKind rule, const Graph& g,
                               const ReductionParams& params);

// Forward-direction assignments built from a known h-clique. Throw
// InputError when `clique` is not an h-clique of g.
Assignment cc_witness(const Graph& g, std::span<const int> clique,
                      const ReducedInstance& inst);
Assignment monroe_witness(const Graph& g, std::span<const int> clique,
                          const ReducedInstance& inst);
Assignment forward_witness(const Graph& g, std::span<const int> clique,
                           const ReducedInstance& inst);

struct InstanceStats {
  int m = 0;
  int n = 0;
  int k = 0;
  std::int64_t beta = 0;
  int L = 0;
  std::map<std::string, int> alternative_counts;  // by role kind
  std::map<std::string, int> voter_counts;
};

// Throws ConstructionError when a counting identity fails: CC voters
// n = s1 n̂ + 2 s2 m̂; Monroe n = L k and 2|X| + |Y| = L; role maps total.
InstanceStats instance_stats(const ReducedInstance& inst);

std::string_view kind_name(AltKind kind);
std::string_view kind_name(VoterKind kind);

}  // namespace ccm

#endif  // CCM_REDUCTION_HPP_
