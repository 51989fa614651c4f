#ifndef CCM_COMMITTEE_SEARCH_HPP_
#define CCM_COMMITTEE_SEARCH_HPP_

#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ccm/assignment.hpp"
#include "ccm/profile.hpp"

namespace ccm {

struct SolveLimits {
  std::uint64_t max_nodes = 10'000'000;
  double time_cap_seconds = 60.0;
};

// Include/exclude branch and bound over candidate alternatives for the
// committee-level problem of either rule.
//
// Only voter/alternative pairs ranked at most `rank_cap` are ever used, so
// the search is exact for every target cost <= rank_cap. Each voter's
// "window" is its order truncated at rank_cap; candidates are the
// alternatives that occur in some window.
//
// Pruning:
//  * bound = max of
//      - sum of best available ranks over included+undecided, plus for each
//        included member (and the cheapest r members still to be chosen) the
//        `need` smallest excess ranks it forces on distinct voters;
//      - best ranks over included minus the r largest single-alternative
//        improvements among undecided ones (r = open committee slots).
//  * dominance: if c is ranked no worse than c' by every voter (ranks capped
//    at rank_cap + 1), some optimum never holds c' without c. Each candidate
//    gets one dominating parent and may only enter after it.
//  * members with fewer than `need` window voters are excluded up front.
class CommitteeSearch {
 public:
  static constexpr std::int64_t kInfeasible =
      std::numeric_limits<std::int64_t>::max() / 4;

  CommitteeSearch(const PreferenceProfile& profile, int k, RuleKind rule,
                  std::int64_t rank_cap, bool use_dominance = true);

  struct Result {
    bool found = false;
    bool aborted = false;
    std::vector<int> committee;  // ascending alternative indices
    AssignmentResult assignment;
    std::uint64_t nodes = 0;
  };

  // Searches for committees of cost <= target (target <= rank_cap). With
  // stop_at_first the first witness is returned; otherwise the target keeps
  // tightening and the last witness found is optimal among costs <= target.
  Result run(std::int64_t target, bool stop_at_first,
             const SolveLimits& limits);

  // Bound for the node where `included` are in, `excluded` are out and every
  // other candidate is undecided. Ignores dominance. Returns kInfeasible when
  // no completion exists.
  std::int64_t lower_bound(std::span<const int> included,
                           std::span<const int> excluded);

  std::span<const int> candidates() const { return cand_alt_; }
  int parent_of(int alternative) const;

 private:
  enum : std::int8_t { kUndecided = 0, kIn = 1, kOut = 2 };

  struct Entry {
    int voter;
    int rank;
  };

  std::int64_t evaluate(int& branch_cand);
  void search(int depth);
  void set_state(int cand, std::int8_t s);
  void exclude_subtree(int cand);
  void undo_to(std::size_t mark);
  bool limits_hit();
  void leaf();
  std::int64_t smallest_excess(int cand) const;
  void build_dominance();

  const PreferenceProfile& profile_;
  int k_;
  RuleKind rule_;
  int n_;
  std::int64_t rank_cap_;
  int unreachable_rank_;
  int need_;

  std::vector<int> cand_alt_;                // candidate -> alternative
  std::vector<int> alt_cand_;                // alternative -> candidate / -1
  std::vector<std::vector<int>> window_;     // voter -> candidates by rank
  std::vector<std::vector<Entry>> voters_;   // candidate -> window voters
  std::vector<int> parent_;                  // candidate -> candidate / -1
  std::vector<std::vector<int>> children_;
  std::vector<std::int8_t> static_out_;

  // search state
  std::vector<std::int8_t> state_;
  std::vector<std::pair<int, std::int8_t>> trail_;
  int num_in_ = 0;
  int num_undecided_ = 0;

  // scratch
  std::vector<int> best_avail_;
  std::vector<int> best_in_;
  std::vector<int> coverage_;
  std::vector<std::int64_t> slot_buf_;
  mutable std::vector<int> excess_buf_;

  std::int64_t target_ = 0;
  bool stop_at_first_ = false;
  bool stop_ = false;
  SolveLimits limits_;
  std::chrono::steady_clock::time_point start_;
  Result result_;
};

}  // namespace ccm

#endif  // CCM_COMMITTEE_SEARCH_HPP_
