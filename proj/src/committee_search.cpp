#include "ccm/committee_search.hpp"

#include <algorithm>
#include <cassert>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

// Dominators of c' are looked up among the alternatives its best-placed
// voter ranks at least as high; the scan stops after this many.
constexpr int kDominatorScanLimit = 64;

std::int64_t sum_smallest(std::vector<std::int64_t>& values, int count) {
  if (count <= 0) return 0;
  if (static_cast<int>(values.size()) < count) return CommitteeSearch::kInfeasible;
  std::nth_element(values.begin(), values.begin() + (count - 1), values.end());
  std::int64_t total = 0;
  for (int i = 0; i < count; ++i) {
    total += values[i];
    if (total >= CommitteeSearch::kInfeasible) return CommitteeSearch::kInfeasible;
  }
  return total;
}

std::int64_t sum_largest(std::vector<std::int64_t>& values, int count) {
  count = std::min<int>(count, static_cast<int>(values.size()));
  if (count <= 0) return 0;
  std::nth_element(values.begin(), values.begin() + (count - 1), values.end(),
                   std::greater<>());
  std::int64_t total = 0;
  for (int i = 0; i < count; ++i) total += values[i];
  return total;
}

}  // namespace

CommitteeSearch::CommitteeSearch(const PreferenceProfile& profile, int k,
                                 RuleKind rule, std::int64_t rank_cap,
                                 bool use_dominance)
    : profile_(profile), k_(k), rule_(rule), n_(profile.num_voters()) {
  const int m = profile.num_alternatives();
  if (k < 1 || k > m) throw InputError("k must lie in [1, m]");
  if (rank_cap < 0) throw InputError("rank cap must be nonnegative");
  rank_cap_ = std::min<std::int64_t>(rank_cap, m - 1);
  unreachable_rank_ = static_cast<int>(rank_cap_) + 1;
  const QuotaInterval quota = quota_for(rule, n_, k);
  need_ = std::max(1, quota.lower);

  const int width = unreachable_rank_;
  std::vector<char> present(m, 0);
  for (int v = 0; v < n_; ++v) {
    auto order = profile.order(v);
    for (int r = 0; r < width; ++r) present[order[r]] = 1;
  }
  alt_cand_.assign(m, -1);
  for (int c = 0; c < m; ++c) {
    if (!present[c]) continue;
    alt_cand_[c] = static_cast<int>(cand_alt_.size());
    cand_alt_.push_back(c);
  }
  const int num_cands = static_cast<int>(cand_alt_.size());
  window_.resize(n_);
  voters_.resize(num_cands);
  for (int v = 0; v < n_; ++v) {
    auto order = profile.order(v);
    window_[v].reserve(width);
    for (int r = 0; r < width; ++r) {
      const int cand = alt_cand_[order[r]];
      window_[v].push_back(cand);
      voters_[cand].push_back({v, r});
    }
  }
  static_out_.assign(num_cands, 0);
  for (int c = 0; c < num_cands; ++c) {
    static_out_[c] = static_cast<int>(voters_[c].size()) < need_;
  }
  parent_.assign(num_cands, -1);
  children_.resize(num_cands);
  if (use_dominance) build_dominance();

  state_.assign(num_cands, kUndecided);
  best_avail_.resize(n_);
  best_in_.resize(n_);
  coverage_.resize(num_cands);
}

void CommitteeSearch::build_dominance() {
  const int num_cands = static_cast<int>(cand_alt_.size());
  for (int child = 0; child < num_cands; ++child) {
    const auto& entries = voters_[child];
    const Entry pivot = *std::min_element(
        entries.begin(), entries.end(),
        [](const Entry& a, const Entry& b) { return a.rank < b.rank; });
    const int scan = std::min(pivot.rank, kDominatorScanLimit);
    int best_parent = -1;
    std::int64_t best_closeness = -1;
    for (int r = 0; r <= scan; ++r) {
      const int cand = window_[pivot.voter][r];
      if (cand == child) continue;
      bool dominates = true;
      bool equal = voters_[cand].size() == entries.size();
      std::int64_t closeness = 0;
      for (const Entry& e : entries) {
        const int rc = profile_.rank(e.voter, cand_alt_[cand]);
        if (rc > e.rank) {
          dominates = false;
          break;
        }
        if (rc != e.rank) equal = false;
        closeness += rc;
      }
      if (!dominates || (equal && cand > child)) continue;
      if (closeness > best_closeness) {
        best_closeness = closeness;
        best_parent = cand;
      }
    }
    if (best_parent >= 0) {
      parent_[child] = best_parent;
      children_[best_parent].push_back(child);
    }
  }
}

int CommitteeSearch::parent_of(int alternative) const {
  const int cand = alt_cand_.at(alternative);
  if (cand < 0 || parent_[cand] < 0) return -1;
  return cand_alt_[parent_[cand]];
}

void CommitteeSearch::set_state(int cand, std::int8_t s) {
  trail_.push_back({cand, state_[cand]});
  if (state_[cand] == kUndecided) --num_undecided_;
  if (state_[cand] == kIn) --num_in_;
  state_[cand] = s;
  if (s == kUndecided) ++num_undecided_;
  if (s == kIn) ++num_in_;
}

void CommitteeSearch::exclude_subtree(int cand) {
  std::vector<int> stack{cand};
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    if (state_[c] == kOut) continue;
    assert(state_[c] == kUndecided);
    set_state(c, kOut);
    for (int child : children_[c]) stack.push_back(child);
  }
}

void CommitteeSearch::undo_to(std::size_t mark) {
  while (trail_.size() > mark) {
    auto [cand, old] = trail_.back();
    trail_.pop_back();
    if (state_[cand] == kUndecided) --num_undecided_;
    if (state_[cand] == kIn) --num_in_;
    state_[cand] = old;
    if (old == kUndecided) ++num_undecided_;
    if (old == kIn) ++num_in_;
  }
}

std::int64_t CommitteeSearch::smallest_excess(int cand) const {
  const auto& entries = voters_[cand];
  if (static_cast<int>(entries.size()) < need_) return kInfeasible;
  if (need_ == 1) {
    int best = unreachable_rank_;
    for (const Entry& e : entries) {
      best = std::min(best, e.rank - best_avail_[e.voter]);
    }
    return best;
  }
  excess_buf_.clear();
  for (const Entry& e : entries) {
    excess_buf_.push_back(e.rank - best_avail_[e.voter]);
  }
  std::nth_element(excess_buf_.begin(), excess_buf_.begin() + (need_ - 1),
                   excess_buf_.end());
  std::int64_t total = 0;
  for (int i = 0; i < need_; ++i) total += excess_buf_[i];
  return total;
}

std::int64_t CommitteeSearch::evaluate(int& branch_cand) {
  branch_cand = -1;
  const int open = k_ - num_in_;
  if (open < 0 || num_undecided_ < open) return kInfeasible;

  std::fill(coverage_.begin(), coverage_.end(), 0);
  std::int64_t free_cost = 0;
  std::int64_t in_cost = 0;
  for (int v = 0; v < n_; ++v) {
    const auto& w = window_[v];
    const int width = static_cast<int>(w.size());
    int r = 0;
    while (r < width && state_[w[r]] == kOut) ++r;
    if (r == width) return kInfeasible;
    best_avail_[v] = r;
    free_cost += r;
    ++coverage_[w[r]];
    while (r < width && state_[w[r]] != kIn) ++r;
    best_in_[v] = r < width ? r : unreachable_rank_;
    in_cost += best_in_[v];
  }

  const int num_cands = static_cast<int>(cand_alt_.size());
  std::int64_t usage_cost = 0;
  slot_buf_.clear();
  for (int c = 0; c < num_cands; ++c) {
    if (state_[c] == kIn) {
      const std::int64_t e = smallest_excess(c);
      if (e >= kInfeasible) return kInfeasible;
      usage_cost += e;
    } else if (state_[c] == kUndecided && open > 0) {
      slot_buf_.push_back(smallest_excess(c));
    }
  }
  const std::int64_t slot_cost = sum_smallest(slot_buf_, open);
  if (slot_cost >= kInfeasible) return kInfeasible;
  const std::int64_t bound = free_cost + usage_cost + slot_cost;
  if (bound > target_) return bound;

  std::int64_t gain_bound = in_cost;
  if (open > 0) {
    slot_buf_.clear();
    for (int c = 0; c < num_cands; ++c) {
      if (state_[c] != kUndecided) continue;
      std::int64_t gain = 0;
      for (const Entry& e : voters_[c]) {
        gain += std::max(0, best_in_[e.voter] - e.rank);
      }
      slot_buf_.push_back(gain);
    }
    gain_bound -= sum_largest(slot_buf_, open);
  }

  int best_cover = -1;
  for (int c = 0; c < num_cands; ++c) {
    if (state_[c] != kUndecided) continue;
    if (parent_[c] >= 0 && state_[parent_[c]] != kIn) continue;
    if (coverage_[c] > best_cover) {
      best_cover = coverage_[c];
      branch_cand = c;
    }
  }
  return std::max(bound, gain_bound);
}

bool CommitteeSearch::limits_hit() {
  if (result_.nodes > limits_.max_nodes) return true;
  if ((result_.nodes & 255) == 0) {
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > limits_.time_cap_seconds) return true;
  }
  return false;
}

void CommitteeSearch::leaf() {
  int unused;
  if (evaluate(unused) > target_) return;
  std::vector<int> members;
  members.reserve(k_);
  for (std::size_t c = 0; c < cand_alt_.size(); ++c) {
    if (state_[c] == kIn) members.push_back(cand_alt_[c]);
  }
  auto solved = assignment_within_budget(profile_, members, rule_, target_);
  if (!solved) return;
  result_.found = true;
  result_.committee = std::move(members);
  result_.assignment = *std::move(solved);
  if (stop_at_first_) {
    stop_ = true;
  } else {
    target_ = result_.assignment.cost - 1;
  }
}

void CommitteeSearch::search(int depth) {
  if (stop_) return;
  ++result_.nodes;
  if (limits_hit()) {
    stop_ = true;
    result_.aborted = true;
    return;
  }
  int branch;
  if (evaluate(branch) > target_) return;

  const std::size_t mark = trail_.size();
  const int open = k_ - num_in_;
  if (open == 0 || num_undecided_ == open) {
    const std::int8_t fill = open == 0 ? kOut : kIn;
    for (std::size_t c = 0; c < cand_alt_.size(); ++c) {
      if (state_[c] == kUndecided) set_state(static_cast<int>(c), fill);
    }
    leaf();
    undo_to(mark);
    return;
  }
  assert(branch >= 0);
  set_state(branch, kIn);
  search(depth + 1);
  undo_to(mark);
  if (stop_) return;
  exclude_subtree(branch);
  search(depth + 1);
  undo_to(mark);
}

CommitteeSearch::Result CommitteeSearch::run(std::int64_t target,
                                             bool stop_at_first,
                                             const SolveLimits& limits) {
  const int m = profile_.num_alternatives();
  if (target > rank_cap_ && rank_cap_ < m - 1) {
    throw std::logic_error("search target exceeds the rank cap");
  }
  result_ = Result{};
  target_ = target;
  stop_at_first_ = stop_at_first;
  stop_ = false;
  limits_ = limits;
  start_ = std::chrono::steady_clock::now();

  trail_.clear();
  std::fill(state_.begin(), state_.end(), kUndecided);
  num_in_ = 0;
  num_undecided_ = static_cast<int>(cand_alt_.size());
  for (std::size_t c = 0; c < cand_alt_.size(); ++c) {
    if (static_out_[c] && state_[c] == kUndecided) {
      exclude_subtree(static_cast<int>(c));
    }
  }
  if (target >= 0) search(0);
  undo_to(0);
  return result_;
}

std::int64_t CommitteeSearch::lower_bound(std::span<const int> included,
                                          std::span<const int> excluded) {
  std::fill(state_.begin(), state_.end(), kUndecided);
  num_in_ = 0;
  num_undecided_ = static_cast<int>(cand_alt_.size());
  trail_.clear();
  for (int c : included) {
    const int cand = alt_cand_.at(c);
    if (cand < 0) return kInfeasible;  // nobody ranks it within the cap
    set_state(cand, kIn);
  }
  for (int c : excluded) {
    const int cand = alt_cand_.at(c);
    if (cand >= 0 && state_[cand] == kUndecided) set_state(cand, kOut);
  }
  for (std::size_t c = 0; c < cand_alt_.size(); ++c) {
    if (static_out_[c] && state_[c] == kUndecided) {
      set_state(static_cast<int>(c), kOut);
    }
  }
  const std::int64_t saved_target = target_;
  target_ = kInfeasible;
  int unused;
  const std::int64_t bound = evaluate(unused);
  target_ = saved_target;
  undo_to(0);
  return bound;
}

}  // namespace ccm
