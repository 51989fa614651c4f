#ifndef CCM_PROFILE_HPP_
#define CCM_PROFILE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccm {

struct AlternativeId {
  int index = 0;
  friend auto operator<=>(const AlternativeId&, const AlternativeId&) = default;
};

struct VoterId {
  int index = 0;
  friend auto operator<=>(const VoterId&, const VoterId&) = default;
};

enum class RuleKind { kCC, kMonroe };

std::string_view rule_name(RuleKind rule);  // "cc" / "monroe"
RuleKind parse_rule(std::string_view name);

// n voters with complete strict orders over m alternatives, held as a dense
// rank matrix (rank 0 = most preferred) alongside the orders themselves.
// Immutable once built.
class PreferenceProfile {
 public:
  // orders[v] lists every alternative once, most preferred first.
  static PreferenceProfile from_orders(
      const std::vector<std::vector<int>>& orders,
      std::vector<std::string> labels = {});

  int num_alternatives() const { return m_; }
  int num_voters() const { return n_; }

  // Unchecked; callers index within [0, n) x [0, m).
  int rank(int voter, int alternative) const {
    return ranks_[static_cast<std::size_t>(voter) * m_ + alternative];
  }
  std::span<const int> ranks(int voter) const {
    return {ranks_.data() + static_cast<std::size_t>(voter) * m_,
            static_cast<std::size_t>(m_)};
  }
  std::span<const int> order(int voter) const {
    return {orders_.data() + static_cast<std::size_t>(voter) * m_,
            static_cast<std::size_t>(m_)};
  }

  // Optional display names; empty when the profile carries none.
  const std::vector<std::string>& labels() const { return labels_; }

  // Compares preferences only; labels are metadata.
  bool operator==(const PreferenceProfile& other) const {
    return m_ == other.m_ && n_ == other.n_ && ranks_ == other.ranks_;
  }

 private:
  PreferenceProfile() = default;

  int m_ = 0;
  int n_ = 0;
  std::vector<int> ranks_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
};

// Total map voter -> alternative.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<AlternativeId> targets)
      : targets_(std::move(targets)) {}

  int num_voters() const { return static_cast<int>(targets_.size()); }
  AlternativeId operator[](VoterId v) const { return targets_[v.index]; }
  std::span<const AlternativeId> targets() const { return targets_; }

  // Distinct assigned alternatives, ascending.
  std::vector<AlternativeId> image() const;

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<AlternativeId> targets_;
};

// A set of exactly k distinct alternatives, kept sorted ascending.
class Committee {
 public:
  Committee() = default;
  // Throws InputError on duplicates, out-of-range members, or an empty set.
  Committee(std::vector<AlternativeId> members, int num_alternatives);

  int k() const { return static_cast<int>(members_.size()); }
  std::span<const AlternativeId> members() const { return members_; }
  bool contains(AlternativeId c) const;

  bool operator==(const Committee&) const = default;

 private:
  std::vector<AlternativeId> members_;
};

struct ValidationReport {
  int used_count = 0;
  std::map<int, int> usage_histogram;  // alternative index -> voters
  bool valid = true;
  std::vector<std::string> violations;
};

// Checked rank lookup.
int rank_of(const PreferenceProfile& profile, VoterId v, AlternativeId c);

std::int64_t misrepresentation_sum(const PreferenceProfile& profile,
                                   const Assignment& a);

ValidationReport validate_assignment(const PreferenceProfile& profile,
                                     const Assignment& a, int k,
                                     RuleKind rule);

PreferenceProfile build_profile(const std::vector<std::vector<int>>& orders);

// Line-oriented text: '#' comments, "m <int>", "n <int>", then n rows of m
// 0-based alternative indices, most preferred first.
PreferenceProfile parse_profile(std::string_view text);
std::string serialize_profile(const PreferenceProfile& profile);

}  // namespace ccm

#endif  // CCM_PROFILE_HPP_
