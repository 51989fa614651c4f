#include "ccm/profile.hpp"

#include <algorithm>
#include <charconv>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

// Returns the row as a rank vector, or an error message when the row is not
// a permutation of {0, ..., m-1}.
std::string check_permutation(std::span<const int> order, int m) {
  if (static_cast<int>(order.size()) != m) {
    return "expected " + std::to_string(m) + " alternatives, got " +
           std::to_string(order.size());
  }
  std::vector<char> seen(m, 0);
  for (int c : order) {
    if (c < 0 || c >= m) {
      return "alternative " + std::to_string(c) + " out of range [0, " +
             std::to_string(m) + ")";
    }
    if (seen[c]) return "duplicate alternative " + std::to_string(c);
    seen[c] = 1;
  }
  return {};
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_int(std::string_view token, int& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::string_view rule_name(RuleKind rule) {
  return rule == RuleKind::kCC ? "cc" : "monroe";
}

RuleKind parse_rule(std::string_view name) {
  if (name == "cc") return RuleKind::kCC;
  if (name == "monroe") return RuleKind::kMonroe;
  throw InputError("unknown rule '" + std::string(name) +
                   "' (expected cc or monroe)");
}

PreferenceProfile PreferenceProfile::from_orders(
    const std::vector<std::vector<int>>& orders,
    std::vector<std::string> labels) {
  if (orders.empty()) throw InputError("profile needs at least one voter");
  const int m = static_cast<int>(orders.front().size());
  if (m == 0) throw InputError("profile needs at least one alternative");
  if (!labels.empty() && static_cast<int>(labels.size()) != m) {
    throw InputError("expected " + std::to_string(m) + " labels, got " +
                     std::to_string(labels.size()));
  }

  PreferenceProfile p;
  p.m_ = m;
  p.n_ = static_cast<int>(orders.size());
  p.ranks_.resize(static_cast<std::size_t>(p.n_) * m);
  p.orders_.reserve(p.ranks_.size());
  for (int v = 0; v < p.n_; ++v) {
    std::string err = check_permutation(orders[v], m);
    if (!err.empty()) {
      throw InputError("voter " + std::to_string(v) + ": " + err);
    }
    for (int r = 0; r < m; ++r) {
      p.ranks_[static_cast<std::size_t>(v) * m + orders[v][r]] = r;
    }
    p.orders_.insert(p.orders_.end(), orders[v].begin(), orders[v].end());
  }
  p.labels_ = std::move(labels);
  return p;
}

std::vector<AlternativeId> Assignment::image() const {
  std::vector<AlternativeId> out(targets_.begin(), targets_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Committee::Committee(std::vector<AlternativeId> members,
                     int num_alternatives)
    : members_(std::move(members)) {
  if (members_.empty()) throw InputError("committee must not be empty");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const int c = members_[i].index;
    if (c < 0 || c >= num_alternatives) {
      throw InputError("committee member " + std::to_string(c) +
                       " out of range");
    }
    if (i > 0 && members_[i - 1] == members_[i]) {
      throw InputError("duplicate committee member " + std::to_string(c));
    }
  }
}

bool Committee::contains(AlternativeId c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

int rank_of(const PreferenceProfile& profile, VoterId v, AlternativeId c) {
  if (v.index < 0 || v.index >= profile.num_voters()) {
    throw InputError("voter " + std::to_string(v.index) + " out of range");
  }
  if (c.index < 0 || c.index >= profile.num_alternatives()) {
    throw InputError("alternative " + std::to_string(c.index) +
                     " out of range");
  }
  return profile.rank(v.index, c.index);
}

std::int64_t misrepresentation_sum(const PreferenceProfile& profile,
                                   const Assignment& a) {
  if (a.num_voters() != profile.num_voters()) {
    throw InputError("assignment covers " + std::to_string(a.num_voters()) +
                     " voters, profile has " +
                     std::to_string(profile.num_voters()));
  }
  std::int64_t total = 0;
  for (int v = 0; v < a.num_voters(); ++v) {
    total += rank_of(profile, VoterId{v}, a[VoterId{v}]);
  }
  return total;
}

ValidationReport validate_assignment(const PreferenceProfile& profile,
                                     const Assignment& a, int k,
                                     RuleKind rule) {
  if (k < 1) throw InputError("k must be at least 1");
  ValidationReport report;
  const int n = profile.num_voters();
  const int m = profile.num_alternatives();
  if (a.num_voters() != n) {
    report.violations.push_back("assignment covers " +
                                std::to_string(a.num_voters()) +
                                " voters, profile has " + std::to_string(n));
  }
  for (int v = 0; v < a.num_voters(); ++v) {
    const int c = a[VoterId{v}].index;
    if (c < 0 || c >= m) {
      report.violations.push_back("voter " + std::to_string(v) +
                                  " assigned unknown alternative " +
                                  std::to_string(c));
      continue;
    }
    ++report.usage_histogram[c];
  }
  report.used_count = static_cast<int>(report.usage_histogram.size());
  if (report.used_count != k) {
    report.violations.push_back("uses " + std::to_string(report.used_count) +
                                " alternatives, expected k = " +
                                std::to_string(k));
  }
  if (rule == RuleKind::kMonroe) {
    const int lower = n / k;
    const int upper = (n + k - 1) / k;
    for (const auto& [c, count] : report.usage_histogram) {
      if (count < lower || count > upper) {
        report.violations.push_back(
            "alternative " + std::to_string(c) + " represents " +
            std::to_string(count) + " voters, quota is [" +
            std::to_string(lower) + ", " + std::to_string(upper) + "]");
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

PreferenceProfile build_profile(const std::vector<std::vector<int>>& orders) {
  if (orders.empty()) throw InputError("profile needs at least one voter");
  const std::size_t m = orders.front().size();
  for (std::size_t v = 1; v < orders.size(); ++v) {
    if (orders[v].size() != m) {
      throw InputError("ragged rows: voter " + std::to_string(v) + " lists " +
                       std::to_string(orders[v].size()) +
                       " alternatives, voter 0 lists " + std::to_string(m));
    }
  }
  return PreferenceProfile::from_orders(orders);
}

PreferenceProfile parse_profile(std::string_view text) {
  int m = -1;
  int n = -1;
  std::vector<std::vector<int>> orders;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (eol == text.size()) break;
      continue;
    }

    auto header = [&](std::string_view key, int& slot) {
      if (tokens.size() != 2 || tokens[0] != key) {
        throw ParseError(line_no, "expected header '" + std::string(key) +
                                      " <int>'");
      }
      if (!parse_int(tokens[1], slot) || slot < 1) {
        throw ParseError(line_no, "header '" + std::string(key) +
                                      "' needs a positive integer");
      }
    };

    if (m < 0) {
      header("m", m);
    } else if (n < 0) {
      header("n", n);
    } else {
      if (static_cast<int>(orders.size()) == n) {
        throw ParseError(line_no, "more than n = " + std::to_string(n) +
                                      " preference rows");
      }
      std::vector<int> row;
      row.reserve(tokens.size());
      for (auto tok : tokens) {
        int c = 0;
        if (!parse_int(tok, c)) {
          throw ParseError(line_no,
                           "not an integer: '" + std::string(tok) + "'");
        }
        row.push_back(c);
      }
      std::string err = check_permutation(row, m);
      if (!err.empty()) {
        throw ParseError(line_no, "row is not a permutation: " + err);
      }
      orders.push_back(std::move(row));
    }
    if (eol == text.size()) break;
  }
  if (m < 0) throw ParseError(line_no, "missing header 'm <int>'");
  if (n < 0) throw ParseError(line_no, "missing header 'n <int>'");
  if (static_cast<int>(orders.size()) != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) +
                                  " preference rows, got " +
                                  std::to_string(orders.size()));
  }
  return PreferenceProfile::from_orders(orders);
}

std::string serialize_profile(const PreferenceProfile& profile) {
  std::string out;
  out.reserve(static_cast<std::size_t>(profile.num_voters()) *
                  profile.num_alternatives() * 4 +
              32);
  out += "m " + std::to_string(profile.num_alternatives()) + "\n";
  out += "n " + std::to_string(profile.num_voters()) + "\n";
  for (int v = 0; v < profile.num_voters(); ++v) {
    bool first = true;
    for (int c : profile.order(v)) {
      if (!first) out += ' ';
      out += std::to_string(c);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace ccm
