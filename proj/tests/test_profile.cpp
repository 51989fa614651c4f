#include <doctest.h>

#include <random>

#include "ccm/errors.hpp"
#include "ccm/profile.hpp"
#include "oracles.hpp"

using namespace ccm;

namespace {

Assignment assign(std::initializer_list<int> targets) {
  std::vector<AlternativeId> out;
  for (int t : targets) out.push_back(AlternativeId{t});
  return Assignment(out);
}

}  // namespace

TEST_CASE("rank of the worked order 2 > 3 > 1") {
  // alternatives 1, 2, 3 live at indices 0, 1, 2
  const auto p = PreferenceProfile::from_orders({{1, 2, 0}}, {"1", "2", "3"});
  CHECK(rank_of(p, VoterId{0}, AlternativeId{1}) == 0);
  CHECK(rank_of(p, VoterId{0}, AlternativeId{2}) == 1);
  CHECK(rank_of(p, VoterId{0}, AlternativeId{0}) == 2);
  CHECK(misrepresentation_sum(p, assign({0})) == 2);
  CHECK(p.labels()[1] == "2");
}

TEST_CASE("rank_of range checks") {
  const auto p = build_profile({{0, 1}});
  CHECK_THROWS_AS(rank_of(p, VoterId{1}, AlternativeId{0}), InputError);
  CHECK_THROWS_AS(rank_of(p, VoterId{0}, AlternativeId{2}), InputError);
  CHECK_THROWS_AS(rank_of(p, VoterId{-1}, AlternativeId{0}), InputError);
}

TEST_CASE("build_profile") {
  const auto p = build_profile({{2, 0, 1}});
  CHECK(p.rank(0, 2) == 0);
  CHECK(p.rank(0, 0) == 1);
  CHECK(p.rank(0, 1) == 2);

  CHECK_THROWS_AS(build_profile({}), InputError);
  CHECK_THROWS_AS(build_profile({{0, 1}, {0}}), InputError);
  CHECK_THROWS_AS(build_profile({{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(build_profile({{0, 3, 1}}), InputError);
  CHECK_THROWS_AS(build_profile({{}}), InputError);

  const auto twin = build_profile({{1, 0}, {1, 0}});
  CHECK(twin.num_voters() == 2);
  CHECK(std::vector<int>(twin.ranks(0).begin(), twin.ranks(0).end()) ==
        std::vector<int>(twin.ranks(1).begin(), twin.ranks(1).end()));
}

TEST_CASE("ranks form a permutation and top/bottom ranks") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const int m = 1 + static_cast<int>(rng() % 9);
    const auto orders = oracle::random_orders(rng, m, 4);
    const auto p = build_profile(orders);
    for (int v = 0; v < 4; ++v) {
      std::vector<int> row(p.ranks(v).begin(), p.ranks(v).end());
      std::sort(row.begin(), row.end());
      for (int i = 0; i < m; ++i) CHECK(row[i] == i);
      CHECK(p.rank(v, orders[v].front()) == 0);
      CHECK(p.rank(v, orders[v].back()) == m - 1);
      for (int c = 0; c < m; ++c) {
        CHECK(p.rank(v, c) == oracle::position(orders[v], c));
      }
    }
  }
}

TEST_CASE("misrepresentation_sum") {
  const auto p = build_profile({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  CHECK(misrepresentation_sum(p, assign({0, 0, 0})) == 0);
  CHECK(misrepresentation_sum(p, assign({1, 1, 1})) == 3);
  CHECK(misrepresentation_sum(p, assign({2, 1, 0})) == 3);
}

TEST_CASE("validate_assignment") {
  const auto p = build_profile({{0, 1}, {0, 1}, {1, 0}, {1, 0}});
  const Assignment even = assign({0, 0, 1, 1});
  const Assignment skew = assign({0, 0, 0, 1});

  CHECK(validate_assignment(p, even, 2, RuleKind::kMonroe).valid);
  const auto bad = validate_assignment(p, skew, 2, RuleKind::kMonroe);
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.violations.empty());
  CHECK(bad.usage_histogram.at(0) == 3);
  CHECK(bad.usage_histogram.at(1) == 1);
  CHECK(validate_assignment(p, skew, 2, RuleKind::kCC).valid);

  const auto wrong_k = validate_assignment(p, even, 3, RuleKind::kCC);
  CHECK_FALSE(wrong_k.valid);
  CHECK(wrong_k.used_count == 2);

  CHECK_THROWS_AS(validate_assignment(p, even, 0, RuleKind::kCC), InputError);

  const auto again = validate_assignment(p, skew, 2, RuleKind::kMonroe);
  CHECK(again.violations == bad.violations);
  CHECK(again.usage_histogram == bad.usage_histogram);
}

TEST_CASE("committee validation") {
  CHECK_THROWS_AS(Committee({}, 3), InputError);
  CHECK_THROWS_AS(Committee({AlternativeId{0}, AlternativeId{0}}, 3),
                  InputError);
  CHECK_THROWS_AS(Committee({AlternativeId{3}}, 3), InputError);
  const Committee c({AlternativeId{2}, AlternativeId{0}}, 3);
  CHECK(c.k() == 2);
  CHECK(c.members()[0].index == 0);
  CHECK(c.contains(AlternativeId{2}));
  CHECK_FALSE(c.contains(AlternativeId{1}));
}

TEST_CASE("rule names") {
  CHECK(parse_rule("cc") == RuleKind::kCC);
  CHECK(parse_rule("monroe") == RuleKind::kMonroe);
  CHECK(rule_name(RuleKind::kMonroe) == "monroe");
  CHECK_THROWS_AS(parse_rule("borda"), InputError);
}

TEST_CASE("profile text format") {
  const auto p = parse_profile("m 3\nn 1\n1 2 0");
  CHECK(p.num_alternatives() == 3);
  CHECK(p.num_voters() == 1);
  CHECK(p.order(0)[0] == 1);
  CHECK(p.rank(0, 0) == 2);

  const auto commented =
      parse_profile("# a comment\n\nm 2\n# between\nn 2\n0 1\n\n1 0\n");
  CHECK(commented == build_profile({{0, 1}, {1, 0}}));

  CHECK(serialize_profile(build_profile({{1, 0}, {0, 1}})) ==
        "m 2\nn 2\n1 0\n0 1\n");
}

TEST_CASE("profile parse errors carry the line") {
  auto line_of = [](const char* text) {
    try {
      parse_profile(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("m 3\nn 1\n0 0 1\n") == 3);
  CHECK(line_of("m 3\nn 1\n0 1\n") == 3);
  CHECK(line_of("m x\nn 1\n0\n") == 1);
  CHECK(line_of("# c\nm 2\nn 2\n0 1\n") > 0);
  CHECK(line_of("m 2\nn 1\n0 1\n1 0\n") == 4);
  CHECK(line_of("n 1\nm 1\n0\n") == 1);
}

TEST_CASE("profile round trip over random profiles") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int m = 1 + static_cast<int>(rng() % 12);
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto p = build_profile(oracle::random_orders(rng, m, n));
    const std::string text = serialize_profile(p);
    CHECK(parse_profile(text) == p);
    CHECK(serialize_profile(parse_profile(text)) == text);
    CHECK(text.find(" \n") == std::string::npos);
  }
}
