#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "wreathvar/error.hpp"
#include "wreathvar/group_engine.hpp"
#include "wreathvar/oracle.hpp"

using namespace wreathvar;
using testing::C;
using testing::pow;
using testing::wr;
using Index = ConcreteGroup::Index;

namespace {

ConcreteGroup G(const GroupExpr& e) { return ConcreteGroup::materialize(e); }

std::vector<int> code_key(const std::vector<int>& letters) {
  std::vector<int> key;
  for (const int x : letters) key.push_back(2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0));
  return key;
}

bool has_letters(const std::vector<Word>& words, std::vector<int> letters) {
  return std::any_of(words.begin(), words.end(), [&](const Word& w) { return w.letters() == letters; });
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("law examples") {
    for (const auto& e : {C(6), pow(C(2), 3), GroupExpr::direct({C(4), C(3)})}) {
      CHECK(is_law(parse_word("[x1,x2]"), G(e)));
    }
    const auto d4 = G(wr(C(2), C(2)));
    CHECK_FALSE(is_law(parse_word("x1^2"), d4));
    CHECK(is_law(parse_word("x1^4"), d4));
    CHECK(is_law(parse_word("[[x1,x2],x3]"), d4));
    CHECK_FALSE(is_law(parse_word("[x1,x2]"), d4));
    CHECK(is_law(parse_word("1"), d4));
  }

  TEST_CASE("budget is enforced") {
    const auto g = G(wr(C(2), C(4)));
    CHECK_THROWS_AS(is_law(parse_word("[[x1,x2],x3]"), g, Budget{1000}), Error);
    CHECK_THROWS_AS(laws_up_to(g, 3, 6, Budget{1000}), Error);
    CHECK_NOTHROW(is_law(parse_word("x1^2"), g, Budget{1000}));
  }

  TEST_CASE("enumeration is canonical") {
    for (unsigned k = 1; k <= 3; ++k) {
      for (unsigned len = 0; len <= 5; ++len) {
        const auto words = enumerate_reduced_words(k, len);
        std::uint64_t expected = 0, at = 2 * k;
        for (unsigned i = 1; i <= len; ++i, at *= 2 * k - 1) expected += at;
        REQUIRE(words.size() == expected);
        CHECK(reduced_word_count(k, len) == expected);
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < words.size(); ++i) {
          const auto letters = words[i].letters();
          CHECK(free_reduce(letters) == letters);
          CHECK(seen.insert(letters).second);
          if (i > 0) {
            const auto prev = words[i - 1].letters();
            const bool ordered = prev.size() < letters.size() ||
                                 (prev.size() == letters.size() && code_key(prev) < code_key(letters));
            CHECK(ordered);
          }
        }
      }
    }
    const auto first = enumerate_reduced_words(1, 2);
    REQUIRE(first.size() == 4);
    CHECK(first[0].letters() == std::vector<int>{1});
    CHECK(first[1].letters() == std::vector<int>{-1});
    CHECK(first[2].letters() == std::vector<int>{1, 1});
    CHECK(first[3].letters() == std::vector<int>{-1, -1});
  }

  TEST_CASE("law sets up to a length") {
    const auto c2 = laws_up_to(G(C(2)), 1, 2);
    CHECK(has_letters(c2, {1, 1}));
    const auto c6 = laws_up_to(G(C(6)), 2, 4);
    CHECK(has_letters(c6, {-1, -2, 1, 2}));
    CHECK_FALSE(has_letters(c6, {1, 1}));
  }

  TEST_CASE("batched law detection matches word-by-word checks") {
    for (const auto& g : {G(wr(C(2), C(2))), quaternion_group(), G(C(6)), G(wr(C(3), C(2)))}) {
      const auto words = enumerate_reduced_words(2, 4);
      const auto laws = laws_up_to(g, 2, 4);
      std::set<std::string> law_text;
      for (const auto& w : laws) law_text.insert(w.to_string());
      for (const auto& w : words) CHECK(is_law(w, g) == law_text.contains(w.to_string()));
    }
  }

  TEST_CASE("D4 and Q8 share every law up to length 8") {
    const auto d4 = laws_up_to(G(wr(C(2), C(2))), 2, 8);
    const auto q8 = laws_up_to(quaternion_group(), 2, 8);
    CHECK(d4 == q8);
    CHECK(!d4.empty());
  }

  TEST_CASE("comparison reports") {
    const auto report = compare_varieties_upto(G(C(2)), G(C(4)), 1, 2);
    CHECK(report.outcome == ComparisonReport::Outcome::Distinguished);
    CHECK(report.verdict() == "Distinguished");
    CHECK(has_letters(report.only_first, {1, 1}));
    CHECK(report.only_second.empty());

    const auto same = compare_varieties_upto(G(wr(C(2), C(4))), G(wr(C(2), C(4))), 2, 4);
    CHECK(same.verdict() == "IndistinguishableUpTo(4)");
    CHECK(same.only_first.empty());

    const auto dq = compare_varieties_upto(G(wr(C(2), C(2))), quaternion_group(), 2, 6);
    CHECK(dq.verdict() == "IndistinguishableUpTo(6)");
    for (const auto& r : {report, same, dq}) {
      CHECK(r.only_first.size() + r.only_second.size() + r.both.size() + r.neither == r.examined);
      CHECK(r.examined == reduced_word_count(r.arity, r.maxlen));
    }
  }

  TEST_CASE("laws respect free reduction") {
    auto gen = testing::rng(70);
    std::uniform_int_distribution<int> letter(1, 4), len(1, 10);
    const std::vector<ConcreteGroup> groups = {G(wr(C(2), C(2))), quaternion_group(), G(wr(C(3), C(3)))};
    for (int i = 0; i < 300; ++i) {
      std::vector<int> w;
      const int n = len(gen);
      for (int j = 0; j < n; ++j) {
        const int x = letter(gen);
        w.push_back(x <= 2 ? x : -(x - 2));
      }
      // plant a cancelling pair to make sure reduction has work to do
      w.insert(w.begin() + static_cast<long>(w.size() / 2), {2, -2});
      const auto reduced = free_reduce(w);
      for (const auto& g : groups) CHECK(is_law(Word::from_letters(w), g) == is_law(Word::from_letters(reduced), g));
    }
  }

  TEST_CASE("laws pass to subgroups") {
    const auto g = G(wr(C(2), C(4)));
    const auto laws = laws_up_to(g, 2, 5);
    const auto lcs = lower_central_series(g);
    const std::vector<Subgroup> subgroups = {lcs[1], sylow_subgroup(g, 2), power_subgroup(g, 2)};
    for (const auto& h : subgroups) {
      for (const auto& w : laws) CHECK(is_law(w, h));
    }
    // the derived subgroup is abelian even though G is not
    CHECK(is_law(parse_word("[x1,x2]"), lcs[1]));
  }

  TEST_CASE("shield against brute force") {
    const auto a = shield_vs_brute(C(2), C(2), 2);
    CHECK(a.predicted == 2);
    CHECK(a.observed == 2);
    CHECK(a.agree);
    const auto b = shield_vs_brute(C(2), pow(C(2), 2), 2);
    CHECK(b.predicted == 3);
    CHECK(b.agree);
    const auto c = shield_vs_brute(C(3), C(3), 3);
    CHECK(c.predicted == 3);
    CHECK(c.agree);
    CHECK_THROWS_AS(shield_vs_brute(C(2), C(3), 2), Error);
    CHECK_THROWS_AS(shield_vs_brute(C(4), pow(C(2), 3), 2), Error);
  }
}
