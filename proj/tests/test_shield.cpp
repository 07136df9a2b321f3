#include <doctest.h>

#include "support.hpp"
#include "wreathvar/error.hpp"
#include "wreathvar/group_engine.hpp"
#include "wreathvar/shield.hpp"

using namespace wreathvar;
using testing::C;
using testing::pow;
using testing::wr;

namespace {

ConcreteGroup G(const GroupExpr& e) { return ConcreteGroup::materialize(e); }

/// K_i straight from the definition, over naive commutator and power sets.
std::vector<testing::ElementSet> naive_kp(const ConcreteGroup& b, std::uint64_t p) {
  const auto gamma = testing::naive_lcs(b);
  std::vector<testing::ElementSet> terms;
  for (std::uint64_t i = 1;; ++i) {
    testing::ElementSet gens;
    for (std::size_t r = 1; r <= gamma.size(); ++r) {
      std::uint64_t pj = 1;
      while (r * pj < i) pj *= p;
      const auto part = testing::naive_power_subgroup(b, gamma[r - 1], pj);
      gens.insert(part.begin(), part.end());
    }
    terms.push_back(testing::closure(b, gens));
    if (terms.back().size() == 1) return terms;
  }
}

std::uint64_t log_p(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

/// Shield's class from the naive series, bottom exponents from naive_lcs.
std::uint64_t naive_shield(const ConcreteGroup& a, const ConcreteGroup& b, std::uint64_t p) {
  const auto k = naive_kp(b, p);
  const std::uint64_t depth = k.size() - 1;
  std::uint64_t weighted = 0;
  for (std::uint64_t s = 1; s <= depth; ++s) weighted += s * log_p(k[s - 1].size() / k[s].size(), p);
  const std::uint64_t alpha_a = 1 + (p - 1) * weighted;
  const std::uint64_t beta_b = (p - 1) * depth;
  const auto gamma = testing::naive_lcs(a);
  std::uint64_t best = 0;
  for (std::size_t h = 1; h + 1 <= gamma.size(); ++h) {
    const auto s = log_p(testing::naive_exponent(a, gamma[h - 1]), p);
    best = std::max(best, alpha_a * h + (s - 1) * beta_b);
  }
  return best;
}

// Integer form of bound1 after clearing the geometric sum by hand.
std::int64_t bound1_int(std::int64_t c, std::int64_t t, std::int64_t l, std::int64_t p, int v, int alpha) {
  std::int64_t pv1 = 1;
  for (int i = 1; i < v; ++i) pv1 *= p;
  return c + c * t * (pv1 - 1) + c * (p - 1) * l * pv1 + (alpha - 1) * (p - 1) * pv1;
}

std::int64_t bound2_int(std::int64_t c, std::int64_t t, std::int64_t z, std::int64_t p, int v, int alpha) {
  std::int64_t pv1 = 1;
  for (int i = 1; i < v; ++i) pv1 *= p;
  return c + c * (t - z) * (pv1 * p - 1) + (alpha - 1) * (p - 1) * pv1;
}

}  // namespace

TEST_SUITE("shield") {
  TEST_CASE("K_p-series spot values") {
    const auto c4 = kp_series(G(C(4)), 2);
    REQUIRE(c4.terms.size() == 3);
    CHECK(c4.terms[0].order() == 4);
    CHECK(c4.terms[1].order() == 2);
    CHECK(c4.terms[2].order() == 1);
    CHECK(c4.depth == 2);
    CHECK(kp_series(G(C(1)), 2).depth == 0);
    CHECK_THROWS_AS(kp_series(G(C(6)), 2), Error);
  }

  TEST_CASE("shield parameters spot values") {
    const auto c2 = shield_params(G(C(2)), 2);
    CHECK(c2.depth == 1);
    CHECK(c2.a == 2);
    CHECK(c2.b == 1);
    const auto v4 = shield_params(G(pow(C(2), 2)), 2);
    CHECK(v4.depth == 1);
    CHECK(v4.e == std::vector<unsigned>{2});
    CHECK(v4.a == 3);
    CHECK(v4.b == 1);
    const auto c4 = shield_params(G(C(4)), 2);
    CHECK(c4.depth == 2);
    CHECK(c4.a == 4);
    CHECK(c4.b == 2);
    CHECK_THROWS_AS(shield_params(G(C(1)), 2), Error);
  }

  TEST_CASE("gamma profile of D4") {
    const auto prof = gamma_profile(G(wr(C(2), C(2))), 2);
    CHECK(prof.c == 2);
    CHECK(prof.s == std::vector<unsigned>{2, 1});
    CHECK(prof.alpha() == 1);
    CHECK_THROWS_AS(gamma_profile(G(C(1)), 2), Error);
    CHECK_THROWS_AS(gamma_profile(G(C(3)), 2), Error);
  }

  TEST_CASE("K_p-series matches the definition on p-groups") {
    std::vector<std::pair<GroupExpr, std::uint64_t>> cases;
    for (const auto& e : testing::property_groups()) {
      if (e.order() <= 256 && is_p_group(G(e), 2)) cases.emplace_back(e, 2);
    }
    cases.emplace_back(wr(C(3), C(3)), 3);
    cases.emplace_back(GroupExpr::direct({C(9), C(3)}), 3);
    for (const auto& [e, p] : cases) {
      const auto series = kp_series(G(e), p);
      const auto naive = naive_kp(G(e), p);
      REQUIRE_MESSAGE(series.terms.size() == naive.size(), e.to_string());
      for (std::size_t i = 0; i < naive.size(); ++i) {
        CHECK(testing::ElementSet(series.terms[i].members().begin(), series.terms[i].members().end()) == naive[i]);
        CHECK(series.terms[i].is_normal());
      }
    }
  }

  TEST_CASE("shield class equals the definition-level computation") {
    for (const auto& a : testing::grid_bottoms()) {
      for (const auto& b : testing::grid_tops()) {
        CHECK_MESSAGE(shield_class(G(a), G(b), 2) == naive_shield(G(a), G(b), 2), a.to_string(), " wr ", b.to_string());
      }
    }
    CHECK(shield_class(G(C(3)), G(C(3)), 3) == 3);
    CHECK(shield_class(G(C(2)), G(C(4)), 2) == 4);
  }

  TEST_CASE("bound1 stays integral and matches the cleared form") {
    auto gen = testing::rng(40);
    std::uniform_int_distribution<int> c(1, 6), pv(0, 3), v(1, 4), alpha(1, 4), l(0, 30), extra(0, 60);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t p = primes[pv(gen)];
      const int vv = v(gen), aa = alpha(gen), cc = c(gen);
      const std::uint64_t ll = static_cast<std::uint64_t>(l(gen));
      const std::uint64_t t = std::max<std::uint64_t>(ll, 1) + static_cast<std::uint64_t>(extra(gen));
      const auto r = bound1(cc, t, ll, p, vv, aa);
      CHECK(r.is_integer());
      CHECK(r.num() == bound1_int(cc, static_cast<std::int64_t>(t), static_cast<std::int64_t>(ll),
                                  static_cast<std::int64_t>(p), vv, aa));
      const std::uint64_t z = ll / 2;
      CHECK(bound2(cc, t, z, p, vv, aa) ==
            bound2_int(cc, static_cast<std::int64_t>(t), static_cast<std::int64_t>(z), static_cast<std::int64_t>(p), vv, aa));
    }
  }

  TEST_CASE("crossover spot value and linear scan") {
    CHECK(crossover(1, 1, 3, 2, 1, 1) == 5);
    for (std::uint64_t t = 5; t <= 100; ++t) CHECK(Rational(bound2(1, t, 1, 2, 1, 1)) > bound1(1, t, 3, 2, 1, 1));
    auto gen = testing::rng(41);
    std::uniform_int_distribution<int> small(0, 12), v(1, 3), c(1, 4);
    const std::uint64_t primes[] = {2, 3, 5};
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t p = primes[static_cast<std::size_t>(small(gen)) % 3];
      const auto z = static_cast<std::uint64_t>(small(gen));
      const auto l = static_cast<std::uint64_t>(small(gen));
      const int vv = v(gen), cc = c(gen), aa = v(gen);
      std::uint64_t t = std::max<std::uint64_t>({z, l, 1});
      while (Rational(bound2(cc, t, z, p, vv, aa)) <= bound1(cc, t, l, p, vv, aa)) ++t;
      CHECK(crossover(cc, z, l, p, vv, aa) == t);
    }
  }
}
