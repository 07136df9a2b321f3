#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wreathvar/error.hpp"
#include "wreathvar/group_engine.hpp"
#include "wreathvar/numeric.hpp"

using namespace wreathvar;
using testing::C;
using testing::pow;
using testing::wr;
using Index = ConcreteGroup::Index;

namespace {

ConcreteGroup G(const GroupExpr& e) { return ConcreteGroup::materialize(e); }

testing::ElementSet as_set(const Subgroup& h) { return {h.members().begin(), h.members().end()}; }

}  // namespace

TEST_SUITE("group_engine") {
  TEST_CASE("exponent examples") {
    CHECK(group_exponent(G(C(6))) == 6);
    CHECK(group_exponent(G(wr(C(2), C(2)))) == 4);
    CHECK(group_exponent(G(GroupExpr::direct({C(2), C(3)}))) == 6);
  }

  TEST_CASE("exponent matches repeated multiplication") {
    for (const auto& e : testing::property_groups()) {
      const auto g = G(e);
      CHECK_MESSAGE(group_exponent(g) == testing::naive_exponent(g, testing::all_elements(g)), e.to_string());
    }
  }

  TEST_CASE("lower central series examples") {
    const auto d4 = lower_central_series(G(wr(C(2), C(2))));
    REQUIRE(d4.size() == 3);
    CHECK(d4[0].order() == 8);
    CHECK(d4[1].order() == 2);
    CHECK(d4[2].order() == 1);
    const auto c3 = lower_central_series(G(wr(C(3), C(3))));
    REQUIRE(c3.size() == 4);
    CHECK(c3.back().is_trivial());
    CHECK(nilpotency_class(G(C(1))) == 0);
    CHECK(nilpotency_class(G(wr(C(2), C(2)))) == 2);
    CHECK_FALSE(nilpotency_class(G(wr(C(2), C(6)))).has_value());
  }

  TEST_CASE("lower central series matches naive commutator closure") {
    for (const auto& e : testing::property_groups()) {
      if (e.order() > 1024) continue;
      const auto g = G(e);
      CAPTURE(e.to_string());
      const auto lcs = lower_central_series(g);
      const auto naive = testing::naive_lcs(g);
      REQUIRE(lcs.size() == naive.size());
      for (std::size_t i = 0; i < lcs.size(); ++i) CHECK(as_set(lcs[i]) == naive[i]);
    }
  }

  TEST_CASE("class agrees with the upper central series") {
    for (const auto& e : testing::property_groups()) {
      if (e.order() > 1024) continue;
      const auto g = G(e);
      const auto cls = nilpotency_class(g);
      const int upper = testing::upper_central_class(g);
      CHECK_MESSAGE((cls ? static_cast<int>(*cls) : -1) == upper, e.to_string());
    }
  }

  TEST_CASE("lower central terms are normal and descending") {
    for (const auto& e : testing::property_groups()) {
      if (e.order() > 200) continue;
      const auto lcs = lower_central_series(G(e));
      for (std::size_t i = 0; i < lcs.size(); ++i) {
        CHECK_MESSAGE(lcs[i].is_normal(), e.to_string());
        if (i > 0) CHECK(lcs[i].is_subset_of(lcs[i - 1]));
      }
    }
  }

  TEST_CASE("p-group detection") {
    CHECK(is_p_group(G(wr(C(2), C(4))), 2));
    CHECK_FALSE(is_p_group(G(C(6)), 2));
    CHECK(is_p_group(G(C(1)), 2));  // order 2^0
  }

  TEST_CASE("sylow and hall examples") {
    CHECK(sylow_subgroup(G(C(6)), 2).order() == 2);
    CHECK(sylow_subgroup(G(GroupExpr::direct({C(4), C(9)})), 3).order() == 9);
    CHECK(sylow_subgroup(G(C(8)), 3).is_trivial());
    CHECK(hall_subgroup(G(C(30)), {2, 3}).order() == 6);
    CHECK(hall_subgroup(G(C(30)), {7}).is_trivial());
    CHECK(hall_subgroup(G(GroupExpr::direct({C(4), C(3), C(25)})), {2, 5}).order() == 100);
    CHECK_THROWS_AS(sylow_subgroup(G(wr(C(2), C(3))), 2), Error);
  }

  TEST_CASE("sylow subgroups of random nilpotent groups") {
    auto gen = testing::rng(20);
    for (int trial = 0; trial < 20; ++trial) {
      const auto e = testing::random_nilpotent(gen);
      const auto g = G(e);
      CAPTURE(e.to_string());
      std::set<std::uint64_t> primes;
      for (const auto& [p, k] : factorize(g.order())) {
        primes.insert(p);
        const auto s = sylow_subgroup(g, p);
        CHECK(s.order() == checked_pow(p, k));
        CHECK(s.is_normal());
        for (const auto a : s.members()) CHECK(exact_log(g.element_order(a), p) >= 0);
      }
      CHECK(hall_subgroup(g, primes).order() == g.order());
    }
  }

  TEST_CASE("power subgroup examples") {
    CHECK(power_subgroup(G(C(4)), 2).order() == 2);
    CHECK(power_subgroup(G(pow(C(2), 3)), 2).is_trivial());
    CHECK(power_subgroup(G(C(9)), 3).order() == 3);
  }

  TEST_CASE("power subgroups match naive closure") {
    for (const auto& e : testing::property_groups()) {
      if (e.order() > 1024) continue;
      const auto g = G(e);
      for (std::uint64_t k : {2, 3, 4}) {
        CHECK_MESSAGE(as_set(power_subgroup(g, k)) ==
                          testing::naive_power_subgroup(g, testing::all_elements(g), k),
                      e.to_string() << " k=" << k);
      }
    }
  }

  TEST_CASE("abelian power subgroups have the kernel-index order") {
    const std::vector<GroupExpr> abelian = {C(12), GroupExpr::direct({C(4), C(2), C(9)}), pow(C(4), 3),
                                            GroupExpr::direct({C(8), C(3), C(25)})};
    for (const auto& e : abelian) {
      const auto g = G(e);
      for (std::uint64_t k = 1; k <= 12; ++k) {
        std::uint64_t kernel = 0;
        for (Index a = 0; a < g.order(); ++a) kernel += g.power(a, static_cast<std::int64_t>(k)) == 0;
        CHECK(power_subgroup(g, k).order() == g.order() / kernel);
      }
    }
  }

  TEST_CASE("power subgroup inside a subgroup") {
    const auto g = G(wr(C(2), C(4)));
    const auto lcs = lower_central_series(g);
    const auto& h = lcs[1];
    const auto naive = testing::naive_power_subgroup(g, as_set(h), 2);
    CHECK(as_set(power_subgroup(h, 2)) == naive);
  }
}
