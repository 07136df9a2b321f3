#include <doctest.h>

#include <map>

#include "support.hpp"
#include "wreathvar/concrete_group.hpp"
#include "wreathvar/error.hpp"

using namespace wreathvar;
using testing::C;
using testing::pow;
using testing::wr;
using Index = ConcreteGroup::Index;

namespace {

std::uint64_t residue(const Element& e) { return std::get<Element::Residue>(e.value).value; }

std::map<std::uint64_t, int> order_histogram(const ConcreteGroup& g) {
  std::map<std::uint64_t, int> h;
  for (std::uint64_t a = 0; a < g.order(); ++a) ++h[g.element_order(static_cast<Index>(a))];
  return h;
}

}  // namespace

TEST_SUITE("concrete_group") {
  TEST_CASE("group axioms hold on every property group") {
    auto gen = testing::rng(10);
    for (const auto& expr : testing::property_groups()) {
      const auto g = ConcreteGroup::materialize(expr);
      CAPTURE(expr.to_string());
      REQUIRE(g.order() == expr.order());
      std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g.order() - 1));
      // exhaustive on small groups, sampled triples on the rest
      const bool small = g.order() <= 64;
      const std::uint64_t trials = small ? g.order() * g.order() * g.order() : 20000;
      for (std::uint64_t t = 0; t < trials; ++t) {
        const Index a = small ? static_cast<Index>(t % g.order()) : pick(gen);
        const Index b = small ? static_cast<Index>((t / g.order()) % g.order()) : pick(gen);
        const Index c = small ? static_cast<Index>(t / (g.order() * g.order())) : pick(gen);
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c))) {
          FAIL("associativity fails at " << a << ", " << b << ", " << c);
        }
      }
      for (std::uint64_t i = 0; i < g.order(); ++i) {
        const auto a = static_cast<Index>(i);
        if (g.compose(a, 0) != a || g.compose(0, a) != a) FAIL("identity fails at " << a);
        if (g.compose(a, g.invert(a)) != 0 || g.compose(g.invert(a), a) != 0) FAIL("inverse fails at " << a);
      }
    }
  }

  TEST_CASE("wreath multiplication follows the translation rule") {
    // (f1, b1)(f2, b2) = (x -> f1(x) + f2(x + b1), b1 + b2) for cyclic factors
    for (const auto& [n, k] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {2, 4}, {3, 3}, {4, 2}, {2, 6}}) {
      const auto g = ConcreteGroup::materialize(wr(C(n), C(k)));
      for (std::uint64_t i = 0; i < g.order(); ++i) {
        for (std::uint64_t j = 0; j < g.order(); ++j) {
          const auto ei = std::get<Element::WreathPair>(g.element(static_cast<Index>(i)).value);
          const auto ej = std::get<Element::WreathPair>(g.element(static_cast<Index>(j)).value);
          const auto b1 = residue(ei.top[0]);
          const auto b2 = residue(ej.top[0]);
          Element::WreathPair expected;
          for (std::uint64_t x = 0; x < k; ++x) {
            const auto v = (residue(ei.table[x]) + residue(ej.table[(x + b1) % k])) % n;
            expected.table.push_back(Element{Element::Residue{v, n}});
          }
          expected.top.push_back(Element{Element::Residue{(b1 + b2) % k, k}});
          const auto got = g.element(g.compose(static_cast<Index>(i), static_cast<Index>(j)));
          if (!(got == Element{expected})) FAIL("C" << n << " wr C" << k << " at " << i << "*" << j);
        }
      }
    }
  }

  TEST_CASE("direct products multiply componentwise") {
    const auto g = ConcreteGroup::materialize(GroupExpr::direct({C(4), C(3)}));
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      for (std::uint64_t j = 0; j < g.order(); ++j) {
        const auto a = std::get<Element::Tuple>(g.element(static_cast<Index>(i)).value);
        const auto b = std::get<Element::Tuple>(g.element(static_cast<Index>(j)).value);
        const auto c = std::get<Element::Tuple>(g.element(g.compose(static_cast<Index>(i), static_cast<Index>(j))).value);
        CHECK(residue(c.parts[0]) == (residue(a.parts[0]) + residue(b.parts[0])) % 4);
        CHECK(residue(c.parts[1]) == (residue(a.parts[1]) + residue(b.parts[1])) % 3);
      }
    }
  }

  TEST_CASE("elements round trip through their structured form") {
    for (const auto& expr : testing::property_groups()) {
      const auto g = ConcreteGroup::materialize(expr);
      for (std::uint64_t i = 0; i < g.order(); i += 1 + g.order() / 500) {
        CHECK(g.index_of(g.element(static_cast<Index>(i))) == i);
      }
    }
  }

  TEST_CASE("D4 and Q8 are told apart by element orders") {
    const auto d4 = ConcreteGroup::materialize(wr(C(2), C(2)));
    const auto q8 = quaternion_group();
    CHECK(order_histogram(d4) == std::map<std::uint64_t, int>{{1, 1}, {2, 5}, {4, 2}});
    CHECK(order_histogram(q8) == std::map<std::uint64_t, int>{{1, 1}, {2, 1}, {4, 6}});
    CHECK(d4.exponent() == 4);
    CHECK(q8.exponent() == 4);
    CHECK(to_string(q8.element(2)) == "2");  // table groups expose raw labels
  }

  TEST_CASE("power, commutator and conjugate agree with products") {
    const auto g = ConcreteGroup::materialize(wr(C(3), C(3)));
    for (Index a = 0; a < g.order(); a += 7) {
      Index x = 0;
      for (int k = 0; k < 5; ++k) x = g.compose(x, a);
      CHECK(g.power(a, 5) == x);
      CHECK(g.power(a, -5) == g.invert(x));
      for (Index b = 0; b < g.order(); b += 11) {
        CHECK(g.commutator(a, b) == g.compose(g.compose(g.invert(a), g.invert(b)), g.compose(a, b)));
        CHECK(g.conjugate(a, b) == g.compose(g.compose(g.invert(b), a), b));
      }
    }
  }

  TEST_CASE("oversize groups are refused before allocation") {
    CHECK_THROWS_AS(ConcreteGroup::materialize(wr(C(4), pow(C(2), 3))), Error);
    CHECK(ConcreteGroup::materialize(wr(C(4), pow(C(2), 3)), 600000).order() == 524288);
  }

  TEST_CASE("cayley tables are validated") {
    // not associative: a 3-element loop with 1*1 = 1
    std::vector<std::vector<Index>> bad = {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
    CHECK_THROWS_AS(ConcreteGroup::from_cayley_table("bad", bad), Error);
    std::vector<std::vector<Index>> c3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const auto g = ConcreteGroup::from_cayley_table("C3", c3);
    CHECK(g.order() == 3);
    CHECK(g.exponent() == 3);
  }

  TEST_CASE("generated subgroups are closed with irredundant generators") {
    const auto g = ConcreteGroup::materialize(wr(C(2), C(4)));
    auto gen = testing::rng(11);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g.order() - 1));
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Index> seeds;
      for (int i = 0; i < 3; ++i) seeds.push_back(pick(gen));
      const auto h = generate(g, seeds);
      const testing::ElementSet expected = testing::closure(g, {seeds.begin(), seeds.end()});
      CHECK(testing::ElementSet(h.members().begin(), h.members().end()) == expected);
      for (std::size_t i = 0; i < h.generators().size(); ++i) {
        const std::vector<Index> before(h.generators().begin(), h.generators().begin() + static_cast<long>(i));
        CHECK_FALSE(generate(g, before).contains(h.generators()[i]));
      }
    }
  }

  TEST_CASE("normality") {
    const auto d4 = ConcreteGroup::materialize(wr(C(2), C(2)));
    CHECK(whole_group(d4).is_normal());
    CHECK(trivial_subgroup(d4).is_normal());
    // a reflection generates a non-normal subgroup of order 2
    bool found_non_normal = false;
    for (Index a = 1; a < d4.order(); ++a) {
      const Index one[] = {a};
      if (!generate(d4, one).is_normal()) found_non_normal = true;
    }
    CHECK(found_non_normal);
  }
}
