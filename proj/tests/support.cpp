#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace testing {

std::uint64_t& seed() {
  static std::uint64_t value = 20240917;
  return value;
}

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() * 0x9e3779b97f4a7c15ULL + salt); }

GroupExpr C(std::uint64_t n) { return GroupExpr::cyclic(n); }
GroupExpr pow(const GroupExpr& base, std::uint64_t k) { return GroupExpr::power(base, k); }
GroupExpr wr(const GroupExpr& bottom, const GroupExpr& top) { return GroupExpr::wreath(bottom, top); }

std::vector<GroupExpr> grid_bottoms() { return {C(2), C(4), pow(C(2), 2), wr(C(2), C(2))}; }
std::vector<GroupExpr> grid_tops() { return {C(2), C(4), pow(C(2), 2), pow(C(2), 3)}; }

std::vector<GroupExpr> property_groups() {
  std::vector<GroupExpr> out;
  for (const auto& a : grid_bottoms()) {
    out.push_back(a);
    for (const auto& b : grid_tops()) {
      const auto w = wr(a, b);
      if (w.order() <= 20000) out.push_back(w);
    }
  }
  for (const auto& b : grid_tops()) out.push_back(b);
  out.push_back(wr(C(3), C(3)));
  out.push_back(GroupExpr::direct({C(4), C(3), C(25)}));
  out.push_back(wr(C(2), C(6)));
  out.push_back(wr(C(3), C(2)));
  return out;
}

/// Random nilpotent group: a direct product of p-groups for distinct primes.
GroupExpr random_nilpotent(std::mt19937_64& gen) {
  const std::vector<std::vector<GroupExpr>> by_prime = {
      {C(2), C(4), C(8), pow(C(2), 2), wr(C(2), C(2)), GroupExpr::direct({C(4), C(2)})},
      {C(3), C(9), pow(C(3), 2), wr(C(3), C(3))},
      {C(5), C(25), pow(C(5), 2)},
      {C(7)},
  };
  std::vector<GroupExpr> parts;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& options : by_prime) {
    if (coin(gen) == 0) continue;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    parts.push_back(options[pick(gen)]);
  }
  if (parts.empty()) parts.push_back(C(2));
  std::shuffle(parts.begin(), parts.end(), gen);
  auto expr = parts.size() == 1 ? parts[0] : GroupExpr::direct(parts);
  return expr.order() <= 20000 ? expr : random_nilpotent(gen);
}

ElementSet closure(const ConcreteGroup& g, const ElementSet& seeds) {
  ElementSet s = seeds;
  s.insert(ConcreteGroup::identity());
  std::vector<Index> frontier(s.begin(), s.end());
  const std::vector<Index> gens(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    std::vector<Index> next;
    for (const auto a : frontier) {
      for (const auto x : gens) {
        const auto y = g.compose(a, x);
        if (s.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return s;
}

ElementSet all_elements(const ConcreteGroup& g) {
  ElementSet s;
  for (std::uint64_t i = 0; i < g.order(); ++i) s.insert(static_cast<Index>(i));
  return s;
}

std::vector<ElementSet> naive_lcs(const ConcreteGroup& g) {
  std::vector<ElementSet> series{all_elements(g)};
  while (true) {
    ElementSet comms;
    for (const auto a : series.back()) {
      for (std::uint64_t x = 0; x < g.order(); ++x) {
        const auto ai = g.invert(a);
        const auto xi = g.invert(static_cast<Index>(x));
        comms.insert(g.compose(g.compose(ai, xi), g.compose(a, static_cast<Index>(x))));
      }
    }
    auto next = closure(g, comms);
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

int upper_central_class(const ConcreteGroup& g) {
  ElementSet z{ConcreteGroup::identity()};
  int cls = 0;
  while (z.size() != g.order()) {
    ElementSet next;
    for (std::uint64_t a = 0; a < g.order(); ++a) {
      bool central = true;
      for (std::uint64_t x = 0; x < g.order() && central; ++x) {
        const auto ax = g.compose(static_cast<Index>(a), static_cast<Index>(x));
        const auto xa = g.compose(static_cast<Index>(x), static_cast<Index>(a));
        // a is central modulo z iff (xa)^-1 (ax) lies in z
        central = z.contains(g.compose(g.invert(xa), ax));
      }
      if (central) next.insert(static_cast<Index>(a));
    }
    if (next == z) return -1;
    z = std::move(next);
    ++cls;
  }
  return cls;
}

std::uint64_t naive_exponent(const ConcreteGroup& g, const ElementSet& s) {
  std::uint64_t e = 1;
  for (const auto a : s) {
    std::uint64_t k = 1;
    for (Index x = a; x != ConcreteGroup::identity(); x = g.compose(x, a)) ++k;
    e = std::lcm(e, k);
  }
  return e;
}

ElementSet naive_power_subgroup(const ConcreteGroup& g, const ElementSet& s, std::uint64_t k) {
  ElementSet powers;
  for (const auto a : s) {
    Index x = ConcreteGroup::identity();
    for (std::uint64_t i = 0; i < k; ++i) x = g.compose(x, a);
    powers.insert(x);
  }
  return closure(g, powers);
}

bool embeds(const AbelianShape& b, std::uint64_t q, unsigned w, std::uint64_t count) {
  if (count == 0) return true;
  for (unsigned u = 1; u <= w; ++u) {
    std::uint64_t have = 0;
    bool infinite = false;
    for (const auto& s : b.summands()) {
      if (s.q != q || s.w < u) continue;
      if (s.mult.is_infinite()) infinite = true;
      else have += s.mult.value();
    }
    if (!infinite && (count == kInf || have < count)) return false;
  }
  return true;
}

AbelianShape random_shape(std::mt19937_64& gen, bool allow_infinite, bool allow_unbounded) {
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  std::uniform_int_distribution<int> pieces(0, 4), prime(0, 3), exponent(1, 3), mult(1, 4), coin(0, 9);
  std::vector<wreathvar::Summand> summands;
  const int n = pieces(gen);
  for (int i = 0; i < n; ++i) {
    const bool inf = allow_infinite && coin(gen) < 3;
    summands.push_back({primes[prime(gen)], static_cast<unsigned>(exponent(gen)),
                        inf ? wreathvar::Cardinal::infinite() : wreathvar::Cardinal(mult(gen))});
  }
  const bool unbounded = allow_unbounded && coin(gen) == 0;
  return AbelianShape::from_summands(summands, unbounded);
}

std::uint64_t brute_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t brute_coprime_part(std::uint64_t n, std::uint64_t m) {
  std::uint64_t best = 1;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (const auto e : {d, n / d}) {
      if (brute_gcd(e, m) == 1) best = std::max(best, e);
    }
  }
  return best;
}

}  // namespace testing
