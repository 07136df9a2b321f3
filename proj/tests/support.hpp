#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "wreathvar/abelian_shape.hpp"
#include "wreathvar/concrete_group.hpp"
#include "wreathvar/group_expr.hpp"

namespace testing {

using wreathvar::AbelianShape;
using wreathvar::ConcreteGroup;
using wreathvar::GroupExpr;
using Index = ConcreteGroup::Index;
using ElementSet = std::set<Index>;

/// Seed for every randomized test; overridable with --seed.
std::uint64_t& seed();
std::mt19937_64 rng(std::uint64_t salt = 0);

GroupExpr C(std::uint64_t n);
GroupExpr pow(const GroupExpr& base, std::uint64_t k);
GroupExpr wr(const GroupExpr& bottom, const GroupExpr& top);

/// Bottoms and tops of the brute-force grid.
std::vector<GroupExpr> grid_bottoms();
std::vector<GroupExpr> grid_tops();
/// Every materializable expression used by property checks, order <= 20000.
std::vector<GroupExpr> property_groups();

/// A direct product of p-groups for distinct primes, order at most 20000.
GroupExpr random_nilpotent(std::mt19937_64& gen);

// Naive reference algorithms. They work on plain sets and only use
// compose/invert, never the library's subgroup machinery.

ElementSet closure(const ConcreteGroup& g, const ElementSet& seeds);
ElementSet all_elements(const ConcreteGroup& g);
/// gamma_{r+1} as the closure of every [a, x], a in gamma_r, x in G.
std::vector<ElementSet> naive_lcs(const ConcreteGroup& g);
/// Class from the upper central series; -1 when it stalls below G.
int upper_central_class(const ConcreteGroup& g);
std::uint64_t naive_exponent(const ConcreteGroup& g, const ElementSet& s);
/// Closure of the k-th powers of the elements of s.
ElementSet naive_power_subgroup(const ConcreteGroup& g, const ElementSet& s, std::uint64_t k);

/// Independent statement of "C_{q^w}^count embeds in B": for every level
/// u <= w, summands of exponent >= u must be at least `count`. Infinite
/// counts are encoded as UINT64_MAX.
bool embeds(const AbelianShape& b, std::uint64_t q, unsigned w, std::uint64_t count);
constexpr std::uint64_t kInf = UINT64_MAX;

/// Random canonical shapes over small primes, sometimes unbounded.
AbelianShape random_shape(std::mt19937_64& gen, bool allow_infinite = true, bool allow_unbounded = true);

std::uint64_t brute_gcd(std::uint64_t a, std::uint64_t b);
/// Largest divisor of n coprime to m, found by listing divisors.
std::uint64_t brute_coprime_part(std::uint64_t n, std::uint64_t m);

}  // namespace testing
