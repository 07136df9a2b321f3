#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "wreathvar/concrete_group.hpp"

namespace wreathvar {

/// Least e >= 1 with g^e = 1 for every g; 1 for the trivial group.
std::uint64_t group_exponent(const ConcreteGroup& g);

/// gamma_1 = G, gamma_{r+1} = <[g, x] : g a generator of gamma_r, x in G>.
/// The list stops at the first term equal to its successor, so it ends with
/// {1} exactly when G is nilpotent.
std::vector<Subgroup> lower_central_series(const ConcreteGroup& g);

/// Smallest c with gamma_{c+1} = {1}; nullopt when G is not nilpotent.
std::optional<std::size_t> nilpotency_class(const ConcreteGroup& g);
std::optional<std::size_t> nilpotency_class(const std::vector<Subgroup>& lcs);

bool is_p_group(const ConcreteGroup& g, std::uint64_t p);

/// Elements of p-power order. Throws NotNilpotent if G is not nilpotent and
/// BadParameters if p is not prime.
Subgroup sylow_subgroup(const ConcreteGroup& g, std::uint64_t p);

/// Product of the Sylow subgroups for `primes`.
Subgroup hall_subgroup(const ConcreteGroup& g, const std::set<std::uint64_t>& primes);

/// <g^k : g in G>
Subgroup power_subgroup(const ConcreteGroup& g, std::uint64_t k);

/// <h^k : h in H>, the same construction inside a subgroup.
Subgroup power_subgroup(const Subgroup& h, std::uint64_t k);

}  // namespace wreathvar
