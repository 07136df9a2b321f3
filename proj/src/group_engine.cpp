#include "wreathvar/group_engine.hpp"

#include <algorithm>

#include "wreathvar/error.hpp"
#include "wreathvar/numeric.hpp"

namespace wreathvar {

using Index = ConcreteGroup::Index;

std::uint64_t group_exponent(const ConcreteGroup& g) { return g.exponent(); }

std::vector<Subgroup> lower_central_series(const ConcreteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  std::vector<Index> commutators;
  while (true) {
    const Subgroup& current = series.back();
    commutators.clear();
    for (const Index gen : current.generators()) {
      for (std::uint64_t x = 0; x < g.order(); ++x) {
        const Index c = g.commutator(gen, static_cast<Index>(x));
        if (c != ConcreteGroup::identity()) commutators.push_back(c);
      }
    }
    std::sort(commutators.begin(), commutators.end());
    commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
    Subgroup next = generate(g, commutators);
    if (next.order() == current.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const std::vector<Subgroup>& lcs) {
  if (lcs.empty() || !lcs.back().is_trivial()) return std::nullopt;
  return lcs.size() - 1;
}

std::optional<std::size_t> nilpotency_class(const ConcreteGroup& g) {
  return nilpotency_class(lower_central_series(g));
}

bool is_p_group(const ConcreteGroup& g, std::uint64_t p) { return exact_log(g.order(), p) >= 0; }

namespace {

std::uint64_t pi_part(std::uint64_t n, const std::set<std::uint64_t>& primes) {
  std::uint64_t part = 1;
  for (const auto p : primes) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

bool is_pi_number(std::uint64_t n, const std::set<std::uint64_t>& primes) { return pi_part(n, primes) == n; }

}  // namespace

Subgroup hall_subgroup(const ConcreteGroup& g, const std::set<std::uint64_t>& primes) {
  for (const auto p : primes) {
    if (!is_prime(p)) throw Error(ErrorCode::BadParameters, std::to_string(p) + " is not prime");
  }
  if (!nilpotency_class(g)) {
    throw Error(ErrorCode::NotNilpotent, g.name() + " is not nilpotent; its pi-elements need not form a subgroup");
  }
  std::vector<Index> members;
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    if (is_pi_number(g.element_order(static_cast<Index>(x)), primes)) members.push_back(static_cast<Index>(x));
  }
  Subgroup h = generate(g, members);
  if (h.order() != members.size() || h.order() != pi_part(g.order(), primes)) {
    throw Error(ErrorCode::InternalError, "pi-elements of a nilpotent group failed to form the Hall subgroup");
  }
  return h;
}

Subgroup sylow_subgroup(const ConcreteGroup& g, std::uint64_t p) { return hall_subgroup(g, {p}); }

Subgroup power_subgroup(const Subgroup& h, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::BadParameters, "power must be positive");
  const auto& g = h.parent();
  std::vector<Index> powers;
  for (const Index x : h.members()) powers.push_back(g.power(x, static_cast<std::int64_t>(k)));
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  return generate(g, powers);
}

Subgroup power_subgroup(const ConcreteGroup& g, std::uint64_t k) { return power_subgroup(whole_group(g), k); }

}  // namespace wreathvar
