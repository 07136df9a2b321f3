#include "wreathvar/shield.hpp"

#include <algorithm>
#include <map>

#include "wreathvar/error.hpp"
#include "wreathvar/group_engine.hpp"

namespace wreathvar {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, std::to_string(p) + " is not prime");
}

void require_p_group(const ConcreteGroup& g, std::uint64_t p) {
  require_prime(p);
  if (!is_p_group(g, p)) {
    throw Error(ErrorCode::NotPGroup, g.name() + " has order " + std::to_string(g.order()) +
                                          ", not a power of " + std::to_string(p));
  }
}

}  // namespace

KpSeries kp_series(const ConcreteGroup& b, std::uint64_t p) {
  require_p_group(b, p);
  const auto lcs = lower_central_series(b);
  const std::size_t c = lcs.size() - 1;  // p-groups are nilpotent, so lcs ends at {1}

  // gamma_r^{p^j}, cached; once p^j reaches exp(gamma_r) the power is trivial.
  std::map<std::pair<std::size_t, unsigned>, Subgroup> powers;
  auto powered = [&](std::size_t r, unsigned j) -> const Subgroup* {
    const auto& gamma = lcs[r - 1];
    const std::uint64_t pj = checked_pow(p, j);
    if (pj >= gamma.exponent() && j > 0) return nullptr;
    auto it = powers.find({r, j});
    if (it == powers.end()) it = powers.emplace(std::make_pair(r, j), power_subgroup(gamma, pj)).first;
    return &it->second;
  };

  KpSeries series;
  series.p = p;
  for (std::uint64_t i = 1;; ++i) {
    std::vector<ConcreteGroup::Index> gens;
    for (std::size_t r = 1; r <= c; ++r) {
      // Smallest j with r p^j >= i; larger j give subgroups of this one.
      unsigned j = 0;
      std::uint64_t reach = r;
      while (reach < i) {
        reach = checked_mul(reach, p);
        ++j;
      }
      if (const Subgroup* h = powered(r, j)) gens.insert(gens.end(), h->generators().begin(), h->generators().end());
    }
    series.terms.push_back(generate(b, gens));
    if (series.terms.back().is_trivial()) break;
  }
  series.depth = series.terms.size() - 1;
  return series;
}

ShieldParams shield_params(const KpSeries& series) {
  if (series.depth == 0) throw Error(ErrorCode::TrivialGroup, "the K_p-series of the trivial group has depth 0");
  ShieldParams params;
  params.p = series.p;
  params.depth = series.depth;
  std::uint64_t weighted = 0;
  for (std::size_t s = 1; s <= series.depth; ++s) {
    const auto upper = series.terms[s - 1].order();
    const auto lower = series.terms[s].order();
    const int e = upper % lower == 0 ? exact_log(upper / lower, series.p) : -1;
    if (e < 0) {
      throw Error(ErrorCode::InternalError,
                  "K_p-series quotient " + std::to_string(s) + " is not a p-power (engine bug)");
    }
    params.e.push_back(static_cast<unsigned>(e));
    weighted += s * static_cast<std::uint64_t>(e);
  }
  params.a = 1 + (series.p - 1) * weighted;
  params.b = (series.p - 1) * series.depth;
  return params;
}

ShieldParams shield_params(const ConcreteGroup& b, std::uint64_t p) { return shield_params(kp_series(b, p)); }

GammaProfile gamma_profile(const ConcreteGroup& a, std::uint64_t p) {
  require_p_group(a, p);
  if (a.order() == 1) throw Error(ErrorCode::TrivialGroup, "the trivial group has no nonzero s(1)");
  const auto lcs = lower_central_series(a);
  GammaProfile profile;
  profile.p = p;
  profile.c = lcs.size() - 1;
  for (std::size_t h = 1; h <= profile.c; ++h) {
    profile.s.push_back(static_cast<unsigned>(exact_log(lcs[h - 1].exponent(), p)));
  }
  return profile;
}

std::uint64_t shield_class(const ShieldParams& params, const GammaProfile& profile) {
  if (params.p != profile.p) throw Error(ErrorCode::BadParameters, "top and bottom profiles use different primes");
  if (params.depth == 0 || profile.c == 0) throw Error(ErrorCode::TrivialGroup, "both groups must be nontrivial");
  std::uint64_t best = 0;
  for (std::size_t h = 1; h <= profile.c; ++h) {
    const std::uint64_t value = params.a * h + (profile.s[h - 1] - std::uint64_t{1}) * params.b;
    best = std::max(best, value);
  }
  return best;
}

std::uint64_t shield_class(const ConcreteGroup& a, const ConcreteGroup& b, std::uint64_t p) {
  return shield_class(shield_params(b, p), gamma_profile(a, p));
}

namespace {

std::int64_t to_signed(std::uint64_t x) {
  if (x > static_cast<std::uint64_t>(INT64_MAX)) throw Error(ErrorCode::Overflow, "parameter exceeds int64");
  return static_cast<std::int64_t>(x);
}

void check_common(std::uint64_t c, std::uint64_t p, unsigned v, unsigned alpha) {
  if (c < 1) throw Error(ErrorCode::BadParameters, "class c must be >= 1");
  if (v < 1) throw Error(ErrorCode::BadParameters, "v must be >= 1");
  if (alpha < 1) throw Error(ErrorCode::BadParameters, "alpha must be >= 1");
  require_prime(p);
}

// (1 - p^k) / (1 - p) = 1 + p + ... + p^{k-1}, computed as the quotient.
Rational geometric_quotient(std::int64_t p, unsigned k) {
  return Rational(1 - to_signed(checked_pow(static_cast<std::uint64_t>(p), k)), 1 - p);
}

}  // namespace

Rational bound1(std::uint64_t c, std::uint64_t t, std::uint64_t l, std::uint64_t p, unsigned v, unsigned alpha) {
  check_common(c, p, v, alpha);
  if (t < 1 || t < l) throw Error(ErrorCode::BadParameters, "bound1 needs t >= l and t >= 1");
  const std::int64_t pp = to_signed(p);
  const Rational pv1 = to_signed(checked_pow(p, v - 1));
  const Rational ct = Rational(to_signed(c)) * to_signed(t);
  const Rational inner = geometric_quotient(pp, v - 1) + Rational(to_signed(l), to_signed(t)) * pv1;
  const Rational value = Rational(to_signed(c)) + ct * (pp - 1) * inner + Rational(alpha - 1) * (pp - 1) * pv1;
  if (!value.is_integer()) throw Error(ErrorCode::InternalError, "bound1 evaluated to " + value.to_string());
  return value;
}

std::int64_t bound2(std::uint64_t c, std::uint64_t t, std::uint64_t z, std::uint64_t p, unsigned v, unsigned alpha) {
  check_common(c, p, v, alpha);
  if (t < z) throw Error(ErrorCode::BadParameters, "bound2 needs t >= z");
  const std::int64_t pp = to_signed(p);
  const Rational pv1 = to_signed(checked_pow(p, v - 1));
  const Rational value = Rational(to_signed(c)) +
                         Rational(to_signed(c)) * to_signed(t - z) * (pp - 1) * geometric_quotient(pp, v) +
                         Rational(alpha - 1) * (pp - 1) * pv1;
  if (!value.is_integer()) throw Error(ErrorCode::InternalError, "bound2 evaluated to " + value.to_string());
  return value.num();
}

std::uint64_t crossover(std::uint64_t c, std::uint64_t z, std::uint64_t l, std::uint64_t p, unsigned v,
                        unsigned alpha) {
  check_common(c, p, v, alpha);
  const std::uint64_t start = std::max<std::uint64_t>({z, l, 1});
  auto gap = [&](std::uint64_t t) { return Rational(bound2(c, t, z, p, v, alpha)) - bound1(c, t, l, p, v, alpha); };
  const Rational slope = Rational(to_signed(c)) * (to_signed(p) - 1) * to_signed(checked_pow(p, v - 1));

  const Rational at_start = gap(start);
  std::uint64_t t = start;
  if (at_start <= Rational(0)) {
    // Integer gap: need start + k with at_start + k * slope > 0.
    const std::int64_t deficit = -at_start.num();
    t = start + static_cast<std::uint64_t>(deficit / slope.num()) + 1;
  }
  if (!(gap(t) > Rational(0)) || (t > start && gap(t - 1) > Rational(0))) {
    throw Error(ErrorCode::InternalError, "crossover solve disagrees with direct evaluation");
  }
  return t;
}

}  // namespace wreathvar
