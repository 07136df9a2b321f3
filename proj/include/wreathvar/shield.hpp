#pragma once

#include <cstdint>
#include <vector>

#include "wreathvar/concrete_group.hpp"
#include "wreathvar/numeric.hpp"

namespace wreathvar {

/// K_{i,p}(B) for i = 1, 2, ...: the product of gamma_r(B)^{p^j} over all
/// r, j with r * p^j >= i. `terms` runs from K_1 down to the first trivial
/// term; depth is the largest i with K_i != {1}.
struct KpSeries {
  std::uint64_t p = 0;
  std::vector<Subgroup> terms;
  std::size_t depth = 0;
};

/// Parameters of the K_p-series of the top group:
///   p^{e(s)} = |K_s / K_{s+1}|,  a = 1 + (p-1) sum s e(s),  b = (p-1) depth.
/// `e[s - 1]` holds e(s).
struct ShieldParams {
  std::uint64_t p = 0;
  std::size_t depth = 0;
  std::vector<unsigned> e;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

/// Exponents of the lower central terms of the bottom group:
/// p^{s(h)} = exp gamma_h(A), `s[h - 1]` holds s(h), h = 1..c.
struct GammaProfile {
  std::uint64_t p = 0;
  std::size_t c = 0;
  std::vector<unsigned> s;

  /// s(c), the exponent of the last nontrivial term.
  unsigned alpha() const { return s.back(); }
};

/// Throws NotPGroup unless |B| is a power of p.
KpSeries kp_series(const ConcreteGroup& b, std::uint64_t p);

ShieldParams shield_params(const ConcreteGroup& b, std::uint64_t p);
ShieldParams shield_params(const KpSeries& series);

/// Throws TrivialGroup for A = {1}, NotPGroup otherwise unless A is a p-group.
GammaProfile gamma_profile(const ConcreteGroup& a, std::uint64_t p);

/// max over h of a*h + (s(h) - 1)*b: the nilpotency class of A wr B when
/// both are nontrivial finite p-groups.
std::uint64_t shield_class(const ShieldParams& params, const GammaProfile& profile);
std::uint64_t shield_class(const ConcreteGroup& a, const ConcreteGroup& b, std::uint64_t p);

/// c + c t (p-1) ((1 - p^{v-1}) / (1 - p) + (l / t) p^{v-1}) + (alpha - 1)(p-1) p^{v-1}
///
/// The class of A^beta wr Z(l, t) for t past an unspecified threshold; this
/// only evaluates the formula. Evaluated exactly; the result is always an
/// integer (InternalError otherwise).
/// Requires t >= l >= 0, t >= 1, v >= 1, alpha >= 1, c >= 1, p prime.
Rational bound1(std::uint64_t c, std::uint64_t t, std::uint64_t l, std::uint64_t p, unsigned v, unsigned alpha);

/// c + c (t - z)(p-1) (1 - p^v) / (1 - p) + (alpha - 1)(p-1) p^{v-1}
///
/// The class of a z-generator A~ wr Y(z, t) past its own threshold.
/// Requires t >= z >= 0, v >= 1, alpha >= 1, c >= 1, p prime.
std::int64_t bound2(std::uint64_t c, std::uint64_t t, std::uint64_t z, std::uint64_t p, unsigned v, unsigned alpha);

/// Least t >= max(z, l, 1) with bound2 > bound1. bound2 - bound1 grows in t
/// with slope c (p-1) p^{v-1}, so this always exists.
std::uint64_t crossover(std::uint64_t c, std::uint64_t z, std::uint64_t l, std::uint64_t p, unsigned v,
                        unsigned alpha);

}  // namespace wreathvar
