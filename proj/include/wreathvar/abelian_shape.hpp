#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wreathvar/group_expr.hpp"
#include "wreathvar/numeric.hpp"

namespace wreathvar {

/// The cyclic group of order q^w, q prime, w >= 1.
struct PrimePower {
  std::uint64_t q;
  unsigned w;

  std::uint64_t value() const { return checked_pow(q, w); }
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

struct Summand {
  std::uint64_t q;
  unsigned w;
  Cardinal mult;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Symbolic abelian group: a direct sum of cyclic q-groups (multiplicities
/// possibly infinite) plus a flag for elements of unbounded or infinite order.
///
/// Canonical form: summands sorted by (q, w), each pair at most once, every
/// multiplicity >= 1. Duplicates merge by adding multiplicities.
class AbelianShape {
 public:
  AbelianShape() = default;

  /// Validates (q prime, w >= 1) and canonicalizes; zero multiplicities are dropped.
  static AbelianShape from_summands(std::vector<Summand> summands, bool unbounded = false);
  static AbelianShape unbounded_shape() { return from_summands({}, true); }

  const std::vector<Summand>& summands() const { return summands_; }
  bool unbounded() const { return unbounded_; }
  bool is_trivial() const { return summands_.empty() && !unbounded_; }
  /// No infinite multiplicity and not unbounded.
  bool is_finite() const;

  /// Compact form, e.g. "C3^inf x C2^7", "1", "Z x C2".
  std::string to_string() const;

  friend bool operator==(const AbelianShape&, const AbelianShape&) = default;

 private:
  std::vector<Summand> summands_;
  bool unbounded_ = false;
};

/// Splits each invariant factor into prime-power parts and merges them.
AbelianShape normalize(std::span<const std::uint64_t> invariant_factors);

/// Infinite when the unbounded flag is set; lcm of q^w otherwise (1 if trivial).
Cardinal shape_exponent(const AbelianShape& b);

/// The summands at prime p. Throws InfiniteExponent for unbounded shapes.
AbelianShape primary_component(const AbelianShape& b, std::uint64_t p);

/// Largest divisor of n coprime to m.
std::uint64_t coprime_part(std::uint64_t n, std::uint64_t m);

/// True iff C_{q^w}^count embeds in B: the summands with prime q and exponent
/// >= w number at least `count`.
bool contains_direct_power(const AbelianShape& b, PrimePower qw, Cardinal count);

/// C_{p^v}^l x C_{p^{v-1}}^{t-l}
AbelianShape make_z(std::uint64_t l, std::uint64_t t, std::uint64_t p, unsigned v);
/// C_{p^v}^{t-z}
AbelianShape make_y(std::uint64_t z, std::uint64_t t, std::uint64_t p, unsigned v);

/// Invariant factors e_1 | e_2 | ... | e_k of a finite shape, ascending;
/// empty for the trivial group. Throws NotFinite.
std::vector<std::uint64_t> invariant_factors(const AbelianShape& b);

/// Direct product of the summands as a group expression. Throws NotFinite
/// for infinite multiplicities or unbounded shapes.
GroupExpr to_group_expr(const AbelianShape& b);

nlohmann::json to_json(const AbelianShape& b);
AbelianShape abelian_shape_from_json(const nlohmann::json& j);

/// Accepts JSON (leading '{') or the compact syntax: factors C<n>, C<n>^<k>,
/// C<n>^inf, Z (infinite cyclic), "unbounded", or "1", joined by 'x'.
/// C<n> with composite n is split into prime-power summands.
AbelianShape parse_abelian_shape(std::string_view text);

}  // namespace wreathvar
