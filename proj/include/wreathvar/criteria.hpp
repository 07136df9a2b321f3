#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wreathvar/abelian_shape.hpp"
#include "wreathvar/concrete_group.hpp"

namespace wreathvar {

/// What the criteria need to know about a nilpotent group A of finite
/// exponent: its class c and exponent m. c == 0 exactly when m == 1.
class NilpotentProfile {
 public:
  /// Throws BadParameters when the pair is inconsistent.
  NilpotentProfile(std::size_t c, std::uint64_t m);

  std::size_t c() const { return c_; }
  std::uint64_t m() const { return m_; }

  /// "c=2,m=4"
  std::string to_string() const;
  friend bool operator==(const NilpotentProfile&, const NilpotentProfile&) = default;

 private:
  std::size_t c_;
  std::uint64_t m_;
};

/// Parses "c=2,m=4" (either order, whitespace tolerated).
NilpotentProfile parse_profile(std::string_view text);

/// (class, exponent) of a concrete group; throws NotNilpotent.
NilpotentProfile profile_of(const ConcreteGroup& a);

enum class Branch {
  InfiniteExponent,     // B not of finite nonzero exponent
  Vacuous,              // A or B trivial
  FiniteExponentCheck,  // per-prime demands on B
  CoprimeFailure,       // finite groups with exponents sharing a prime
  AbelianInfiniteA,     // abelian A of infinite exponent
};

std::string_view to_string(Branch b);

/// B must contain C_{q^w}^count.
struct Demand {
  PrimePower power;
  Cardinal count;

  friend bool operator==(const Demand&, const Demand&) = default;
};

struct Verdict {
  bool holds = false;
  Branch branch = Branch::Vacuous;
  std::vector<Demand> required;
  std::vector<Demand> missing;  // empty iff holds
  std::string narrative;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// var(A wr B) = var(A) var(B) for nilpotent A of finite exponent m and class
/// c, abelian B. Holds when B has no finite nonzero exponent. Otherwise, with
/// n = exp B and q^v exactly dividing n for each prime q | n, B must contain
/// C_{q^v}^c when q does not divide m and C_{q^v}^inf when it does.
Verdict criterion_main(const NilpotentProfile& a, const AbelianShape& b);

/// Same condition for a nontrivial nilpotent variety of finite exponent and
/// the circle product V o B.
Verdict criterion_circle(const NilpotentProfile& v, const AbelianShape& b);

/// A a nilpotent p-group of exponent p^u, B a p-group of exponent p^v:
/// holds iff B contains C_{p^v}^inf. Throws NotPPrimary for other B.
Verdict criterion_pgroup(std::uint64_t p, unsigned u, const AbelianShape& b);

/// Finite A and B: coprime exponents and C_{q^v}^c in B for each q^v || n.
/// Throws NotFinite when B has infinite multiplicities or is unbounded.
Verdict criterion_finite(const NilpotentProfile& a, const AbelianShape& b);

/// Abelian A of exponent m (possibly infinite). Holds iff m or exp B is
/// infinite, or for every common prime p of m and n the p-component of B has
/// infinitely many summands C_{p^v}, p^v || n.
Verdict criterion_abelian(Cardinal m, const AbelianShape& b);

/// The same abelian criterion stated as "B contains C_{n/d}^inf" with
/// d = coprime_part(n, m). Evaluated independently of criterion_abelian.
Verdict criterion_abelian_quotient_form(Cardinal m, const AbelianShape& b);

nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace wreathvar
