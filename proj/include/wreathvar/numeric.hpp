#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wreathvar {

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Throws Error(Overflow) when the product does not fit.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

/// Largest k with p^k dividing n (n >= 1, p >= 2).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// If n == p^k returns k, otherwise -1.
int exact_log(std::uint64_t n, std::uint64_t p);

/// A member of N extended by a single infinite element that compares above
/// every natural number. Used for summand multiplicities and for exponents.
class Cardinal {
 public:
  constexpr Cardinal() = default;
  constexpr Cardinal(std::uint64_t n) : value_(n) {}  // NOLINT(implicit)

  static constexpr Cardinal infinite() {
    Cardinal c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Only meaningful when finite.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(const Cardinal& a, const Cardinal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  /// Saturating: infinity absorbs; finite overflow throws.
  friend Cardinal operator+(const Cardinal& a, const Cardinal& b);

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (den > 0, gcd(num, den) == 1). Intermediates use 128-bit arithmetic and
/// overflow of the normalized result throws Error(Overflow).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace wreathvar
