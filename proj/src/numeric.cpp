#include "wreathvar/numeric.hpp"

#include <limits>
#include <numeric>

#include "wreathvar/error.hpp"

namespace wreathvar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidExpr: return "InvalidExpr";
    case ErrorCode::OversizeGroup: return "OversizeGroup";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::InfiniteExponent: return "InfiniteExponent";
    case ErrorCode::NotPPrimary: return "NotPPrimary";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow,
                std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  if (base <= 1) return exp == 0 ? 1 : base;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

int exact_log(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return -1;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

Cardinal operator+(const Cardinal& a, const Cardinal& b) {
  if (a.is_infinite() || b.is_infinite()) return Cardinal::infinite();
  std::uint64_t r;
  if (__builtin_add_overflow(a.value(), b.value(), &r)) {
    throw Error(ErrorCode::Overflow, "multiplicity sum exceeds 64 bits");
  }
  return r;
}

std::string Cardinal::to_string() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw Error(ErrorCode::BadParameters, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw Error(ErrorCode::Overflow, "rational value exceeds 64 bits");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ -
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace wreathvar
