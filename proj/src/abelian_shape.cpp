#include "wreathvar/abelian_shape.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "wreathvar/error.hpp"

namespace wreathvar {

AbelianShape AbelianShape::from_summands(std::vector<Summand> summands, bool unbounded) {
  std::map<std::pair<std::uint64_t, unsigned>, Cardinal> merged;
  for (const auto& s : summands) {
    if (!is_prime(s.q)) throw Error(ErrorCode::BadParameters, "summand prime " + std::to_string(s.q) + " is not prime");
    if (s.w < 1) throw Error(ErrorCode::BadParameters, "summand exponent must be >= 1");
    (void)checked_pow(s.q, s.w);
    if (s.mult == Cardinal(0)) continue;
    auto [it, inserted] = merged.try_emplace({s.q, s.w}, s.mult);
    if (!inserted) it->second = it->second + s.mult;
  }
  AbelianShape shape;
  shape.unbounded_ = unbounded;
  for (const auto& [key, mult] : merged) shape.summands_.push_back({key.first, key.second, mult});
  return shape;
}

bool AbelianShape::is_finite() const {
  return !unbounded_ && std::none_of(summands_.begin(), summands_.end(),
                                     [](const Summand& s) { return s.mult.is_infinite(); });
}

std::string AbelianShape::to_string() const {
  if (is_trivial()) return "1";
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " x ";
    out += part;
  };
  if (unbounded_) append("Z");
  // Larger primes first reads naturally ("C3^inf x C2^7").
  for (auto it = summands_.rbegin(); it != summands_.rend(); ++it) {
    std::string part = "C" + std::to_string(checked_pow(it->q, it->w));
    if (it->mult != Cardinal(1)) part += "^" + it->mult.to_string();
    append(part);
  }
  return out;
}

AbelianShape normalize(std::span<const std::uint64_t> invariant_factors) {
  std::vector<Summand> summands;
  for (const auto n : invariant_factors) {
    if (n < 1) throw Error(ErrorCode::BadParameters, "invariant factors must be >= 1");
    for (const auto& [q, w] : factorize(n)) summands.push_back({q, w, 1});
  }
  return AbelianShape::from_summands(std::move(summands));
}

Cardinal shape_exponent(const AbelianShape& b) {
  if (b.unbounded()) return Cardinal::infinite();
  std::uint64_t n = 1;
  for (const auto& s : b.summands()) n = checked_lcm(n, checked_pow(s.q, s.w));
  return n;
}

AbelianShape primary_component(const AbelianShape& b, std::uint64_t p) {
  if (b.unbounded()) throw Error(ErrorCode::InfiniteExponent, "primary components need a shape of finite exponent");
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, std::to_string(p) + " is not prime");
  std::vector<Summand> kept;
  std::copy_if(b.summands().begin(), b.summands().end(), std::back_inserter(kept),
               [p](const Summand& s) { return s.q == p; });
  return AbelianShape::from_summands(std::move(kept));
}

std::uint64_t coprime_part(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BadParameters, "coprime_part needs n, m >= 1");
  for (std::uint64_t g = std::gcd(n, m); g > 1; g = std::gcd(n, g)) n /= g;
  return n;
}

bool contains_direct_power(const AbelianShape& b, PrimePower qw, Cardinal count) {
  if (count == Cardinal(0)) return true;
  Cardinal available = 0;
  for (const auto& s : b.summands()) {
    if (s.q == qw.q && s.w >= qw.w) available = available + s.mult;
  }
  return available >= count;
}

AbelianShape make_z(std::uint64_t l, std::uint64_t t, std::uint64_t p, unsigned v) {
  if (t < l) throw Error(ErrorCode::BadParameters, "Z(l, t) needs t >= l");
  if (v < 1) throw Error(ErrorCode::BadParameters, "Z(l, t) needs v >= 1");
  std::vector<Summand> summands{{p, v, l}};
  if (v > 1) summands.push_back({p, v - 1, t - l});
  return AbelianShape::from_summands(std::move(summands));
}

AbelianShape make_y(std::uint64_t z, std::uint64_t t, std::uint64_t p, unsigned v) {
  if (t < z) throw Error(ErrorCode::BadParameters, "Y(z, t) needs t >= z");
  if (v < 1) throw Error(ErrorCode::BadParameters, "Y(z, t) needs v >= 1");
  return AbelianShape::from_summands({{p, v, t - z}});
}

std::vector<std::uint64_t> invariant_factors(const AbelianShape& b) {
  if (!b.is_finite()) throw Error(ErrorCode::NotFinite, b.to_string() + " is not a finite group");
  // Per prime, exponents largest first; the i-th largest invariant factor
  // multiplies the i-th entry of every prime.
  std::map<std::uint64_t, std::vector<unsigned>> per_prime;
  std::size_t k = 0;
  for (const auto& s : b.summands()) {
    auto& list = per_prime[s.q];
    list.insert(list.end(), s.mult.value(), s.w);
  }
  for (auto& [q, list] : per_prime) {
    std::sort(list.rbegin(), list.rend());
    k = std::max(k, list.size());
  }
  std::vector<std::uint64_t> factors(k, 1);
  for (const auto& [q, list] : per_prime) {
    for (std::size_t i = 0; i < list.size(); ++i) factors[i] = checked_mul(factors[i], checked_pow(q, list[i]));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

GroupExpr to_group_expr(const AbelianShape& b) {
  if (!b.is_finite()) throw Error(ErrorCode::NotFinite, b.to_string() + " is not a finite group");
  std::vector<GroupExpr> parts;
  for (const auto& s : b.summands()) {
    auto c = GroupExpr::cyclic(checked_pow(s.q, s.w));
    parts.push_back(s.mult == Cardinal(1) ? c : GroupExpr::power(c, s.mult.value()));
  }
  if (parts.empty()) return GroupExpr::cyclic(1);
  if (parts.size() == 1) return parts.front();
  return GroupExpr::direct(std::move(parts));
}

nlohmann::json to_json(const AbelianShape& b) {
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& s : b.summands()) {
    nlohmann::json mult = s.mult.is_infinite() ? nlohmann::json("inf") : nlohmann::json(s.mult.value());
    summands.push_back({{"q", s.q}, {"w", s.w}, {"mult", mult}});
  }
  return {{"summands", summands}, {"unbounded", b.unbounded()}};
}

AbelianShape abelian_shape_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "shape: expected an object");
  bool unbounded = false;
  if (j.contains("unbounded")) {
    if (!j["unbounded"].is_boolean()) throw Error(ErrorCode::ParseError, "shape.unbounded: expected a boolean");
    unbounded = j["unbounded"].get<bool>();
  }
  std::vector<Summand> summands;
  if (j.contains("summands")) {
    const auto& arr = j["summands"];
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "shape.summands: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "shape.summands[" + std::to_string(i) + "]";
      const auto& s = arr[i];
      auto need_uint = [&](const char* key) -> std::uint64_t {
        if (!s.is_object() || !s.contains(key) || !s[key].is_number_unsigned()) {
          throw Error(ErrorCode::ParseError, path + "." + key + ": expected a nonnegative integer");
        }
        return s[key].get<std::uint64_t>();
      };
      const auto q = need_uint("q");
      const auto w = need_uint("w");
      Cardinal mult;
      if (!s.contains("mult")) throw Error(ErrorCode::ParseError, path + ".mult: missing");
      if (s["mult"].is_string() && s["mult"].get<std::string>() == "inf") {
        mult = Cardinal::infinite();
      } else {
        mult = need_uint("mult");
      }
      if (!is_prime(q)) throw Error(ErrorCode::ParseError, path + ".q: " + std::to_string(q) + " is not prime");
      if (w < 1 || w > 64) throw Error(ErrorCode::ParseError, path + ".w: must be between 1 and 64");
      summands.push_back({q, static_cast<unsigned>(w), mult});
    }
  }
  return AbelianShape::from_summands(std::move(summands), unbounded);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::ParseError, what + ": expected a number, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, what + ": number out of range");
  }
}

}  // namespace

AbelianShape parse_abelian_shape(std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::ParseError, std::string("shape: ") + e.what());
    }
    return abelian_shape_from_json(j);
  }
  if (body.empty()) throw Error(ErrorCode::ParseError, "shape: empty");

  std::vector<Summand> summands;
  bool unbounded = false;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t sep = body.find('x', start);
    const std::string factor = trim(std::string_view(body).substr(start, sep == std::string::npos ? sep : sep - start));
    start = sep == std::string::npos ? body.size() + 1 : sep + 1;

    if (factor == "1") continue;
    if (factor == "Z" || factor == "unbounded") {
      unbounded = true;
      continue;
    }
    if (factor.size() < 2 || factor.front() != 'C') {
      throw Error(ErrorCode::ParseError, "shape: cannot read factor '" + factor + "'");
    }
    const auto caret = factor.find('^');
    const auto n = parse_uint(trim(factor.substr(1, caret == std::string::npos ? caret : caret - 1)),
                              "shape factor '" + factor + "'");
    if (n < 1) throw Error(ErrorCode::ParseError, "shape factor '" + factor + "': order must be >= 1");
    Cardinal mult = 1;
    if (caret != std::string::npos) {
      const std::string k = trim(factor.substr(caret + 1));
      mult = k == "inf" ? Cardinal::infinite() : Cardinal(parse_uint(k, "shape factor '" + factor + "' multiplicity"));
    }
    for (const auto& [q, w] : factorize(n)) summands.push_back({q, w, mult});
  }
  return AbelianShape::from_summands(std::move(summands), unbounded);
}

}  // namespace wreathvar
