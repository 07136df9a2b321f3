#include "wreathvar/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include <nlohmann/json.hpp>

#include "wreathvar/error.hpp"
#include "wreathvar/group_engine.hpp"

namespace wreathvar {

NilpotentProfile::NilpotentProfile(std::size_t c, std::uint64_t m) : c_(c), m_(m) {
  if (m < 1) throw Error(ErrorCode::BadParameters, "profile exponent m must be >= 1");
  if ((c == 0) != (m == 1)) {
    throw Error(ErrorCode::BadParameters, "profile c=" + std::to_string(c) + ",m=" + std::to_string(m) +
                                              " is inconsistent: c = 0 exactly when m = 1");
  }
}

std::string NilpotentProfile::to_string() const {
  return "c=" + std::to_string(c_) + ",m=" + std::to_string(m_);
}

NilpotentProfile parse_profile(std::string_view text) {
  std::optional<std::uint64_t> c, m;
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  std::size_t start = 0;
  while (start < s.size()) {
    auto comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? s.size() : comma + 1;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "profile: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw Error(ErrorCode::ParseError, "profile." + key + ": expected a nonnegative integer");
    }
    std::uint64_t number;
    try {
      number = std::stoull(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "profile." + key + ": out of range");
    }
    if (key == "c") {
      c = number;
    } else if (key == "m") {
      m = number;
    } else {
      throw Error(ErrorCode::ParseError, "profile: unknown key '" + key + "'");
    }
  }
  if (!c) throw Error(ErrorCode::ParseError, "profile.c: missing");
  if (!m) throw Error(ErrorCode::ParseError, "profile.m: missing");
  return NilpotentProfile(*c, *m);
}

NilpotentProfile profile_of(const ConcreteGroup& a) {
  const auto c = nilpotency_class(a);
  if (!c) throw Error(ErrorCode::NotNilpotent, a.name() + " is not nilpotent");
  return NilpotentProfile(*c, group_exponent(a));
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::InfiniteExponent: return "InfiniteExponent";
    case Branch::Vacuous: return "Vacuous";
    case Branch::FiniteExponentCheck: return "FiniteExponentCheck";
    case Branch::CoprimeFailure: return "CoprimeFailure";
    case Branch::AbelianInfiniteA: return "AbelianInfiniteA";
  }
  return "Unknown";
}

namespace {

std::string describe(const Demand& d) {
  return "C" + std::to_string(d.power.value()) + "^" + d.count.to_string();
}

std::string join(const std::vector<Demand>& demands) {
  std::string s;
  for (std::size_t i = 0; i < demands.size(); ++i) {
    if (i) s += ", ";
    s += describe(demands[i]);
  }
  return s;
}

/// Fills `missing`, `holds` and a narrative from `required`.
Verdict settle(Branch branch, std::vector<Demand> required, const AbelianShape& b, const std::string& context) {
  Verdict v;
  v.branch = branch;
  v.required = std::move(required);
  for (const auto& d : v.required) {
    if (!contains_direct_power(b, d.power, d.count)) v.missing.push_back(d);
  }
  v.holds = v.missing.empty();
  v.narrative = context + "; B = " + b.to_string();
  if (!v.required.empty()) v.narrative += " must contain " + join(v.required);
  v.narrative += v.holds ? "; all demands met" : "; missing " + join(v.missing);
  return v;
}

Verdict simple(bool holds, Branch branch, std::string narrative) {
  Verdict v;
  v.holds = holds;
  v.branch = branch;
  v.narrative = std::move(narrative);
  return v;
}

/// Prime powers q^v exactly dividing n, ascending in q.
std::vector<PrimePower> exact_prime_powers(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (const auto& [q, v] : factorize(n)) out.push_back({q, v});
  return out;
}

}  // namespace

Verdict criterion_main(const NilpotentProfile& a, const AbelianShape& b) {
  const Cardinal exp_b = shape_exponent(b);
  if (exp_b.is_infinite()) {
    return simple(true, Branch::InfiniteExponent, "B = " + b.to_string() + " has no finite nonzero exponent");
  }
  const std::uint64_t n = exp_b.value();
  if (n == 1 || a.c() == 0) {
    return simple(true, Branch::Vacuous,
                  "A (" + a.to_string() + ") or B (" + b.to_string() + ") is trivial; nothing is demanded");
  }
  std::vector<Demand> required;
  for (const auto& qv : exact_prime_powers(n)) {
    const bool shared = a.m() % qv.q == 0;
    required.push_back({qv, shared ? Cardinal::infinite() : Cardinal(a.c())});
  }
  return settle(Branch::FiniteExponentCheck, std::move(required), b,
                "A has " + a.to_string() + ", B has exponent " + std::to_string(n) + ", d = " +
                    std::to_string(coprime_part(n, a.m())));
}

Verdict criterion_circle(const NilpotentProfile& v, const AbelianShape& b) { return criterion_main(v, b); }

Verdict criterion_pgroup(std::uint64_t p, unsigned u, const AbelianShape& b) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, std::to_string(p) + " is not prime");
  if (u < 1) throw Error(ErrorCode::BadParameters, "A must have exponent p^u with u >= 1");
  if (b.unbounded()) throw Error(ErrorCode::NotPPrimary, "B is unbounded");
  if (b.summands().empty()) throw Error(ErrorCode::NotPPrimary, "B is trivial; its exponent is not p^v with v >= 1");
  unsigned v = 0;
  for (const auto& s : b.summands()) {
    if (s.q != p) {
      throw Error(ErrorCode::NotPPrimary, "B has a summand at prime " + std::to_string(s.q) + " != " + std::to_string(p));
    }
    v = std::max(v, s.w);
  }
  return settle(Branch::FiniteExponentCheck, {{{p, v}, Cardinal::infinite()}}, b,
                "A has exponent " + std::to_string(p) + "^" + std::to_string(u) + ", B has exponent " +
                    std::to_string(p) + "^" + std::to_string(v));
}

Verdict criterion_finite(const NilpotentProfile& a, const AbelianShape& b) {
  if (!b.is_finite()) throw Error(ErrorCode::NotFinite, "B = " + b.to_string() + " is not finite");
  const std::uint64_t n = shape_exponent(b).value();
  const std::uint64_t g = std::gcd(a.m(), n);
  std::vector<Demand> required;
  for (const auto& qv : exact_prime_powers(n)) {
    // A shared prime could only be met by an infinite power, which a finite
    // B never has; listing it that way names the coprimality failure.
    required.push_back({qv, g % qv.q == 0 ? Cardinal::infinite() : Cardinal(a.c())});
  }
  const Branch branch = g == 1 ? Branch::FiniteExponentCheck : Branch::CoprimeFailure;
  Verdict v = settle(branch, std::move(required), b,
                     "finite A with " + a.to_string() + " and B of exponent " + std::to_string(n) +
                         ", gcd(m, n) = " + std::to_string(g));

  // C_n^c embeds in B iff at least c invariant factors of B equal n.
  Cardinal rank = 0;
  for (const auto& s : b.summands()) rank = rank + s.mult;
  if (rank > Cardinal(std::uint64_t{1} << 16)) return v;  // too many factors to list
  const auto factors = invariant_factors(b);
  const auto full = static_cast<std::size_t>(std::count(factors.begin(), factors.end(), n));
  const bool holds = g == 1 && (n == 1 || full >= a.c());
  if (holds != v.holds) {
    throw Error(ErrorCode::InternalError, "invariant-factor and per-prime forms disagree for " + b.to_string());
  }
  return v;
}

Verdict criterion_abelian(Cardinal m, const AbelianShape& b) {
  if (m.is_infinite()) return simple(true, Branch::AbelianInfiniteA, "A is not of finite exponent");
  if (m == Cardinal(0)) throw Error(ErrorCode::BadParameters, "exponent of A must be >= 1 or infinite");
  const Cardinal exp_b = shape_exponent(b);
  if (exp_b.is_infinite()) {
    return simple(true, Branch::InfiniteExponent, "B = " + b.to_string() + " is not of finite exponent");
  }
  const std::uint64_t n = exp_b.value();
  // Per common prime p: B(p) must have infinitely many summands C_{p^v}
  // with p^v the full p-part of n. Those are the top summands of B(p).
  std::vector<Demand> required;
  Verdict v;
  v.branch = Branch::FiniteExponentCheck;
  for (const auto& [p, k] : factorize(n)) {
    if (m.value() % p != 0) continue;
    const Demand d{{p, k}, Cardinal::infinite()};
    required.push_back(d);
    const AbelianShape component = primary_component(b, p);
    Cardinal top = 0;
    for (const auto& s : component.summands()) {
      if (s.w == k) top = top + s.mult;
    }
    if (top.is_finite()) v.missing.push_back(d);
  }
  v.required = std::move(required);
  v.holds = v.missing.empty();
  v.narrative = "abelian A of exponent " + m.to_string() + ", B = " + b.to_string() + " of exponent " +
                std::to_string(n) + "; common primes need infinitely many top summands";
  if (!v.missing.empty()) v.narrative += "; missing " + join(v.missing);
  return v;
}

Verdict criterion_abelian_quotient_form(Cardinal m, const AbelianShape& b) {
  if (m.is_infinite()) return simple(true, Branch::AbelianInfiniteA, "A is not of finite exponent");
  if (m == Cardinal(0)) throw Error(ErrorCode::BadParameters, "exponent of A must be >= 1 or infinite");
  const Cardinal exp_b = shape_exponent(b);
  if (exp_b.is_infinite()) {
    return simple(true, Branch::InfiniteExponent, "B = " + b.to_string() + " is not of finite exponent");
  }
  const std::uint64_t n = exp_b.value();
  const std::uint64_t d = coprime_part(n, m.value());
  std::vector<Demand> required;
  for (const auto& qv : exact_prime_powers(n / d)) required.push_back({qv, Cardinal::infinite()});
  return settle(Branch::FiniteExponentCheck, std::move(required), b,
                "abelian A of exponent " + m.to_string() + ", n/d = " + std::to_string(n / d) +
                    "; B must contain C_{n/d}^inf");
}

nlohmann::json to_json(const Verdict& v) {
  auto demands = [](const std::vector<Demand>& ds) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : ds) {
      arr.push_back({{"q", d.power.q},
                     {"w", d.power.w},
                     {"count", d.count.is_infinite() ? nlohmann::json("inf") : nlohmann::json(d.count.value())}});
    }
    return arr;
  };
  return {{"holds", v.holds},
          {"branch", std::string(to_string(v.branch))},
          {"required", demands(v.required)},
          {"missing", demands(v.missing)},
          {"narrative", v.narrative}};
}

Verdict verdict_from_json(const nlohmann::json& j) {
  try {
    Verdict v;
    v.holds = j.at("holds").get<bool>();
    const auto branch = j.at("branch").get<std::string>();
    bool known = false;
    for (auto b : {Branch::InfiniteExponent, Branch::Vacuous, Branch::FiniteExponentCheck, Branch::CoprimeFailure,
                   Branch::AbelianInfiniteA}) {
      if (to_string(b) == branch) {
        v.branch = b;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::ParseError, "verdict.branch: unknown value '" + branch + "'");
    auto demands = [](const nlohmann::json& arr) {
      std::vector<Demand> out;
      for (const auto& d : arr) {
        const auto& count = d.at("count");
        out.push_back({{d.at("q").get<std::uint64_t>(), d.at("w").get<unsigned>()},
                       count.is_string() ? Cardinal::infinite() : Cardinal(count.get<std::uint64_t>())});
      }
      return out;
    };
    v.required = demands(j.at("required"));
    v.missing = demands(j.at("missing"));
    v.narrative = j.at("narrative").get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("verdict: ") + e.what());
  }
}

}  // namespace wreathvar
