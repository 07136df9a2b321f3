#include "wreathvar/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <toml.hpp>

#include "wreathvar/abelian_shape.hpp"
#include "wreathvar/concrete_group.hpp"
#include "wreathvar/criteria.hpp"
#include "wreathvar/error.hpp"
#include "wreathvar/group_engine.hpp"
#include "wreathvar/group_expr.hpp"
#include "wreathvar/oracle.hpp"
#include "wreathvar/shield.hpp"
#include "wreathvar/word.hpp"

namespace wreathvar {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::OversizeGroup:
    case ErrorCode::Overflow: return kExitResourceLimit;
    case ErrorCode::InternalError: return kExitInternal;
    default: return kExitInvalidInput;
  }
}

[[noreturn]] void bad_input(const std::string& field, const std::string& why) {
  throw InputError(field, "ParseError", kExitInvalidInput, field + ": " + why);
}

/// Runs f, relabelling library errors with the field they came from.
template <class F>
auto guarded(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(field, std::string(to_string(e.code())), exit_for(e.code()), field + ": " + e.what());
  } catch (const json::exception& e) {
    bad_input(field, e.what());
  }
}

std::uint64_t parse_uint(const std::string& field, std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) bad_input(field, "expected a nonnegative integer, got '" + std::string(text) + "'");
  return value;
}

std::string read_file(const std::string& field, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad_input(field, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

class Inputs {
 public:
  explicit Inputs(const json& raw) : raw_(raw) {
    if (!raw_.is_object()) bad_input("inputs", "expected a table of named inputs");
  }

  bool has(const std::string& key) const { return raw_.contains(key); }

  const json& at(const std::string& key) const {
    if (!has(key)) bad_input(key, "required input is missing");
    return raw_.at(key);
  }

  /// String input with @file indirection applied.
  std::string text(const std::string& key) const {
    const auto& v = at(key);
    if (!v.is_string()) bad_input(key, "expected a string");
    auto s = v.get<std::string>();
    if (!s.empty() && s.front() == '@') return read_file(key, s.substr(1));
    return s;
  }

  std::string text_or(const std::string& key, std::string fallback) const {
    return has(key) ? text(key) : std::move(fallback);
  }

  std::uint64_t uint(const std::string& key) const {
    const auto& v = at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
      if (v.get<std::int64_t>() < 0) bad_input(key, "expected a nonnegative integer");
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    if (v.is_string()) return parse_uint(key, v.get<std::string>());
    bad_input(key, "expected a nonnegative integer");
  }

  std::uint64_t uint_or(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? uint(key) : fallback;
  }

  unsigned small(const std::string& key) const {
    const auto v = uint(key);
    if (v > 1'000'000) bad_input(key, "value " + std::to_string(v) + " is out of range");
    return static_cast<unsigned>(v);
  }

  Cardinal cardinal(const std::string& key) const {
    const auto& v = at(key);
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinite")) {
      return Cardinal::infinite();
    }
    return Cardinal(uint(key));
  }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const auto& v = raw_.at(key);
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s == "true" || s == "1") return true;
      if (s == "false" || s == "0") return false;
    }
    bad_input(key, "expected true or false");
  }

 private:
  const json& raw_;
};

struct GroupInput {
  std::optional<GroupExpr> expr;  // empty for table groups such as Q8
  ConcreteGroup group;
  std::string label;
};

GroupInput group_input(const Inputs& in, const std::string& key, const Settings& settings) {
  const auto& raw = in.at(key);
  std::optional<GroupExpr> expr;
  if (raw.is_object()) {
    expr = guarded(key, [&] { return group_expr_from_json(raw); });
  } else {
    const auto text = in.text(key);
    if (text == "Q8") {
      auto q8 = quaternion_group();
      return {std::nullopt, q8, "Q8"};
    }
    if (text == "D4") {
      expr = GroupExpr::wreath(GroupExpr::cyclic(2), GroupExpr::cyclic(2));
    } else if (!text.empty() && text.front() == '{') {
      expr = guarded(key, [&] { return parse_group_expr(text); });
    } else {
      bad_input(key, "expected a JSON group expression, @file, Q8 or D4");
    }
  }
  auto group = guarded(key, [&] { return ConcreteGroup::materialize(*expr, settings.cap); });
  return {expr, group, expr->to_string()};
}

AbelianShape shape_input(const Inputs& in, const std::string& key) {
  const auto& raw = in.at(key);
  if (raw.is_object()) return guarded(key, [&] { return abelian_shape_from_json(raw); });
  const auto text = in.text(key);
  return guarded(key, [&] { return parse_abelian_shape(text); });
}

std::optional<NilpotentProfile> profile_input(const Inputs& in, const Settings& settings) {
  if (in.has("profile")) {
    const auto text = in.text("profile");
    return guarded("profile", [&] { return parse_profile(text); });
  }
  if (in.has("group")) {
    const auto g = group_input(in, "group", settings);
    return guarded("group", [&] { return profile_of(g.group); });
  }
  return std::nullopt;
}

NilpotentProfile require_profile(const Inputs& in, const Settings& settings) {
  auto profile = profile_input(in, settings);
  if (!profile) bad_input("profile", "required input is missing (give a profile or a group)");
  return *profile;
}

std::uint64_t prime_input(const Inputs& in, const std::string& key = "p") {
  const auto p = in.uint(key);
  if (!is_prime(p)) bad_input(key, std::to_string(p) + " is not prime");
  return p;
}

ojson subgroup_orders(const std::vector<Subgroup>& terms) {
  ojson orders = ojson::array();
  for (const auto& t : terms) orders.push_back(t.order());
  return orders;
}

ojson word_list(const std::vector<Word>& words) {
  ojson list = ojson::array();
  for (const auto& w : words) list.push_back(w.to_string());
  return list;
}

ojson run_check(const Inputs& in, const Settings& settings) {
  const auto criterion = in.text_or("criterion", "main");
  const auto shape = shape_input(in, "shape");
  ojson result;
  result["command"] = "check";
  result["criterion"] = criterion;
  Verdict verdict;
  if (criterion == "main" || criterion == "circle" || criterion == "finite") {
    const auto profile = require_profile(in, settings);
    result["A"] = profile.to_string();
    verdict = guarded("shape", [&] {
      if (criterion == "finite") return criterion_finite(profile, shape);
      return criterion == "circle" ? criterion_circle(profile, shape) : criterion_main(profile, shape);
    });
  } else if (criterion == "abelian") {
    Cardinal m;
    if (in.has("m")) {
      m = in.cardinal("m");
      if (!m.is_infinite() && m.value() == 0) bad_input("m", "exponent must be positive or inf");
    } else {
      const auto profile = require_profile(in, settings);
      if (profile.c() > 1) bad_input("profile", "the abelian criterion needs class at most 1");
      m = Cardinal(profile.m());
    }
    result["A"] = "abelian, m=" + m.to_string();
    verdict = criterion_abelian(m, shape);
    const auto quotient = criterion_abelian_quotient_form(m, shape);
    if (quotient.holds != verdict.holds) {
      throw InputError("shape", "InternalError", kExitInternal, "abelian criterion forms disagree");
    }
    result["quotient_form_holds"] = quotient.holds;
  } else if (criterion == "pgroup") {
    const auto p = prime_input(in);
    unsigned u = 0;
    if (in.has("u")) {
      u = in.small("u");
    } else {
      const auto profile = require_profile(in, settings);
      const int log = exact_log(profile.m(), p);
      if (log < 1) bad_input("profile", "exponent " + std::to_string(profile.m()) + " is not a positive power of p");
      u = static_cast<unsigned>(log);
    }
    if (u < 1) bad_input("u", "must be at least 1");
    result["A"] = "p=" + std::to_string(p) + ",u=" + std::to_string(u);
    verdict = guarded("shape", [&] { return criterion_pgroup(p, u, shape); });
  } else {
    bad_input("criterion", "expected main, circle, finite, abelian or pgroup, got '" + criterion + "'");
  }
  result["B"] = shape.to_string();
  result["verdict"] = ojson(to_json(verdict));
  result["value"] = verdict.holds;
  return result;
}

ojson shield_summary(const KpSeries& series, const ShieldParams& params) {
  ojson out;
  out["kp_orders"] = subgroup_orders(series.terms);
  out["depth"] = params.depth;
  out["e"] = params.e;
  out["a"] = params.a;
  out["b"] = params.b;
  return out;
}

ojson run_shield(const Inputs& in, const Settings& settings) {
  const auto bottom = group_input(in, "bottom", settings);
  const auto top = group_input(in, "top", settings);
  const auto p = prime_input(in);
  const auto series = guarded("top", [&] { return kp_series(top.group, p); });
  const auto params = guarded("top", [&] { return shield_params(series); });
  const auto gamma = guarded("bottom", [&] { return gamma_profile(bottom.group, p); });
  const auto cls = shield_class(params, gamma);

  ojson result;
  result["command"] = "shield";
  result["bottom"] = bottom.label;
  result["top"] = top.label;
  result["p"] = p;
  result["top_params"] = shield_summary(series, params);
  result["bottom_c"] = gamma.c;
  result["bottom_s"] = gamma.s;
  result["class"] = cls;
  if (in.flag("brute")) {
    if (!bottom.expr || !top.expr) bad_input("brute", "needs both groups as expressions");
    const auto wreath = guarded("brute", [&] {
      return ConcreteGroup::materialize(GroupExpr::wreath(*bottom.expr, *top.expr), settings.cap);
    });
    const auto observed = nilpotency_class(wreath);
    result["observed"] = observed ? ojson(*observed) : ojson(nullptr);
    result["agree"] = observed && *observed == cls;
  }
  result["value"] = cls;
  return result;
}

ojson run_kpseries(const Inputs& in, const Settings& settings) {
  const auto g = group_input(in, "group", settings);
  const auto p = prime_input(in);
  const auto series = guarded("group", [&] { return kp_series(g.group, p); });
  ojson result;
  result["command"] = "kpseries";
  result["group"] = g.label;
  result["p"] = p;
  result["orders"] = subgroup_orders(series.terms);
  result["depth"] = series.depth;
  if (series.depth > 0) {
    const auto params = shield_params(series);
    result["e"] = params.e;
    result["a"] = params.a;
    result["b"] = params.b;
  }
  result["value"] = result["orders"];
  return result;
}

ojson run_lcs(const Inputs& in, const Settings& settings) {
  const auto g = group_input(in, "group", settings);
  const auto series = lower_central_series(g.group);
  const auto cls = nilpotency_class(series);
  ojson result;
  result["command"] = "lcs";
  result["group"] = g.label;
  result["order"] = g.group.order();
  result["exponent"] = g.group.exponent();
  result["orders"] = subgroup_orders(series);
  result["nilpotent"] = cls.has_value();
  result["class"] = cls ? ojson(*cls) : ojson(nullptr);
  result["value"] = cls ? ojson(*cls) : ojson("NotNilpotent");
  return result;
}

Budget budget_of(const Settings& settings) { return Budget{settings.budget}; }

ojson run_oracle_law(const Inputs& in, const Settings& settings) {
  const auto text = in.text("word");
  const auto w = guarded("word", [&] { return parse_word(text); });
  const auto g = group_input(in, "group", settings);
  const bool law = guarded("word", [&] { return is_law(w, g.group, budget_of(settings)); });
  ojson result;
  result["command"] = "oracle law";
  result["word"] = w.to_string();
  result["group"] = g.label;
  result["law"] = law;
  result["value"] = law;
  return result;
}

ojson run_oracle_laws(const Inputs& in, const Settings& settings) {
  const auto g = group_input(in, "group", settings);
  const auto arity = in.small("arity");
  const auto maxlen = in.small("maxlen");
  if (arity < 1) bad_input("arity", "must be at least 1");
  const auto laws = guarded("maxlen", [&] { return laws_up_to(g.group, arity, maxlen, budget_of(settings)); });
  ojson result;
  result["command"] = "oracle laws";
  result["group"] = g.label;
  result["arity"] = arity;
  result["maxlen"] = maxlen;
  result["examined"] = reduced_word_count(arity, maxlen);
  result["laws"] = word_list(laws);
  result["value"] = laws.size();
  return result;
}

ojson run_oracle_compare(const Inputs& in, const Settings& settings) {
  const auto g1 = group_input(in, "group1", settings);
  const auto g2 = group_input(in, "group2", settings);
  const auto arity = static_cast<unsigned>(in.uint_or("arity", 2));
  const auto maxlen = static_cast<unsigned>(in.uint_or("maxlen", 6));
  if (arity < 1 || arity > 64) bad_input("arity", "must be between 1 and 64");
  if (maxlen > 64) bad_input("maxlen", "must be at most 64");
  const auto report =
      guarded("maxlen", [&] { return compare_varieties_upto(g1.group, g2.group, arity, maxlen, budget_of(settings)); });
  ojson result;
  result["command"] = "oracle compare";
  result["group1"] = g1.label;
  result["group2"] = g2.label;
  result["arity"] = arity;
  result["maxlen"] = maxlen;
  result["examined"] = report.examined;
  result["only_first"] = word_list(report.only_first);
  result["only_second"] = word_list(report.only_second);
  result["both"] = word_list(report.both);
  result["neither"] = report.neither;
  result["verdict"] = report.verdict();
  result["value"] = report.verdict();
  return result;
}

ojson run_oracle_shield(const Inputs& in, const Settings& settings) {
  const auto p = prime_input(in);
  std::optional<GroupExpr> exprs[2];
  const char* keys[2] = {"bottom", "top"};
  for (int i = 0; i < 2; ++i) {
    exprs[i] = group_input(in, keys[i], settings).expr;
    if (!exprs[i]) bad_input(keys[i], "table groups cannot be wreathed; give an expression");
  }
  const auto check = guarded("top", [&] { return shield_vs_brute(*exprs[0], *exprs[1], p, settings.cap); });
  ojson result;
  result["command"] = "oracle shield";
  result["bottom"] = exprs[0]->to_string();
  result["top"] = exprs[1]->to_string();
  result["p"] = p;
  result["predicted"] = check.predicted;
  result["observed"] = check.observed ? ojson(*check.observed) : ojson(nullptr);
  result["agree"] = check.agree;
  result["value"] = check.agree ? ojson(check.predicted)
                                : ojson("disagree: predicted " + std::to_string(check.predicted) + ", observed " +
                                        (check.observed ? std::to_string(*check.observed) : "not nilpotent"));
  return result;
}

ojson run_crossover(const Inputs& in, const Settings&) {
  const auto c = in.uint("c");
  const auto z = in.uint("z");
  const auto l = in.uint("l");
  const auto p = prime_input(in);
  const auto v = in.small("v");
  const auto alpha = in.small("alpha");
  if (c < 1) bad_input("c", "must be at least 1");
  if (v < 1) bad_input("v", "must be at least 1");
  if (alpha < 1) bad_input("alpha", "must be at least 1");
  const auto t = guarded("c", [&] { return crossover(c, z, l, p, v, alpha); });
  ojson result;
  result["command"] = "crossover";
  result["c"] = c;
  result["z"] = z;
  result["l"] = l;
  result["p"] = p;
  result["v"] = v;
  result["alpha"] = alpha;
  result["t"] = t;
  result["bound1_at_t"] = bound1(c, t, l, p, v, alpha).to_string();
  result["bound2_at_t"] = bound2(c, t, z, p, v, alpha);
  if (t > std::max<std::uint64_t>({z, l, 1})) {
    result["bound1_before"] = bound1(c, t - 1, l, p, v, alpha).to_string();
    result["bound2_before"] = bound2(c, t - 1, z, p, v, alpha);
  }
  result["value"] = t;
  return result;
}

using Runner = std::function<ojson(const Inputs&, const Settings&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table = {
      {"check", run_check},
      {"shield", run_shield},
      {"kpseries", run_kpseries},
      {"lcs", run_lcs},
      {"oracle law", run_oracle_law},
      {"oracle laws", run_oracle_laws},
      {"oracle compare", run_oracle_compare},
      {"oracle shield", run_oracle_shield},
      {"crossover", run_crossover},
  };
  return table;
}

std::uint64_t env_uint(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  return parse_uint(name, raw);
}

// ---- text rendering ----

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_demand(const ojson& v) { return v.is_object() && v.contains("q") && v.contains("w") && v.contains("count"); }

std::string demand_text(const ojson& d) {
  const auto q = d.at("q").get<std::uint64_t>();
  const auto w = d.at("w").get<unsigned>();
  return "C" + std::to_string(checked_pow(q, w)) + "^" + scalar_text(d.at("count"));
}

void render_into(std::ostream& os, const ojson& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : obj.items()) {
    if (key == "value" || key == "command") continue;
    if (v.is_object()) {
      os << pad << key << ":\n";
      render_into(os, v, indent + 2);
    } else if (v.is_array()) {
      os << pad << key << ": ";
      if (v.empty()) os << "(none)";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << (is_demand(v[i]) ? demand_text(v[i]) : scalar_text(v[i]));
      }
      os << "\n";
    } else {
      os << pad << key << ": " << scalar_text(v) << "\n";
    }
  }
}

std::string inputs_text(const json& inputs) {
  std::string out;
  for (const auto& [key, v] : inputs.items()) {
    if (!out.empty()) out += " ";
    out += key + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

// ---- fixtures ----

json from_toml(const toml::node& node, const std::string& where) {
  if (const auto* t = node.as_table()) {
    json j = json::object();
    for (const auto& [k, v] : *t) j[std::string(k.str())] = from_toml(v, where);
    return j;
  }
  if (const auto* a = node.as_array()) {
    json j = json::array();
    for (const auto& v : *a) j.push_back(from_toml(v, where));
    return j;
  }
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* i = node.as_integer()) return i->get();
  if (const auto* f = node.as_floating_point()) return f->get();
  if (const auto* b = node.as_boolean()) return b->get();
  bad_input(where, "dates and times are not valid fixture values");
}

struct Case {
  std::string name;
  std::string command;
  json inputs;
  json expected;
  std::optional<std::string> expected_error;
  bool discrepant = false;
};

std::vector<Case> parse_cases(std::string_view text, const std::string& source) {
  toml::table doc;
  try {
    doc = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << e.description() << " at line " << e.source().begin.line;
    bad_input(source, msg.str());
  }
  std::vector<Case> cases;
  const auto* list = doc.get("case");
  if (list == nullptr) return cases;
  const auto* arr = list->as_array();
  if (arr == nullptr) bad_input(source, "'case' must be an array of tables ([[case]])");
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const std::string where = source + " case " + std::to_string(i + 1);
    const auto* t = (*arr)[i].as_table();
    if (t == nullptr) bad_input(where, "expected a table");
    const json raw = from_toml(*t, where);
    Case c;
    c.name = raw.value("name", "case-" + std::to_string(i + 1));
    if (!raw.contains("command") || !raw["command"].is_string()) bad_input(where, "missing string field 'command'");
    c.command = raw["command"].get<std::string>();
    if (!runners().contains(c.command)) bad_input(where, "unknown command '" + c.command + "'");
    c.inputs = raw.value("inputs", json::object());
    if (!c.inputs.is_object()) bad_input(where, "'inputs' must be a table");
    const bool has_expected = raw.contains("expected");
    const bool has_error = raw.contains("expected_error");
    if (has_expected == has_error) bad_input(where, "give exactly one of 'expected' or 'expected_error'");
    if (has_expected) c.expected = raw["expected"];
    if (has_error) {
      if (!raw["expected_error"].is_string()) bad_input(where, "'expected_error' must be a string");
      c.expected_error = raw["expected_error"].get<std::string>();
    }
    if (raw.contains("discrepant")) {
      if (!raw["discrepant"].is_boolean()) bad_input(where, "'discrepant' must be a boolean");
      c.discrepant = raw["discrepant"].get<bool>();
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

ReportRow run_case(const Case& c, const Settings& settings, bool& malformed) {
  ReportRow row{c.name, c.command, c.inputs, c.expected_error ? json("error " + *c.expected_error) : c.expected,
                nullptr, "", ""};
  try {
    const auto result = run_command(c.command, c.inputs, settings);
    row.observed = json(result.at("value"));
  } catch (const InputError& e) {
    row.observed = "error " + e.code();
    if (c.expected_error && *c.expected_error == e.code()) {
      row.status = "PASS";
    } else {
      row.status = "ERROR";
      row.note = e.what();
      malformed = e.exit_code() == kExitInvalidInput;
    }
    return row;
  }
  const bool match = row.observed == row.expected;
  if (match) {
    row.status = "PASS";
    if (c.discrepant) row.note = "marked discrepant but matched";
  } else {
    row.status = c.discrepant ? "EXPECTED-DISCREPANT" : "FAIL";
  }
  return row;
}

Report run_cases(const std::vector<Case>& cases, const Settings& settings, unsigned jobs) {
  Report report;
  report.rows.resize(cases.size());
  std::vector<char> malformed(cases.size(), 0);
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      bool bad = false;
      report.rows[i] = run_case(cases[i], settings, bad);
      malformed[i] = bad;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const bool any_failure = std::any_of(report.rows.begin(), report.rows.end(), [](const ReportRow& r) {
    return r.status == "FAIL" || r.status == "ERROR";
  });
  if (std::any_of(malformed.begin(), malformed.end(), [](char m) { return m != 0; })) {
    report.exit_code = kExitInvalidInput;
  } else if (any_failure) {
    report.exit_code = kExitReportFailure;
  }
  return report;
}

}  // namespace

Settings Settings::from_environment() {
  Settings s;
  s.cap = env_uint("WREATHVAR_CAP", s.cap);
  s.budget = env_uint("WREATHVAR_BUDGET", s.budget);
  return s;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : runners()) out.push_back(name);
    return out;
  }();
  return names;
}

ojson run_command(std::string_view command, const json& inputs, const Settings& settings) {
  const auto it = runners().find(command);
  if (it == runners().end()) bad_input("command", "unknown command '" + std::string(command) + "'");
  const Inputs in(inputs);
  try {
    return it->second(in, settings);
  } catch (const Error& e) {
    throw InputError(std::string(command), std::string(to_string(e.code())), exit_for(e.code()), e.what());
  }
}

ojson Report::to_json() const {
  ojson rows_json = ojson::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& r : rows) {
    ++counts[r.status];
    ojson row;
    row["name"] = r.name;
    row["command"] = r.command;
    row["inputs"] = ojson(r.inputs);
    row["expected"] = ojson(r.expected);
    row["observed"] = ojson(r.observed);
    row["status"] = r.status;
    if (!r.note.empty()) row["note"] = r.note;
    rows_json.push_back(std::move(row));
  }
  ojson summary;
  summary["total"] = rows.size();
  for (const char* s : {"PASS", "FAIL", "ERROR", "EXPECTED-DISCREPANT"}) summary[s] = counts[s];
  ojson out;
  out["rows"] = std::move(rows_json);
  out["summary"] = std::move(summary);
  out["exit_code"] = exit_code;
  return out;
}

Report run_report_text(std::string_view toml_text, const Settings& settings, unsigned jobs) {
  return run_cases(parse_cases(toml_text, "fixture"), settings, jobs);
}

Report run_report(const std::filesystem::path& fixture, const Settings& settings, unsigned jobs) {
  const auto text = read_file("fixture", fixture.string());
  return run_cases(parse_cases(text, fixture.filename().string()), settings, jobs);
}

std::string render_text(const ojson& result) {
  std::ostringstream os;
  if (result.contains("command")) os << result["command"].get<std::string>() << "\n";
  render_into(os, result, 2);
  return os.str();
}

std::string render_text(const Report& report) {
  const std::vector<std::string> header = {"STATUS", "NAME", "COMMAND", "EXPECTED", "OBSERVED", "INPUTS"};
  std::vector<std::vector<std::string>> table;
  for (const auto& r : report.rows) {
    table.push_back({r.status, r.name, r.command, scalar_text(ojson(r.expected)), scalar_text(ojson(r.observed)),
                     inputs_text(r.inputs)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << "\n";
  };
  if (!table.empty()) {
    emit(header);
    for (const auto& row : table) emit(row);
  }
  std::size_t passed = 0, discrepant = 0;
  for (const auto& r : report.rows) {
    passed += r.status == "PASS";
    discrepant += r.status == "EXPECTED-DISCREPANT";
  }
  os << report.rows.size() << " cases: " << passed << " passed, " << discrepant << " expected-discrepant, "
     << report.rows.size() - passed - discrepant << " failed\n";
  for (const auto& r : report.rows) {
    if (!r.note.empty()) os << "note [" << r.name << "]: " << r.note << "\n";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide when var(A wr B) splits as var(A) var(B) and check it by brute force.", "wreathvar"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> budget;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", cap, "Largest group order to materialize (env WREATHVAR_CAP)");
  app.add_option("--budget", budget, "Evaluation step budget for law checks (env WREATHVAR_BUDGET)");

  struct Command {
    std::string name;
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::vector<std::string> keys;
    bool brute = false;
  };
  std::deque<Command> commands;

  auto add = [&](CLI::App* parent, const std::string& sub, const std::string& full, const std::string& help,
                 std::vector<std::pair<std::string, std::string>> options) -> Command& {
    auto& cmd = commands.emplace_back();
    cmd.name = full;
    cmd.app = parent->add_subcommand(sub, help);
    for (const auto& [key, desc] : options) {
      cmd.keys.push_back(key);
      cmd.app->add_option("--" + key, cmd.values[key], desc);
    }
    return cmd;
  };

  const std::string group_help = "Group: JSON expression, @file, Q8 or D4";
  add(&app, "check", "check", "Evaluate a splitting criterion",
      {{"profile", "Profile of A as c=<class>,m=<exponent>"},
       {"group", group_help + " (profile of A taken from it)"},
       {"shape", "Abelian group B: compact (C3^inf x C2^7), JSON, or @file"},
       {"criterion", "main, circle, finite, abelian or pgroup (default main)"},
       {"m", "Exponent of abelian A, or inf (abelian criterion)"},
       {"p", "Prime (pgroup criterion)"},
       {"u", "A has exponent p^u (pgroup criterion)"}});
  auto& shield = add(&app, "shield", "shield", "Class of A wr B from the K_p-series of B",
                     {{"bottom", group_help}, {"top", group_help}, {"p", "Prime"}});
  shield.app->add_flag("--brute", shield.brute, "Also materialize A wr B and compute its class");
  add(&app, "kpseries", "kpseries", "K_p-series of a p-group", {{"group", group_help}, {"p", "Prime"}});
  add(&app, "lcs", "lcs", "Lower central series", {{"group", group_help}});
  add(&app, "crossover", "crossover", "Least t with bound2 > bound1",
      {{"c", "Class c"}, {"z", "z"}, {"l", "l"}, {"p", "Prime"}, {"v", "v"}, {"alpha", "alpha"}});

  auto* oracle = app.add_subcommand("oracle", "Brute-force checks");
  oracle->require_subcommand(1);
  add(oracle, "law", "oracle law", "Is the word a law of the group?",
      {{"word", "Word such as [[x1,x2],x3] or @file"}, {"group", group_help}});
  add(oracle, "laws", "oracle laws", "Laws among reduced words up to a length",
      {{"group", group_help}, {"arity", "Number of variables"}, {"maxlen", "Longest word length"}});
  add(oracle, "compare", "oracle compare", "Compare law sets of two groups up to a length",
      {{"group1", group_help}, {"group2", group_help}, {"arity", "Number of variables (default 2)"},
       {"maxlen", "Longest word length (default 6)"}});
  add(oracle, "shield", "oracle shield", "Shield's class against the brute-force class",
      {{"bottom", group_help}, {"top", group_help}, {"p", "Prime"}});

  std::string fixture;
  unsigned jobs = 0;
  auto* report_app = app.add_subcommand("report", "Run a TOML fixture suite");
  report_app->add_option("fixture", fixture, "Fixture file")->required();
  report_app->add_option("--jobs", jobs, "Worker threads (default: all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    Settings settings = Settings::from_environment();
    if (cap) settings.cap = *cap;
    if (budget) settings.budget = *budget;

    if (report_app->parsed()) {
      const auto report = run_report(fixture, settings, jobs);
      out << (format == "json" ? report.to_json().dump(2) + "\n" : render_text(report));
      return report.exit_code;
    }
    for (const auto& cmd : commands) {
      if (!cmd.app->parsed()) continue;
      json inputs = json::object();
      for (const auto& key : cmd.keys) {
        if (cmd.app->get_option("--" + key)->count() > 0) inputs[key] = cmd.values.at(key);
      }
      if (cmd.brute) inputs["brute"] = true;
      const auto result = run_command(cmd.name, inputs, settings);
      out << (format == "json" ? result.dump(2) + "\n" : render_text(result));
      return kExitOk;
    }
    err << "error: no command given\n";
    return kExitInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

}  // namespace wreathvar
