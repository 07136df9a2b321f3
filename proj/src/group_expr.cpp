#include "wreathvar/group_expr.hpp"

#include <nlohmann/json.hpp>

#include "wreathvar/error.hpp"
#include "wreathvar/numeric.hpp"

namespace wreathvar {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

GroupExpr GroupExpr::cyclic(std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidExpr, "cyclic order must be >= 1");
  return GroupExpr(Cyclic{n});
}

GroupExpr GroupExpr::direct(std::vector<GroupExpr> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidExpr, "direct product needs at least one factor");
  return GroupExpr(DirectProduct{std::move(parts)});
}

GroupExpr GroupExpr::power(GroupExpr base, std::uint64_t k) {
  return GroupExpr(DirectPower{std::make_shared<const GroupExpr>(std::move(base)), k});
}

GroupExpr GroupExpr::wreath(GroupExpr bottom, GroupExpr top) {
  return GroupExpr(Wreath{std::make_shared<const GroupExpr>(std::move(bottom)),
                          std::make_shared<const GroupExpr>(std::move(top))});
}

void GroupExpr::validate() const {
  std::visit(Overloaded{
                 [](const Cyclic& c) {
                   if (c.n < 1) throw Error(ErrorCode::InvalidExpr, "cyclic order must be >= 1");
                 },
                 [](const DirectProduct& d) {
                   if (d.parts.empty()) {
                     throw Error(ErrorCode::InvalidExpr, "direct product needs at least one factor");
                   }
                   for (const auto& part : d.parts) part.validate();
                 },
                 [](const DirectPower& p) { p.base->validate(); },
                 [](const Wreath& w) {
                   w.bottom->validate();
                   w.top->validate();
                 },
             },
             node_);
}

std::uint64_t GroupExpr::order() const {
  return std::visit(Overloaded{
                        [](const Cyclic& c) -> std::uint64_t {
                          if (c.n < 1) throw Error(ErrorCode::InvalidExpr, "cyclic order must be >= 1");
                          return c.n;
                        },
                        [](const DirectProduct& d) -> std::uint64_t {
                          std::uint64_t r = 1;
                          for (const auto& part : d.parts) r = checked_mul(r, part.order());
                          return r;
                        },
                        [](const DirectPower& p) -> std::uint64_t {
                          return checked_pow(p.base->order(), p.k);
                        },
                        [](const Wreath& w) -> std::uint64_t {
                          std::uint64_t top = w.top->order();
                          return checked_mul(checked_pow(w.bottom->order(), top), top);
                        },
                    },
                    node_);
}

std::string GroupExpr::to_string() const {
  auto wrapped = [](const GroupExpr& e) {
    bool atomic = std::holds_alternative<Cyclic>(e.node_);
    return atomic ? e.to_string() : "(" + e.to_string() + ")";
  };
  return std::visit(Overloaded{
                        [](const Cyclic& c) { return "C" + std::to_string(c.n); },
                        [&](const DirectProduct& d) {
                          std::string s;
                          for (std::size_t i = 0; i < d.parts.size(); ++i) {
                            if (i) s += " x ";
                            s += wrapped(d.parts[i]);
                          }
                          return s;
                        },
                        [&](const DirectPower& p) {
                          return wrapped(*p.base) + "^" + std::to_string(p.k);
                        },
                        [&](const Wreath& w) {
                          return wrapped(*w.bottom) + " wr " + wrapped(*w.top);
                        },
                    },
                    node_);
}

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const GroupExpr::Cyclic& x) { return x.n == std::get<GroupExpr::Cyclic>(b.node_).n; },
          [&](const GroupExpr::DirectProduct& x) {
            return x.parts == std::get<GroupExpr::DirectProduct>(b.node_).parts;
          },
          [&](const GroupExpr::DirectPower& x) {
            const auto& y = std::get<GroupExpr::DirectPower>(b.node_);
            return x.k == y.k && *x.base == *y.base;
          },
          [&](const GroupExpr::Wreath& x) {
            const auto& y = std::get<GroupExpr::Wreath>(b.node_);
            return *x.bottom == *y.bottom && *x.top == *y.top;
          },
      },
      a.node_);
}

nlohmann::json to_json(const GroupExpr& expr) {
  using nlohmann::json;
  return std::visit(Overloaded{
                        [](const GroupExpr::Cyclic& c) { return json{{"cyclic", c.n}}; },
                        [](const GroupExpr::DirectProduct& d) {
                          json parts = json::array();
                          for (const auto& part : d.parts) parts.push_back(to_json(part));
                          return json{{"direct", parts}};
                        },
                        [](const GroupExpr::DirectPower& p) {
                          return json{{"power", {{"base", to_json(*p.base)}, {"k", p.k}}}};
                        },
                        [](const GroupExpr::Wreath& w) {
                          return json{{"wreath",
                                       {{"bottom", to_json(*w.bottom)}, {"top", to_json(*w.top)}}}};
                        },
                    },
                    expr.node());
}

namespace {

std::uint64_t read_count(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, path + ": expected an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  auto v = j.get<std::int64_t>();
  if (v < 0) throw Error(ErrorCode::ParseError, path + ": must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

GroupExpr from_json_at(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) {
    throw Error(ErrorCode::ParseError,
                path + ": expected an object with exactly one of cyclic/direct/power/wreath");
  }
  const auto entry = j.begin();
  const std::string& key = entry.key();
  const nlohmann::json& value = entry.value();
  const std::string here = path + "." + key;
  if (key == "cyclic") {
    std::uint64_t n = read_count(value, here);
    if (n < 1) throw Error(ErrorCode::InvalidExpr, here + ": cyclic order must be >= 1");
    return GroupExpr::cyclic(n);
  }
  if (key == "direct") {
    if (!value.is_array() || value.empty()) {
      throw Error(ErrorCode::ParseError, here + ": expected a nonempty array");
    }
    std::vector<GroupExpr> parts;
    for (std::size_t i = 0; i < value.size(); ++i) {
      parts.push_back(from_json_at(value[i], here + "[" + std::to_string(i) + "]"));
    }
    return GroupExpr::direct(std::move(parts));
  }
  if (key == "power") {
    if (!value.is_object() || !value.contains("base") || !value.contains("k")) {
      throw Error(ErrorCode::ParseError, here + ": expected {\"base\": expr, \"k\": k}");
    }
    return GroupExpr::power(from_json_at(value["base"], here + ".base"),
                            read_count(value["k"], here + ".k"));
  }
  if (key == "wreath") {
    if (!value.is_object() || !value.contains("bottom") || !value.contains("top")) {
      throw Error(ErrorCode::ParseError, here + ": expected {\"bottom\": expr, \"top\": expr}");
    }
    return GroupExpr::wreath(from_json_at(value["bottom"], here + ".bottom"),
                             from_json_at(value["top"], here + ".top"));
  }
  throw Error(ErrorCode::ParseError, here + ": unknown group constructor");
}

}  // namespace

GroupExpr group_expr_from_json(const nlohmann::json& j) { return from_json_at(j, "$"); }

GroupExpr parse_group_expr(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("group expression: ") + e.what());
  }
  return group_expr_from_json(j);
}

}  // namespace wreathvar
