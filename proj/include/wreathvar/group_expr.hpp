#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace wreathvar {

/// Symbolic description of a finite group assembled from cyclic groups.
///
/// Values are immutable; subexpressions are shared, so copying is cheap.
/// The JSON encoding is
///   {"cyclic": n} | {"direct": [expr, ...]} |
///   {"power": {"base": expr, "k": k}} | {"wreath": {"bottom": expr, "top": expr}}
class GroupExpr {
 public:
  struct Cyclic {
    std::uint64_t n;
  };
  struct DirectProduct {
    std::vector<GroupExpr> parts;
  };
  struct DirectPower {
    std::shared_ptr<const GroupExpr> base;
    std::uint64_t k;
  };
  struct Wreath {
    std::shared_ptr<const GroupExpr> bottom;
    std::shared_ptr<const GroupExpr> top;
  };
  using Node = std::variant<Cyclic, DirectProduct, DirectPower, Wreath>;

  static GroupExpr cyclic(std::uint64_t n);
  static GroupExpr direct(std::vector<GroupExpr> parts);
  static GroupExpr power(GroupExpr base, std::uint64_t k);
  static GroupExpr wreath(GroupExpr bottom, GroupExpr top);

  const Node& node() const { return node_; }

  /// Order implied by the expression, computed without materializing.
  /// Throws InvalidExpr for malformed trees and Overflow past 64 bits.
  std::uint64_t order() const;

  /// Throws InvalidExpr on the first malformed node.
  void validate() const;

  /// Compact human form, e.g. "C2 wr (C2 x C2)" or "C3^4".
  std::string to_string() const;

  friend bool operator==(const GroupExpr& a, const GroupExpr& b);

 private:
  explicit GroupExpr(Node node) : node_(std::move(node)) {}

  Node node_;
};

nlohmann::json to_json(const GroupExpr& expr);
/// Throws ParseError naming the offending field.
GroupExpr group_expr_from_json(const nlohmann::json& j);
GroupExpr parse_group_expr(std::string_view json_text);

}  // namespace wreathvar
