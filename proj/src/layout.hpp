#pragma once

// Coordinate-level group laws. A layout describes how one element is stored
// as a fixed-width run of cyclic coordinates and how to multiply such runs.
// Coordinates with radix 1 are never stored.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wreathvar/concrete_group.hpp"

namespace wreathvar::detail {

using Coord = std::uint32_t;

/// Any element of a group with order below 2^32 has at most 32 coordinates
/// of radix >= 2.
inline constexpr std::size_t kMaxWidth = 64;

class Layout {
 public:
  virtual ~Layout() = default;

  std::size_t width() const { return radices_.size(); }
  std::uint64_t order() const { return order_; }
  const std::vector<Coord>& radices() const { return radices_; }

  virtual void mul(const Coord* a, const Coord* b, Coord* out) const = 0;
  virtual void inv(const Coord* a, Coord* out) const = 0;
  virtual Element to_element(const Coord* a) const = 0;
  virtual void from_element(const Element& e, Coord* out) const = 0;

  /// Mixed-radix index of a coordinate run.
  std::uint64_t encode(const Coord* a) const;
  void decode(std::uint64_t index, Coord* out) const;

 protected:
  void set_radices(std::vector<Coord> radices);

  std::uint64_t order_ = 1;

 private:
  std::vector<Coord> radices_;
};

std::shared_ptr<const Layout> make_layout(const GroupExpr& expr);
std::shared_ptr<const Layout> make_table_layout(std::vector<std::uint32_t> table, std::uint32_t order);

struct GroupData {
  std::optional<GroupExpr> expr;
  std::string name;
  std::shared_ptr<const Layout> layout;
  std::uint64_t order = 1;
  std::size_t width = 0;
  std::vector<Coord> coords;                 // order * width
  std::vector<std::uint32_t> cayley;         // order^2, only for small groups
  std::vector<std::uint32_t> inverses;
  std::vector<std::uint64_t> element_orders;
  std::uint64_t exponent = 1;
};

}  // namespace wreathvar::detail
