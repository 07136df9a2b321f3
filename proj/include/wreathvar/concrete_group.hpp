#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wreathvar/group_expr.hpp"

namespace wreathvar {

inline constexpr std::uint64_t kDefaultCap = 20000;

/// Structured view of a group element, mirroring the expression it came from.
/// Groups built from a Cayley table expose their raw labels as residues
/// modulo the group order.
struct Element {
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  struct Tuple {
    std::vector<Element> parts;
    friend bool operator==(const Tuple&, const Tuple&) = default;
  };
  struct WreathPair {
    /// table[x] is the bottom coordinate at the top element with index x.
    std::vector<Element> table;
    std::vector<Element> top;  // exactly one entry
    friend bool operator==(const WreathPair&, const WreathPair&) = default;
  };
  std::variant<Residue, Tuple, WreathPair> value;

  friend bool operator==(const Element&, const Element&) = default;
};

namespace detail {
class Layout;
struct GroupData;
}  // namespace detail

/// A finite group with an indexed element universe.
///
/// Index 0 is always the identity. Indexing is deterministic for a given
/// expression: an element is the mixed-radix number formed by its cyclic
/// coordinates, first coordinate most significant. Inverses, element orders
/// and the exponent are computed once at construction; groups of order at
/// most 1024 also keep a full Cayley table. Copies share state.
class ConcreteGroup {
 public:
  using Index = std::uint32_t;

  /// Throws OversizeGroup when the predicted order exceeds `cap`,
  /// InvalidExpr for malformed expressions.
  static ConcreteGroup materialize(const GroupExpr& expr, std::uint64_t cap = kDefaultCap);

  /// Builds a group from a multiplication table over labels 0..n-1; label 0
  /// must be the identity. Closure, identity, inverses and associativity are
  /// checked exhaustively (throws BadParameters).
  static ConcreteGroup from_cayley_table(std::string name,
                                         const std::vector<std::vector<Index>>& table);

  const std::optional<GroupExpr>& expr() const;
  const std::string& name() const;

  std::uint64_t order() const;
  std::uint64_t exponent() const;
  static constexpr Index identity() { return 0; }

  Index compose(Index a, Index b) const;
  Index invert(Index a) const;
  Index power(Index a, std::int64_t k) const;
  /// a^-1 b^-1 a b
  Index commutator(Index a, Index b) const;
  Index conjugate(Index a, Index by) const;  // by^-1 a by
  std::uint64_t element_order(Index a) const;

  std::span<const std::uint32_t> coordinates(Index a) const;
  Element element(Index a) const;
  /// Throws BadParameters if the element does not match the group's shape.
  Index index_of(const Element& e) const;

  bool same_group(const ConcreteGroup& other) const { return data_ == other.data_; }

 private:
  explicit ConcreteGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::GroupData> data_;
};

std::string to_string(const Element& e);

/// The quaternion group of order 8 as an explicit table; labels are
/// 1, -1, i, -i, j, -j, k, -k in that order.
ConcreteGroup quaternion_group();

/// A subgroup stored as a membership mask plus sorted members and an
/// irredundant generating list (each generator lies outside the subgroup
/// generated by its predecessors).
class Subgroup {
 public:
  using Index = ConcreteGroup::Index;

  const ConcreteGroup& parent() const { return parent_; }
  std::uint64_t order() const { return members_.size(); }
  bool contains(Index a) const { return mask_[a]; }
  bool is_trivial() const { return members_.size() == 1; }
  const std::vector<Index>& members() const { return members_; }
  const std::vector<Index>& generators() const { return generators_; }

  std::uint64_t exponent() const;
  bool is_subset_of(const Subgroup& other) const;
  /// Exhaustive: every generator conjugated by every parent element stays inside.
  bool is_normal() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }

 private:
  friend Subgroup generate(const ConcreteGroup&, std::span<const Index>);
  explicit Subgroup(ConcreteGroup parent);

  void adjoin(Index g);

  ConcreteGroup parent_;
  std::vector<bool> mask_;
  std::vector<Index> members_;
  std::vector<Index> generators_;
};

/// Breadth-first closure of the candidates; candidates already inside the
/// running subgroup are skipped, so the stored generators stay irredundant.
Subgroup generate(const ConcreteGroup& g, std::span<const ConcreteGroup::Index> candidates);
Subgroup trivial_subgroup(const ConcreteGroup& g);
Subgroup whole_group(const ConcreteGroup& g);

}  // namespace wreathvar
