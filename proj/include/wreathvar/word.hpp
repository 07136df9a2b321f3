#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreathvar/concrete_group.hpp"

namespace wreathvar {

/// A group word over variables x1, x2, ... built from products, inverses,
/// integer powers and commutators [u, w] = u^-1 w^-1 u w.
class Word {
 public:
  enum class Kind { Identity, Variable, Inverse, Product, Power, Commutator };

  static Word identity();
  /// 1-based variable index.
  static Word variable(unsigned index);
  static Word inverse(Word w);
  static Word product(Word a, Word b);
  static Word power(Word w, std::int64_t k);
  static Word commutator(Word a, Word b);
  /// Letters are signed variable indices: +i is x_i, -i is x_i^-1. Runs of
  /// one letter become powers; the empty list is the identity.
  static Word from_letters(std::span<const int> letters);

  Kind kind() const;
  unsigned arity() const;  // largest variable index, 0 if none
  std::size_t size() const;  // node count

  std::string to_string() const;

  /// Value under an assignment; assignment[i] is the value of x_{i+1}.
  ConcreteGroup::Index evaluate(const ConcreteGroup& g, std::span<const ConcreteGroup::Index> assignment) const;

  /// Flattened letters, commutators and powers expanded. Throws
  /// BudgetExceeded past `max_letters`.
  std::vector<int> letters(std::size_t max_letters = 1U << 20) const;

  friend bool operator==(const Word& a, const Word& b) { return a.to_string() == b.to_string(); }

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Cancels adjacent x x^-1 pairs until none remain.
std::vector<int> free_reduce(std::span<const int> letters);

/// Grammar (whitespace ignored):
///   expr := term ('*' term)*
///   term := atom ('^' integer)*
///   atom := 'x' digits | '1' | '(' expr ')' | '[' expr ',' expr (',' expr)* ']'
/// Longer brackets are left-normed: [a,b,c] = [[a,b],c]. Throws ParseError.
Word parse_word(std::string_view text);

}  // namespace wreathvar
