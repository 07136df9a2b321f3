#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreathvar/concrete_group.hpp"
#include "wreathvar/group_expr.hpp"
#include "wreathvar/word.hpp"

namespace wreathvar {

/// Cap on evaluation work: assignments times words (or word size).
struct Budget {
  std::uint64_t max_steps = 100'000'000;
};

/// Exhaustive: w evaluates to 1 under every assignment from G (or from H).
/// Throws BudgetExceeded when |G|^arity * size(w) exceeds the budget.
bool is_law(const Word& w, const ConcreteGroup& g, Budget budget = {});
bool is_law(const Word& w, const Subgroup& h, Budget budget = {});

/// Number of freely reduced words of length 1..maxlen over `arity` variables.
std::uint64_t reduced_word_count(unsigned arity, unsigned maxlen);

/// Freely reduced words over x1^{+-1}..xk^{+-1} of length 1..maxlen, ordered
/// by length and then lexicographically with x1 < x1^-1 < x2 < x2^-1 < ...
std::vector<Word> enumerate_reduced_words(unsigned arity, unsigned maxlen);

/// The laws of G among enumerate_reduced_words(arity, maxlen), same order.
std::vector<Word> laws_up_to(const ConcreteGroup& g, unsigned arity, unsigned maxlen, Budget budget = {});

struct ComparisonReport {
  enum class Outcome { Distinguished, IndistinguishableUpTo };

  unsigned arity = 0;
  unsigned maxlen = 0;
  std::uint64_t examined = 0;
  std::vector<Word> only_first;
  std::vector<Word> only_second;
  std::vector<Word> both;
  std::uint64_t neither = 0;  // examined words that are laws of neither group
  Outcome outcome = Outcome::IndistinguishableUpTo;

  /// "Distinguished" or "IndistinguishableUpTo(6)". Never a claim of
  /// variety equality: only words up to maxlen were examined.
  std::string verdict() const;
};

ComparisonReport compare_varieties_upto(const ConcreteGroup& g1, const ConcreteGroup& g2, unsigned arity,
                                        unsigned maxlen, Budget budget = {});

struct ShieldCheck {
  std::uint64_t predicted = 0;
  std::optional<std::size_t> observed;  // nullopt if the wreath product is not nilpotent
  bool agree = false;
};

/// Shield's formula against the lower central series of the materialized
/// wreath product. Throws NotPGroup, TrivialGroup, OversizeGroup.
ShieldCheck shield_vs_brute(const GroupExpr& bottom, const GroupExpr& top, std::uint64_t p,
                            std::uint64_t cap = kDefaultCap);

}  // namespace wreathvar
