#include "wreathvar/oracle.hpp"

#include <algorithm>
#include <functional>

#include "wreathvar/error.hpp"
#include "wreathvar/group_engine.hpp"
#include "wreathvar/numeric.hpp"
#include "wreathvar/shield.hpp"

namespace wreathvar {

using Index = ConcreteGroup::Index;

namespace {

// Letter codes 0..2k-1: code 2i is x_{i+1}, code 2i+1 its inverse.
int signed_letter(unsigned code) {
  const int var = static_cast<int>(code / 2 + 1);
  return code % 2 ? -var : var;
}

std::uint64_t assignment_count(std::uint64_t universe, unsigned arity, const Budget& budget) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (total > budget.max_steps / std::max<std::uint64_t>(universe, 1)) {
      throw Error(ErrorCode::BudgetExceeded, "assignment space exceeds the budget");
    }
    total *= universe;
  }
  return total;
}

void charge(std::uint64_t assignments, std::uint64_t per_assignment, const Budget& budget) {
  if (per_assignment != 0 && assignments > budget.max_steps / per_assignment) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(assignments) + " assignments x " +
                                               std::to_string(per_assignment) + " steps exceeds the budget of " +
                                               std::to_string(budget.max_steps));
  }
}

bool law_over(const Word& w, const ConcreteGroup& g, const std::vector<Index>& universe, Budget budget) {
  const unsigned k = w.arity();
  const std::uint64_t total = assignment_count(universe.size(), k, budget);
  charge(total, w.size(), budget);
  std::vector<std::size_t> digits(k, 0);
  std::vector<Index> values(k, universe.front());
  for (std::uint64_t t = 0; t < total; ++t) {
    if (w.evaluate(g, values) != ConcreteGroup::identity()) return false;
    for (unsigned i = 0; i < k; ++i) {
      if (++digits[i] < universe.size()) {
        values[i] = universe[digits[i]];
        break;
      }
      digits[i] = 0;
      values[i] = universe[0];
    }
  }
  return true;
}

/// Visits every freely reduced letter sequence up to maxlen in depth-first
/// prefix order, which restricted to one length is lexicographic order.
void walk_reduced(unsigned arity, unsigned maxlen,
                  const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> codes;
  std::function<void()> descend = [&]() {
    for (unsigned a = 0; a < 2 * arity; ++a) {
      if (!codes.empty() && (codes.back() ^ 1U) == a) continue;
      codes.push_back(a);
      visit(codes);
      if (codes.size() < maxlen) descend();
      codes.pop_back();
    }
  };
  if (maxlen > 0) descend();
}

std::vector<std::uint64_t> length_offsets(unsigned arity, unsigned maxlen) {
  std::vector<std::uint64_t> offsets(maxlen + 2, 0);
  std::uint64_t at_length = 2ULL * arity;
  for (unsigned len = 1; len <= maxlen; ++len) {
    offsets[len + 1] = offsets[len] + at_length;
    at_length *= (2ULL * arity - 1);
  }
  return offsets;
}

/// law[i] for the i-th word of enumerate_reduced_words. Values of every
/// prefix are carried along the walk for all assignments at once.
std::vector<char> law_flags(const ConcreteGroup& g, unsigned arity, unsigned maxlen, Budget budget) {
  const std::uint64_t words = reduced_word_count(arity, maxlen);
  const std::uint64_t total = assignment_count(g.order(), arity, budget);
  charge(total, words, budget);

  std::vector<std::vector<Index>> letter_values(2 * arity, std::vector<Index>(total));
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (unsigned i = 0; i < arity; ++i) {
      const auto x = static_cast<Index>(rest % g.order());
      rest /= g.order();
      letter_values[2 * i][t] = x;
      letter_values[2 * i + 1][t] = g.invert(x);
    }
  }

  const auto offsets = length_offsets(arity, maxlen);
  std::vector<std::uint64_t> counters(maxlen + 1, 0);
  std::vector<char> law(words, 0);
  std::vector<std::vector<Index>> prefix(maxlen + 1, std::vector<Index>(total, ConcreteGroup::identity()));

  walk_reduced(arity, maxlen, [&](const std::vector<unsigned>& codes) {
    const std::size_t len = codes.size();
    const auto& before = prefix[len - 1];
    const auto& letter = letter_values[codes.back()];
    auto& after = prefix[len];
    bool identity_everywhere = true;
    for (std::uint64_t t = 0; t < total; ++t) {
      after[t] = g.compose(before[t], letter[t]);
      identity_everywhere = identity_everywhere && after[t] == ConcreteGroup::identity();
    }
    law[offsets[len] + counters[len]++] = identity_everywhere ? 1 : 0;
  });
  return law;
}

}  // namespace

bool is_law(const Word& w, const ConcreteGroup& g, Budget budget) {
  std::vector<Index> universe(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) universe[i] = static_cast<Index>(i);
  return law_over(w, g, universe, budget);
}

bool is_law(const Word& w, const Subgroup& h, Budget budget) { return law_over(w, h.parent(), h.members(), budget); }

std::uint64_t reduced_word_count(unsigned arity, unsigned maxlen) {
  if (arity == 0) return 0;
  return length_offsets(arity, maxlen)[maxlen + 1];
}

std::vector<Word> enumerate_reduced_words(unsigned arity, unsigned maxlen) {
  std::vector<std::vector<Word>> by_length(maxlen + 1);
  walk_reduced(arity, maxlen, [&](const std::vector<unsigned>& codes) {
    std::vector<int> letters;
    for (const auto code : codes) letters.push_back(signed_letter(code));
    by_length[codes.size()].push_back(Word::from_letters(letters));
  });
  std::vector<Word> out;
  for (auto& bucket : by_length) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<Word> laws_up_to(const ConcreteGroup& g, unsigned arity, unsigned maxlen, Budget budget) {
  const auto flags = law_flags(g, arity, maxlen, budget);
  const auto words = enumerate_reduced_words(arity, maxlen);
  std::vector<Word> laws;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (flags[i]) laws.push_back(words[i]);
  }
  return laws;
}

std::string ComparisonReport::verdict() const {
  return outcome == Outcome::Distinguished ? "Distinguished"
                                           : "IndistinguishableUpTo(" + std::to_string(maxlen) + ")";
}

ComparisonReport compare_varieties_upto(const ConcreteGroup& g1, const ConcreteGroup& g2, unsigned arity,
                                        unsigned maxlen, Budget budget) {
  const auto first = law_flags(g1, arity, maxlen, budget);
  const auto second = law_flags(g2, arity, maxlen, budget);
  const auto words = enumerate_reduced_words(arity, maxlen);
  ComparisonReport report;
  report.arity = arity;
  report.maxlen = maxlen;
  report.examined = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (first[i] && second[i]) {
      report.both.push_back(words[i]);
    } else if (first[i]) {
      report.only_first.push_back(words[i]);
    } else if (second[i]) {
      report.only_second.push_back(words[i]);
    } else {
      ++report.neither;
    }
  }
  const bool split = !report.only_first.empty() || !report.only_second.empty();
  report.outcome = split ? ComparisonReport::Outcome::Distinguished : ComparisonReport::Outcome::IndistinguishableUpTo;
  return report;
}

ShieldCheck shield_vs_brute(const GroupExpr& bottom, const GroupExpr& top, std::uint64_t p, std::uint64_t cap) {
  const auto a = ConcreteGroup::materialize(bottom, cap);
  const auto b = ConcreteGroup::materialize(top, cap);
  ShieldCheck check;
  check.predicted = shield_class(a, b, p);
  const auto wreath = ConcreteGroup::materialize(GroupExpr::wreath(bottom, top), cap);
  check.observed = nilpotency_class(wreath);
  check.agree = check.observed && *check.observed == check.predicted;
  return check;
}

}  // namespace wreathvar
