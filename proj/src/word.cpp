#include "wreathvar/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>

#include "wreathvar/error.hpp"

namespace wreathvar {

struct Word::Node {
  Kind kind;
  unsigned var = 0;
  std::int64_t exponent = 0;
  std::shared_ptr<const Node> left{};
  std::shared_ptr<const Node> right{};
};

Word Word::identity() { return Word(std::make_shared<const Node>(Node{Kind::Identity})); }

Word Word::variable(unsigned index) {
  if (index < 1) throw Error(ErrorCode::BadParameters, "variables are numbered from 1");
  return Word(std::make_shared<const Node>(Node{Kind::Variable, index}));
}

Word Word::inverse(Word w) { return Word(std::make_shared<const Node>(Node{Kind::Inverse, 0, 0, w.node_})); }

Word Word::product(Word a, Word b) {
  return Word(std::make_shared<const Node>(Node{Kind::Product, 0, 0, a.node_, b.node_}));
}

Word Word::power(Word w, std::int64_t k) {
  return Word(std::make_shared<const Node>(Node{Kind::Power, 0, k, w.node_}));
}

Word Word::commutator(Word a, Word b) {
  return Word(std::make_shared<const Node>(Node{Kind::Commutator, 0, 0, a.node_, b.node_}));
}

Word Word::from_letters(std::span<const int> letters) {
  std::optional<Word> acc;
  for (std::size_t i = 0; i < letters.size();) {
    const int letter = letters[i];
    if (letter == 0) throw Error(ErrorCode::BadParameters, "letter 0 does not name a variable");
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letter) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    Word var = variable(static_cast<unsigned>(std::abs(letter)));
    const std::int64_t k = letter > 0 ? run : -run;
    Word piece = k == 1 ? var : power(var, k);
    acc = acc ? product(*acc, piece) : piece;
    i = j;
  }
  return acc ? *acc : identity();
}

Word::Kind Word::kind() const { return node_->kind; }

unsigned Word::arity() const {
  switch (node_->kind) {
    case Kind::Identity: return 0;
    case Kind::Variable: return node_->var;
    case Kind::Inverse:
    case Kind::Power: return Word(node_->left).arity();
    case Kind::Product:
    case Kind::Commutator: return std::max(Word(node_->left).arity(), Word(node_->right).arity());
  }
  return 0;
}

std::size_t Word::size() const {
  switch (node_->kind) {
    case Kind::Identity:
    case Kind::Variable: return 1;
    case Kind::Inverse:
    case Kind::Power: return 1 + Word(node_->left).size();
    case Kind::Product:
    case Kind::Commutator: return 1 + Word(node_->left).size() + Word(node_->right).size();
  }
  return 1;
}

std::string Word::to_string() const {
  auto operand = [](const Word& w) {
    const auto k = w.kind();
    const bool bare = k == Kind::Variable || k == Kind::Commutator || k == Kind::Identity;
    return bare ? w.to_string() : "(" + w.to_string() + ")";
  };
  switch (node_->kind) {
    case Kind::Identity: return "1";
    case Kind::Variable: return "x" + std::to_string(node_->var);
    case Kind::Inverse: return operand(Word(node_->left)) + "^-1";
    case Kind::Power: return operand(Word(node_->left)) + "^" + std::to_string(node_->exponent);
    case Kind::Product: return Word(node_->left).to_string() + "*" + Word(node_->right).to_string();
    case Kind::Commutator: return "[" + Word(node_->left).to_string() + "," + Word(node_->right).to_string() + "]";
  }
  return "?";
}

ConcreteGroup::Index Word::evaluate(const ConcreteGroup& g, std::span<const ConcreteGroup::Index> assignment) const {
  switch (node_->kind) {
    case Kind::Identity: return ConcreteGroup::identity();
    case Kind::Variable:
      if (node_->var > assignment.size()) {
        throw Error(ErrorCode::BadParameters, "no value assigned to x" + std::to_string(node_->var));
      }
      return assignment[node_->var - 1];
    case Kind::Inverse: return g.invert(Word(node_->left).evaluate(g, assignment));
    case Kind::Power: return g.power(Word(node_->left).evaluate(g, assignment), node_->exponent);
    case Kind::Product:
      return g.compose(Word(node_->left).evaluate(g, assignment), Word(node_->right).evaluate(g, assignment));
    case Kind::Commutator:
      return g.commutator(Word(node_->left).evaluate(g, assignment), Word(node_->right).evaluate(g, assignment));
  }
  return ConcreteGroup::identity();
}

std::vector<int> Word::letters(std::size_t max_letters) const {
  auto guard = [&](std::size_t n) {
    if (n > max_letters) throw Error(ErrorCode::BudgetExceeded, "expanded word exceeds " + std::to_string(max_letters) + " letters");
  };
  auto invert = [](std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    for (auto& x : v) x = -x;
    return v;
  };
  switch (node_->kind) {
    case Kind::Identity: return {};
    case Kind::Variable: return {static_cast<int>(node_->var)};
    case Kind::Inverse: return invert(Word(node_->left).letters(max_letters));
    case Kind::Power: {
      auto base = Word(node_->left).letters(max_letters);
      if (node_->exponent < 0) base = invert(std::move(base));
      const auto times = static_cast<std::size_t>(std::llabs(node_->exponent));
      if (!base.empty() && times > max_letters / base.size()) guard(max_letters + 1);
      std::vector<int> out;
      out.reserve(base.size() * times);
      for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    case Kind::Product: {
      auto out = Word(node_->left).letters(max_letters);
      auto rhs = Word(node_->right).letters(max_letters);
      guard(out.size() + rhs.size());
      out.insert(out.end(), rhs.begin(), rhs.end());
      return out;
    }
    case Kind::Commutator: {
      auto u = Word(node_->left).letters(max_letters);
      auto w = Word(node_->right).letters(max_letters);
      guard(2 * (u.size() + w.size()));
      std::vector<int> out = invert(u);
      auto wi = invert(w);
      out.insert(out.end(), wi.begin(), wi.end());
      out.insert(out.end(), u.begin(), u.end());
      out.insert(out.end(), w.begin(), w.end());
      return out;
    }
  }
  return {};
}

std::vector<int> free_reduce(std::span<const int> letters) {
  std::vector<int> out;
  for (const int x : letters) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "word at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 15) fail("exponent too large");
    const auto value = std::stoll(std::string(text_.substr(start, pos_ - start)));
    return negative ? -value : value;
  }

  Word expr() {
    Word w = term();
    while (eat('*')) w = Word::product(w, term());
    return w;
  }

  Word term() {
    Word w = atom();
    while (eat('^')) {
      const auto k = integer();
      w = k == -1 ? Word::inverse(w) : Word::power(w, k);
    }
    return w;
  }

  Word atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 6) fail("expected a variable number after 'x'");
      const auto index = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (index < 1) fail("variables are numbered from 1");
      return Word::variable(static_cast<unsigned>(index));
    }
    if (c == '1') {
      ++pos_;
      return Word::identity();
    }
    if (c == '(') {
      ++pos_;
      Word w = expr();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word w = expr();
      if (!eat(',')) fail("a commutator needs at least two entries");
      w = Word::commutator(w, expr());
      while (eat(',')) w = Word::commutator(w, expr());
      if (!eat(']')) fail("expected ']'");
      return w;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

}  // namespace wreathvar
