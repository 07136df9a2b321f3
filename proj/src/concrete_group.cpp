#include "wreathvar/concrete_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "layout.hpp"
#include "wreathvar/error.hpp"
#include "wreathvar/numeric.hpp"

namespace wreathvar {

namespace {

constexpr std::uint64_t kCayleyLimit = 1024;
constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 31;
constexpr std::uint32_t kTableLimit = 256;

void fill_caches(detail::GroupData& d) {
  const auto& layout = *d.layout;
  d.order = layout.order();
  d.width = layout.width();
  d.coords.resize(d.order * d.width);
  for (std::uint64_t i = 0; i < d.order; ++i) layout.decode(i, d.coords.data() + i * d.width);

  auto at = [&](std::uint64_t i) { return d.coords.data() + i * d.width; };
  std::array<detail::Coord, detail::kMaxWidth> buf{};

  d.inverses.resize(d.order);
  for (std::uint64_t i = 0; i < d.order; ++i) {
    layout.inv(at(i), buf.data());
    d.inverses[i] = static_cast<std::uint32_t>(layout.encode(buf.data()));
  }

  if (d.order <= kCayleyLimit) {
    d.cayley.resize(d.order * d.order);
    for (std::uint64_t a = 0; a < d.order; ++a) {
      for (std::uint64_t b = 0; b < d.order; ++b) {
        layout.mul(at(a), at(b), buf.data());
        d.cayley[a * d.order + b] = static_cast<std::uint32_t>(layout.encode(buf.data()));
      }
    }
  }
}

// Element orders divide |G|: start from |G| and strip prime factors while the
// reduced power is still the identity.
void fill_orders(const ConcreteGroup& g, detail::GroupData& d) {
  const auto primes = factorize(d.order);
  d.element_orders.resize(d.order);
  std::uint64_t exponent = 1;
  for (std::uint64_t i = 0; i < d.order; ++i) {
    const auto a = static_cast<ConcreteGroup::Index>(i);
    std::uint64_t o = d.order;
    for (const auto& [p, k] : primes) {
      for (unsigned j = 0; j < k && g.power(a, static_cast<std::int64_t>(o / p)) == 0; ++j) o /= p;
    }
    d.element_orders[i] = o;
    exponent = std::lcm(exponent, o);
  }
  d.exponent = exponent;
}

}  // namespace

ConcreteGroup ConcreteGroup::materialize(const GroupExpr& expr, std::uint64_t cap) {
  expr.validate();
  std::uint64_t predicted;
  try {
    predicted = expr.order();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
    throw Error(ErrorCode::OversizeGroup, expr.to_string() + " has order beyond 64 bits");
  }
  if (predicted > cap || predicted > kIndexLimit) {
    throw Error(ErrorCode::OversizeGroup, expr.to_string() + " has order " + std::to_string(predicted) +
                                              " above the cap " + std::to_string(std::min(cap, kIndexLimit)));
  }
  auto data = std::make_shared<detail::GroupData>();
  data->expr = expr;
  data->name = expr.to_string();
  data->layout = detail::make_layout(expr);
  fill_caches(*data);
  if (data->order != predicted) {
    throw Error(ErrorCode::InternalError, "materialized order disagrees with the expression");
  }
  // Element orders need compose(), which only needs the caches above.
  ConcreteGroup g(data);
  fill_orders(g, *data);
  return g;
}

ConcreteGroup ConcreteGroup::from_cayley_table(std::string name, const std::vector<std::vector<Index>>& table) {
  const std::size_t n = table.size();
  if (n == 0 || n > kTableLimit) {
    throw Error(ErrorCode::BadParameters, "table groups must have between 1 and 256 elements");
  }
  std::vector<std::uint32_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorCode::BadParameters, "Cayley table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = table[a][b];
      if (v >= n) throw Error(ErrorCode::BadParameters, "Cayley table entry out of range");
      if (seen[v]) throw Error(ErrorCode::BadParameters, "Cayley table row is not a permutation");
      seen[v] = true;
      flat[a * n + b] = v;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (flat[x] != x || flat[x * n] != x) {
      throw Error(ErrorCode::BadParameters, "label 0 is not a two-sided identity");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]]) {
          throw Error(ErrorCode::BadParameters, "Cayley table is not associative");
        }
      }
    }
  }
  auto data = std::make_shared<detail::GroupData>();
  data->name = std::move(name);
  data->layout = detail::make_table_layout(std::move(flat), static_cast<std::uint32_t>(n));
  fill_caches(*data);
  ConcreteGroup g(data);
  fill_orders(g, *data);
  return g;
}

const std::optional<GroupExpr>& ConcreteGroup::expr() const { return data_->expr; }
const std::string& ConcreteGroup::name() const { return data_->name; }
std::uint64_t ConcreteGroup::order() const { return data_->order; }
std::uint64_t ConcreteGroup::exponent() const { return data_->exponent; }

ConcreteGroup::Index ConcreteGroup::compose(Index a, Index b) const {
  const auto& d = *data_;
  if (!d.cayley.empty()) return d.cayley[std::size_t{a} * d.order + b];
  std::array<detail::Coord, detail::kMaxWidth> buf{};
  d.layout->mul(d.coords.data() + std::size_t{a} * d.width, d.coords.data() + std::size_t{b} * d.width, buf.data());
  return static_cast<Index>(d.layout->encode(buf.data()));
}

ConcreteGroup::Index ConcreteGroup::invert(Index a) const { return data_->inverses[a]; }

ConcreteGroup::Index ConcreteGroup::power(Index a, std::int64_t k) const {
  if (k < 0) {
    a = invert(a);
    k = -k;
  }
  Index result = identity();
  Index base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e != 0) base = compose(base, base);
  }
  return result;
}

ConcreteGroup::Index ConcreteGroup::commutator(Index a, Index b) const {
  return compose(compose(invert(a), invert(b)), compose(a, b));
}

ConcreteGroup::Index ConcreteGroup::conjugate(Index a, Index by) const {
  return compose(compose(invert(by), a), by);
}

std::uint64_t ConcreteGroup::element_order(Index a) const { return data_->element_orders[a]; }

std::span<const std::uint32_t> ConcreteGroup::coordinates(Index a) const {
  return {data_->coords.data() + std::size_t{a} * data_->width, data_->width};
}

Element ConcreteGroup::element(Index a) const {
  return data_->layout->to_element(data_->coords.data() + std::size_t{a} * data_->width);
}

ConcreteGroup::Index ConcreteGroup::index_of(const Element& e) const {
  std::array<detail::Coord, detail::kMaxWidth> buf{};
  std::vector<detail::Coord> wide;
  detail::Coord* out = buf.data();
  if (data_->width > buf.size()) {
    wide.resize(data_->width);
    out = wide.data();
  }
  data_->layout->from_element(e, out);
  return static_cast<Index>(data_->layout->encode(out));
}

std::string to_string(const Element& e) {
  if (const auto* r = std::get_if<Element::Residue>(&e.value)) return std::to_string(r->value);
  if (const auto* t = std::get_if<Element::Tuple>(&e.value)) {
    std::string s = "(";
    for (std::size_t i = 0; i < t->parts.size(); ++i) {
      if (i) s += ",";
      s += to_string(t->parts[i]);
    }
    return s + ")";
  }
  const auto& w = std::get<Element::WreathPair>(e.value);
  std::string s = "[";
  for (std::size_t i = 0; i < w.table.size(); ++i) {
    if (i) s += ",";
    s += to_string(w.table[i]);
  }
  return s + "; " + to_string(w.top.front()) + "]";
}

ConcreteGroup quaternion_group() {
  // Units 1, i, j, k as 0..3; unit_mul[u][v] = (sign, unit) of u*v.
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> unit_mul{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<std::vector<ConcreteGroup::Index>> table(8, std::vector<ConcreteGroup::Index>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto [sign, unit] = unit_mul[a / 2][b / 2];
      const int s = sign * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      table[a][b] = static_cast<ConcreteGroup::Index>(2 * unit + (s < 0 ? 1 : 0));
    }
  }
  return ConcreteGroup::from_cayley_table("Q8", table);
}

// --- subgroups -------------------------------------------------------------

Subgroup::Subgroup(ConcreteGroup parent) : parent_(std::move(parent)) {
  mask_.assign(parent_.order(), false);
  mask_[ConcreteGroup::identity()] = true;
  members_.push_back(ConcreteGroup::identity());
}

// For a closed H and a new generator g: old members only need g applied,
// new members need every generator applied.
void Subgroup::adjoin(Index g) {
  generators_.push_back(g);
  const std::size_t old = members_.size();
  auto visit = [&](Index y) {
    if (!mask_[y]) {
      mask_[y] = true;
      members_.push_back(y);
    }
  };
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Index x = members_[i];
    if (i < old) {
      visit(parent_.compose(x, g));
    } else {
      for (const Index s : generators_) visit(parent_.compose(x, s));
    }
  }
}

std::uint64_t Subgroup::exponent() const {
  std::uint64_t e = 1;
  for (const Index x : members_) e = std::lcm(e, parent_.element_order(x));
  return e;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Index x) { return other.contains(x); });
}

bool Subgroup::is_normal() const {
  for (const Index g : generators_) {
    for (std::uint64_t x = 0; x < parent_.order(); ++x) {
      if (!contains(parent_.conjugate(g, static_cast<Index>(x)))) return false;
    }
  }
  return true;
}

Subgroup generate(const ConcreteGroup& g, std::span<const ConcreteGroup::Index> candidates) {
  Subgroup h(g);
  for (const auto c : candidates) {
    if (c >= g.order()) throw Error(ErrorCode::BadParameters, "generator index out of range");
    if (!h.contains(c)) h.adjoin(c);
  }
  std::sort(h.members_.begin(), h.members_.end());
  return h;
}

Subgroup trivial_subgroup(const ConcreteGroup& g) { return generate(g, {}); }

Subgroup whole_group(const ConcreteGroup& g) {
  std::vector<ConcreteGroup::Index> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return generate(g, all);
}

}  // namespace wreathvar
