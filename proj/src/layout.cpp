#include "layout.hpp"

#include <array>

#include "wreathvar/error.hpp"

namespace wreathvar::detail {

void Layout::set_radices(std::vector<Coord> radices) { radices_ = std::move(radices); }

std::uint64_t Layout::encode(const Coord* a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) idx = idx * radices_[i] + a[i];
  return idx;
}

void Layout::decode(std::uint64_t index, Coord* out) const {
  for (std::size_t i = radices_.size(); i-- > 0;) {
    out[i] = static_cast<Coord>(index % radices_[i]);
    index /= radices_[i];
  }
}

namespace {

class CyclicLayout final : public Layout {
 public:
  explicit CyclicLayout(std::uint64_t n) : n_(n) {
    order_ = n;
    if (n > 1) set_radices({static_cast<Coord>(n)});
  }

  void mul(const Coord* a, const Coord* b, Coord* out) const override {
    if (n_ == 1) return;
    std::uint64_t s = std::uint64_t{a[0]} + b[0];
    out[0] = static_cast<Coord>(s >= n_ ? s - n_ : s);
  }
  void inv(const Coord* a, Coord* out) const override {
    if (n_ == 1) return;
    out[0] = a[0] == 0 ? 0 : static_cast<Coord>(n_ - a[0]);
  }
  Element to_element(const Coord* a) const override {
    return Element{Element::Residue{n_ == 1 ? 0 : a[0], n_}};
  }
  void from_element(const Element& e, Coord* out) const override {
    const auto* r = std::get_if<Element::Residue>(&e.value);
    if (r == nullptr || r->modulus != n_ || r->value >= n_) {
      throw Error(ErrorCode::BadParameters, "element does not match cyclic group C" + std::to_string(n_));
    }
    if (n_ > 1) out[0] = static_cast<Coord>(r->value);
  }

 private:
  std::uint64_t n_;
};

/// Direct product of the given factors; a direct power repeats one factor.
class ProductLayout final : public Layout {
 public:
  explicit ProductLayout(std::vector<std::shared_ptr<const Layout>> parts) : parts_(std::move(parts)) {
    std::vector<Coord> radices;
    order_ = 1;
    for (const auto& part : parts_) {
      offsets_.push_back(radices.size());
      radices.insert(radices.end(), part->radices().begin(), part->radices().end());
      order_ *= part->order();
    }
    set_radices(std::move(radices));
  }

  void mul(const Coord* a, const Coord* b, Coord* out) const override {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      parts_[i]->mul(a + offsets_[i], b + offsets_[i], out + offsets_[i]);
    }
  }
  void inv(const Coord* a, Coord* out) const override {
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i]->inv(a + offsets_[i], out + offsets_[i]);
  }
  Element to_element(const Coord* a) const override {
    Element::Tuple t;
    for (std::size_t i = 0; i < parts_.size(); ++i) t.parts.push_back(parts_[i]->to_element(a + offsets_[i]));
    return Element{std::move(t)};
  }
  void from_element(const Element& e, Coord* out) const override {
    const auto* t = std::get_if<Element::Tuple>(&e.value);
    if (t == nullptr || t->parts.size() != parts_.size()) {
      throw Error(ErrorCode::BadParameters, "element does not match direct product arity");
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i]->from_element(t->parts[i], out + offsets_[i]);
  }

 private:
  std::vector<std::shared_ptr<const Layout>> parts_;
  std::vector<std::size_t> offsets_;
};

// Elements are pairs (f, b) with f: top -> bottom stored as one bottom run per
// top index, followed by b. Multiplication:
//   (f1, b1)(f2, b2) = (x -> f1(x) f2(x b1), b1 b2).
class WreathLayout final : public Layout {
 public:
  WreathLayout(std::shared_ptr<const Layout> bottom, std::shared_ptr<const Layout> top)
      : bottom_(std::move(bottom)), top_(std::move(top)) {
    top_order_ = top_->order();
    bottom_width_ = bottom_->width();
    std::vector<Coord> radices;
    for (std::uint64_t x = 0; x < top_order_; ++x) {
      radices.insert(radices.end(), bottom_->radices().begin(), bottom_->radices().end());
    }
    radices.insert(radices.end(), top_->radices().begin(), top_->radices().end());
    set_radices(std::move(radices));
    order_ = 1;
    for (std::uint64_t x = 0; x < top_order_; ++x) order_ *= bottom_->order();
    order_ *= top_order_;

    if (bottom_width_ > 0 && top_order_ <= 1024) {
      right_table_.resize(top_order_ * top_order_);
      std::array<Coord, kMaxWidth> cx{}, cy{}, cz{};
      for (std::uint64_t x = 0; x < top_order_; ++x) {
        top_->decode(x, cx.data());
        for (std::uint64_t y = 0; y < top_order_; ++y) {
          top_->decode(y, cy.data());
          top_->mul(cx.data(), cy.data(), cz.data());
          right_table_[x * top_order_ + y] = static_cast<std::uint32_t>(top_->encode(cz.data()));
        }
      }
    }
  }

  void mul(const Coord* a, const Coord* b, Coord* out) const override {
    const std::size_t top_off = top_order_ * bottom_width_;
    if (bottom_width_ > 0) {
      const std::uint64_t b1 = top_->encode(a + top_off);
      for (std::uint64_t x = 0; x < top_order_; ++x) {
        const std::uint64_t y = right(x, b1);
        bottom_->mul(a + x * bottom_width_, b + y * bottom_width_, out + x * bottom_width_);
      }
    }
    top_->mul(a + top_off, b + top_off, out + top_off);
  }

  // (f, b)^-1 = (y -> f(y b^-1)^-1, b^-1)
  void inv(const Coord* a, Coord* out) const override {
    const std::size_t top_off = top_order_ * bottom_width_;
    top_->inv(a + top_off, out + top_off);
    if (bottom_width_ > 0) {
      const std::uint64_t binv = top_->encode(out + top_off);
      for (std::uint64_t y = 0; y < top_order_; ++y) {
        const std::uint64_t src = right(y, binv);
        bottom_->inv(a + src * bottom_width_, out + y * bottom_width_);
      }
    }
  }

  Element to_element(const Coord* a) const override {
    Element::WreathPair w;
    w.table.reserve(top_order_);
    for (std::uint64_t x = 0; x < top_order_; ++x) w.table.push_back(bottom_->to_element(a + x * bottom_width_));
    w.top.push_back(top_->to_element(a + top_order_ * bottom_width_));
    return Element{std::move(w)};
  }

  void from_element(const Element& e, Coord* out) const override {
    const auto* w = std::get_if<Element::WreathPair>(&e.value);
    if (w == nullptr || w->table.size() != top_order_ || w->top.size() != 1) {
      throw Error(ErrorCode::BadParameters, "wreath element needs one table entry per top element");
    }
    for (std::uint64_t x = 0; x < top_order_; ++x) bottom_->from_element(w->table[x], out + x * bottom_width_);
    top_->from_element(w->top.front(), out + top_order_ * bottom_width_);
  }

 private:
  std::uint64_t right(std::uint64_t x, std::uint64_t b) const {
    if (!right_table_.empty()) return right_table_[x * top_order_ + b];
    std::array<Coord, kMaxWidth> cx{}, cb{}, cz{};
    top_->decode(x, cx.data());
    top_->decode(b, cb.data());
    top_->mul(cx.data(), cb.data(), cz.data());
    return top_->encode(cz.data());
  }

  std::shared_ptr<const Layout> bottom_;
  std::shared_ptr<const Layout> top_;
  std::uint64_t top_order_ = 1;
  std::size_t bottom_width_ = 0;
  std::vector<std::uint32_t> right_table_;
};

class TableLayout final : public Layout {
 public:
  TableLayout(std::vector<std::uint32_t> table, std::uint32_t n) : table_(std::move(table)), n_(n) {
    order_ = n;
    if (n > 1) set_radices({n});
    inverse_.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (table_[std::size_t{a} * n + b] == 0) inverse_[a] = b;
      }
    }
  }

  void mul(const Coord* a, const Coord* b, Coord* out) const override {
    if (n_ > 1) out[0] = table_[std::size_t{a[0]} * n_ + b[0]];
  }
  void inv(const Coord* a, Coord* out) const override {
    if (n_ > 1) out[0] = inverse_[a[0]];
  }
  Element to_element(const Coord* a) const override { return Element{Element::Residue{n_ > 1 ? a[0] : 0u, n_}}; }
  void from_element(const Element& e, Coord* out) const override {
    const auto* r = std::get_if<Element::Residue>(&e.value);
    if (r == nullptr || r->modulus != n_ || r->value >= n_) {
      throw Error(ErrorCode::BadParameters, "element label out of range for table group");
    }
    if (n_ > 1) out[0] = static_cast<Coord>(r->value);
  }

 private:
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t n_;
};

std::shared_ptr<const Layout> build(const GroupExpr& expr) {
  const auto& node = expr.node();
  if (const auto* c = std::get_if<GroupExpr::Cyclic>(&node)) {
    return std::make_shared<CyclicLayout>(c->n);
  }
  if (const auto* d = std::get_if<GroupExpr::DirectProduct>(&node)) {
    std::vector<std::shared_ptr<const Layout>> parts;
    for (const auto& part : d->parts) parts.push_back(build(part));
    return std::make_shared<ProductLayout>(std::move(parts));
  }
  if (const auto* p = std::get_if<GroupExpr::DirectPower>(&node)) {
    auto base = build(*p->base);
    return std::make_shared<ProductLayout>(std::vector<std::shared_ptr<const Layout>>(p->k, base));
  }
  const auto& w = std::get<GroupExpr::Wreath>(node);
  return std::make_shared<WreathLayout>(build(*w.bottom), build(*w.top));
}

}  // namespace

std::shared_ptr<const Layout> make_layout(const GroupExpr& expr) { return build(expr); }

std::shared_ptr<const Layout> make_table_layout(std::vector<std::uint32_t> table, std::uint32_t order) {
  return std::make_shared<TableLayout>(std::move(table), order);
}

}  // namespace wreathvar::detail
