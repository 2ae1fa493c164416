#include "kleene/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace kleene {

PosetMap::PosetMap(Poset source, Poset target, std::vector<Element> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) fail(ErrorCode::InvalidArgument, "map is not total on its source");
  for (Element y : assignment_)
    if (y >= target_.size()) fail(ErrorCode::InvalidArgument, "map sends an element outside its target");
}

PosetMap::PosetMap(const InvolutivePoset& source, const InvolutivePoset& target, std::vector<Element> assignment)
    : PosetMap(source.poset(), target.poset(), std::move(assignment)) {
  source_inv_ = source.involution();
  target_inv_ = target.involution();
}

Subset PosetMap::image(const Subset& x) const {
  Subset r(target_.size());
  x.for_each([&](std::size_t e) { r.set(assignment_[e]); });
  return r;
}

bool PosetMap::verify(std::initializer_list<MapProperty> properties) {
  bool all = true;
  for (MapProperty prop : properties) {
    bool ok = false;
    switch (prop) {
      case MapProperty::OrderPreserving: ok = is_order_preserving(*this); break;
      case MapProperty::OrderReflecting: ok = is_order_reflecting(*this); break;
      case MapProperty::LuluMorphism: ok = is_order_preserving(*this) && is_lulu_morphism(*this); break;
      case MapProperty::LuluEmbedding: ok = is_order_preserving(*this) && is_lulu_embedding(*this); break;
      case MapProperty::InvolutionPreserving: ok = is_involution_preserving(*this); break;
      case MapProperty::Isomorphism:
        ok = is_bijective(*this) && is_order_preserving(*this) && is_order_reflecting(*this);
        break;
    }
    if (ok)
      verified_ |= static_cast<std::uint32_t>(prop);
    else
      all = false;
  }
  return all;
}

bool is_order_preserving(const PosetMap& f) {
  const Poset &s = f.source(), &t = f.target();
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      if (s.leq(x, y) && !t.leq(f(x), f(y))) return false;
  return true;
}

bool is_order_reflecting(const PosetMap& f) {
  const Poset &s = f.source(), &t = f.target();
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      if (t.leq(f(x), f(y)) && !s.leq(x, y)) return false;
  return true;
}

bool is_bijective(const PosetMap& f) {
  if (f.source().size() != f.target().size()) return false;
  Subset hit(f.target().size());
  for (Element y : f.assignment()) {
    if (hit.test(y)) return false;
    hit.set(y);
  }
  return true;
}

bool is_involution_preserving(const PosetMap& f) {
  const auto* si = f.source_involution();
  const auto* ti = f.target_involution();
  if (!si || !ti) return false;
  for (Element x = 0; x < f.source().size(); ++x)
    if (f((*si)[x]) != (*ti)[f(x)]) return false;
  return true;
}

namespace {

bool lulu_condition(const PosetMap& f, const Subset& x) {
  const Poset &s = f.source(), &t = f.target();
  const Subset fx = f.image(x);
  if (lower_bounds(t, fx) != lower_bounds(t, f.image(upper_lower(s, x)))) return false;
  if (upper_bounds(t, fx) != upper_bounds(t, f.image(lower_upper(s, x)))) return false;
  return true;
}

// Calls visit(X) for every non-empty antichain X; stops when visit returns false.
bool for_each_antichain(const Poset& p, const std::function<bool(const Subset&)>& visit) {
  Subset cur(p.size());
  std::function<bool(Element, const Subset&)> rec = [&](Element from, const Subset& allowed) {
    for (Element x = allowed.next(from); x < p.size(); x = allowed.next(x + 1)) {
      cur.set(x);
      if (!visit(cur)) return false;
      Subset next = allowed;
      next.subtract(p.down(x));
      next.subtract(p.up(x));
      if (!rec(x + 1, next)) return false;
      cur.reset(x);
    }
    return true;
  };
  return rec(0, p.full_subset());
}

}  // namespace

bool is_lulu_morphism(const PosetMap& f, LuluCheck mode) {
  if (!is_order_preserving(f)) fail(ErrorCode::NotOrderPreserving, "LULU check needs an order-preserving map");
  const Poset& s = f.source();
  if (mode == LuluCheck::Antichains)
    return for_each_antichain(s, [&](const Subset& x) { return lulu_condition(f, x); });
  if (s.size() > 20) fail(ErrorCode::SizeLimit, "full-subset LULU check limited to 20 source elements");
  const std::uint64_t count = std::uint64_t{1} << s.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    Subset x(s.size());
    for (Element i = 0; i < s.size(); ++i)
      if (mask >> i & 1U) x.set(i);
    if (!lulu_condition(f, x)) return false;
  }
  return true;
}

bool is_lulu_embedding(const PosetMap& f, LuluCheck mode) {
  return is_lulu_morphism(f, mode) && is_order_reflecting(f);
}

bool is_lulu_isomorphism(const PosetMap& f) {
  if (!is_bijective(f) || !is_order_preserving(f) || !is_order_reflecting(f)) return false;
  if (!is_lulu_morphism(f)) return false;
  std::vector<Element> inverse(f.target().size());
  for (Element x = 0; x < f.source().size(); ++x) inverse[f(x)] = x;
  PosetMap back(f.target(), f.source(), std::move(inverse));
  return is_lulu_morphism(back);
}

// --- isomorphism search -----------------------------------------------------

namespace {

using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, bool>;

std::vector<Key> element_keys(const Poset& p, const std::vector<Element>* inv) {
  std::vector<std::size_t> lower_covers(p.size()), upper_covers(p.size());
  for (auto [x, y] : p.covers()) {
    ++upper_covers[x];
    ++lower_covers[y];
  }
  std::vector<Key> keys(p.size());
  for (Element x = 0; x < p.size(); ++x)
    keys[x] = {p.down(x).count(), p.up(x).count(), lower_covers[x], upper_covers[x], inv && (*inv)[x] == x};
  return keys;
}

class IsoSearch {
 public:
  IsoSearch(const Poset& a, const Poset& b, const std::vector<Element>* ia, const std::vector<Element>* ib)
      : a_(a), b_(b), ia_(ia), ib_(ib), ka_(element_keys(a, ia)), kb_(element_keys(b, ib)) {}

  std::optional<std::vector<Element>> run() {
    const std::size_t n = a_.size();
    if (n != b_.size()) return std::nullopt;
    {
      auto sa = ka_, sb = kb_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    plan_order();
    f_.assign(n, kUnset);
    g_.assign(n, kUnset);
    if (!extend(0)) return std::nullopt;
    return f_;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  // Greedy order: each next element has the most comparabilities with the
  // already-placed ones; ties go to rarer keys, then lower index.
  void plan_order() {
    const std::size_t n = a_.size();
    std::vector<std::size_t> rarity(n);
    for (Element x = 0; x < n; ++x)
      rarity[x] = static_cast<std::size_t>(std::count(ka_.begin(), ka_.end(), ka_[x]));
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Element best = kUnset;
      for (Element x = 0; x < n; ++x) {
        if (placed[x]) continue;
        if (best == kUnset || links[x] > links[best] ||
            (links[x] == links[best] && rarity[x] < rarity[best]))
          best = x;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Element x = 0; x < n; ++x)
        if (!placed[x] && a_.comparable(x, best)) ++links[x];
    }
  }

  bool consistent(Element x, Element y) const {
    if (ka_[x] != kb_[y]) return false;
    for (Element u : assigned_) {
      const Element v = f_[u];
      if (a_.leq(u, x) != b_.leq(v, y) || a_.leq(x, u) != b_.leq(y, v)) return false;
    }
    return true;
  }

  void bind(Element x, Element y) {
    f_[x] = y;
    g_[y] = x;
    assigned_.push_back(x);
  }
  void unbind() {
    Element x = assigned_.back();
    assigned_.pop_back();
    g_[f_[x]] = kUnset;
    f_[x] = kUnset;
  }

  bool extend(std::size_t pos) {
    while (pos < order_.size() && f_[order_[pos]] != kUnset) ++pos;
    if (pos == order_.size()) return true;
    const Element x = order_[pos];
    for (Element y = 0; y < b_.size(); ++y) {
      if (g_[y] != kUnset || !consistent(x, y)) continue;
      bind(x, y);
      bool ok = true;
      bool paired = false;
      if (ia_ && ib_) {
        const Element xp = (*ia_)[x], yp = (*ib_)[y];
        if ((xp == x) != (yp == y)) {
          ok = false;
        } else if (xp != x) {
          ok = f_[xp] == kUnset && g_[yp] == kUnset && consistent(xp, yp);
          if (ok) {
            bind(xp, yp);
            paired = true;
          }
        }
      }
      if (ok && extend(pos + 1)) return true;
      if (paired) unbind();
      unbind();
    }
    return false;
  }

  const Poset& a_;
  const Poset& b_;
  const std::vector<Element>* ia_;
  const std::vector<Element>* ib_;
  std::vector<Key> ka_, kb_;
  std::vector<Element> order_;
  std::vector<Element> f_, g_;
  std::vector<Element> assigned_;
};

std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> id(n);
  for (Element i = 0; i < n; ++i) id[i] = i;
  return id;
}

}  // namespace

std::optional<PosetMap> find_isomorphism(const Poset& a, const Poset& b) {
  std::optional<std::vector<Element>> f;
  if (a.identical_to(b))
    f = identity_map(a.size());
  else
    f = IsoSearch(a, b, nullptr, nullptr).run();
  if (!f) return std::nullopt;
  PosetMap m(a, b, std::move(*f));
  m.verify({MapProperty::OrderPreserving, MapProperty::OrderReflecting, MapProperty::Isomorphism});
  return m;
}

std::optional<PosetMap> find_isomorphism(const InvolutivePoset& a, const InvolutivePoset& b,
                                         bool respect_involution) {
  std::optional<std::vector<Element>> f;
  if (a.poset().identical_to(b.poset()) && (!respect_involution || a.involution() == b.involution()))
    f = identity_map(a.size());
  else if (respect_involution)
    f = IsoSearch(a.poset(), b.poset(), &a.involution(), &b.involution()).run();
  else
    f = IsoSearch(a.poset(), b.poset(), nullptr, nullptr).run();
  if (!f) return std::nullopt;
  PosetMap m(a, b, std::move(*f));
  m.verify({MapProperty::OrderPreserving, MapProperty::OrderReflecting, MapProperty::Isomorphism});
  if (respect_involution) m.verify({MapProperty::InvolutionPreserving});
  return m;
}

}  // namespace kleene
