#include "kleene/involution.hpp"

#include <functional>
#include <mutex>

namespace kleene {

namespace detail {
struct ClassificationCache {
  std::once_flag once;
  Classification value;
};
}  // namespace detail

namespace {
constexpr std::size_t kEagerClassificationLimit = 64;
}

InvolutivePoset::InvolutivePoset(Poset poset, std::vector<Element> involution)
    : poset_(std::move(poset)), cache_(std::make_shared<detail::ClassificationCache>()) {
  const std::size_t n = poset_.size();
  if (involution.size() != n) fail(ErrorCode::NotInvolutive, "involution is not total on the carrier");
  for (Element x = 0; x < n; ++x)
    if (involution[x] >= n) fail(ErrorCode::NotInvolutive, "involution maps outside the carrier");
  for (Element x = 0; x < n; ++x)
    if (involution[involution[x]] != x)
      fail(ErrorCode::NotInvolutive, "x'' != x for x = '" + poset_.label(x) + "'");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (poset_.leq(x, y) && !poset_.leq(involution[y], involution[x]))
        fail(ErrorCode::NotAntitone, "not antitone: '" + poset_.label(x) + "' <= '" + poset_.label(y) +
                                         "' but not '" + poset_.label(involution[y]) + "' <= '" +
                                         poset_.label(involution[x]) + "'");
  inv_ = std::make_shared<const std::vector<Element>>(std::move(involution));
  if (n <= kEagerClassificationLimit) classification();
}

const Classification& InvolutivePoset::classification() const {
  std::call_once(cache_->once, [this] { cache_->value = classify(*this); });
  return cache_->value;
}

InvolutivePoset attach_involution(const Poset& p, std::span<const std::pair<std::string, std::string>> pairs) {
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> inv(p.size(), kUnset);
  auto bind = [&](Element a, Element b) {
    if (inv[a] != kUnset && inv[a] != b)
      fail(ErrorCode::NotInvolutive, "conflicting images for '" + p.label(a) + "'");
    inv[a] = b;
  };
  for (const auto& [la, lb] : pairs) {
    Element a = p.index_of(la), b = p.index_of(lb);
    bind(a, b);
    bind(b, a);
  }
  for (Element x = 0; x < p.size(); ++x)
    if (inv[x] == kUnset) fail(ErrorCode::NotInvolutive, "no image given for '" + p.label(x) + "'");
  return InvolutivePoset(p, std::move(inv));
}

InvolutivePoset attach_involution(const Poset& p,
                                  std::initializer_list<std::pair<std::string, std::string>> pairs) {
  return attach_involution(p, std::span<const std::pair<std::string, std::string>>(pairs.begin(), pairs.size()));
}

Subset image(const InvolutivePoset& k, const Subset& x) {
  Subset r(k.size());
  x.for_each([&](std::size_t e) { r.set(k.inv(e)); });
  return r;
}

bool normality_holds(const InvolutivePoset& k) {
  const Poset& p = k.poset();
  // L(x,x') <= U(y,y') for all x, y  <=>  (∪ L(x,x')) <= (∪ U(y,y')).
  Subset lows(p.size()), highs(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    lows |= p.down(x) & p.down(k.inv(x));
    highs |= p.up(x) & p.up(k.inv(x));
  }
  return highs.is_subset_of(upper_bounds(p, lows));
}

bool zhu_holds(const InvolutivePoset& k) {
  const Poset& p = k.poset();
  Subset below(p.size()), above(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    if (p.leq(x, k.inv(x))) below.set(x);
    if (p.leq(k.inv(x), x)) above.set(x);
  }
  return above.is_subset_of(upper_bounds(p, below));
}

Subset fixed_points(const InvolutivePoset& k) {
  Subset r(k.size());
  for (Element x = 0; x < k.size(); ++x)
    if (k.inv(x) == x) r.set(x);
  return r;
}

bool is_orthocomplementation(const InvolutivePoset& k) {
  const Poset& p = k.poset();
  auto bot = p.bottom();
  auto top = p.top();
  if (!bot || !top) fail(ErrorCode::NotBounded, "orthocomplementation needs a bounded poset");
  const Subset zero = Subset::single(p.size(), *bot);
  const Subset one = Subset::single(p.size(), *top);
  for (Element x = 0; x < p.size(); ++x) {
    if ((p.down(x) & p.down(k.inv(x))) != zero) return false;
    if ((p.up(x) & p.up(k.inv(x))) != one) return false;
  }
  return true;
}

Classification classify(const InvolutivePoset& k) {
  const Poset& p = k.poset();
  Classification c;
  c.distributive = is_distributive(p);
  c.pseudo_kleene = normality_holds(k);
  c.kleene = c.distributive && c.pseudo_kleene;
  c.boolean = c.distributive && is_complemented(p);
  c.ortho = p.bottom() && p.top() && is_orthocomplementation(k);
  c.lattice = is_lattice(p);
  c.fixed_points = fixed_points(k);
  return c;
}

std::vector<std::vector<Element>> all_antitone_involutions(const Poset& p) {
  constexpr Element kUnset = static_cast<Element>(-1);
  const std::size_t n = p.size();
  std::vector<std::vector<Element>> out;
  std::vector<Element> inv(n, kUnset);
  std::vector<Element> assigned;

  auto consistent = [&](Element v) {
    for (Element u : assigned) {
      if (p.leq(u, v) && !p.leq(inv[v], inv[u])) return false;
      if (p.leq(v, u) && !p.leq(inv[u], inv[v])) return false;
    }
    return true;
  };

  std::function<void(Element)> rec = [&](Element x) {
    while (x < n && inv[x] != kUnset) ++x;
    if (x == n) {
      out.push_back(inv);
      return;
    }
    for (Element y = x; y < n; ++y) {
      if (inv[y] != kUnset) continue;
      inv[x] = y;
      inv[y] = x;
      bool ok = consistent(x);
      if (ok) {
        assigned.push_back(x);
        if (y != x) {
          ok = consistent(y);
          assigned.push_back(y);
        }
        if (ok) rec(x + 1);
        assigned.pop_back();
        if (y != x) assigned.pop_back();
      }
      inv[x] = kUnset;
      inv[y] = kUnset;
    }
  };
  rec(0);
  return out;
}

}  // namespace kleene
