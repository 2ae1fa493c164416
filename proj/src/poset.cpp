#include "kleene/poset.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace kleene {

namespace {
std::atomic<std::size_t> g_size_cap{kDefaultSizeCap};
}

std::size_t size_cap() noexcept { return g_size_cap.load(std::memory_order_relaxed); }
void set_size_cap(std::size_t cap) noexcept {
  g_size_cap.store(cap ? cap : kDefaultSizeCap, std::memory_order_relaxed);
}

void check_size_cap(std::size_t requested, std::string_view what) {
  if (requested > size_cap()) {
    std::ostringstream os;
    os << what << " would have " << requested << " elements (cap " << size_cap() << ")";
    fail(ErrorCode::SizeLimit, os.str());
  }
}

namespace detail {
struct PosetData {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> index;
  std::vector<Bitset> down;
  std::vector<Bitset> up;
};
}  // namespace detail

namespace {

std::shared_ptr<detail::PosetData> make_data(std::vector<std::string> labels) {
  auto d = std::make_shared<detail::PosetData>();
  d->labels = std::move(labels);
  d->index.reserve(d->labels.size());
  for (Element i = 0; i < d->labels.size(); ++i) {
    if (d->labels[i].empty()) fail(ErrorCode::InvalidArgument, "empty element label");
    if (!d->index.emplace(d->labels[i], i).second)
      fail(ErrorCode::DuplicateLabel, "duplicate label '" + d->labels[i] + "'");
  }
  return d;
}

void fill_down_from_up(detail::PosetData& d) {
  const std::size_t n = d.labels.size();
  d.down.assign(n, Bitset(n));
  for (Element i = 0; i < n; ++i) d.up[i].for_each([&](std::size_t j) { d.down[j].set(i); });
}

}  // namespace

Poset::Poset() : d_(std::make_shared<detail::PosetData>()) {}

Poset Poset::from_generators(std::vector<std::string> labels,
                             std::span<const std::pair<Element, Element>> generators) {
  auto d = make_data(std::move(labels));
  const std::size_t n = d->labels.size();
  d->up.assign(n, Bitset(n));
  for (Element i = 0; i < n; ++i) d->up[i].set(i);
  for (auto [x, y] : generators) {
    if (x >= n || y >= n) fail(ErrorCode::UnknownElement, "order generator references unknown element");
    d->up[x].set(y);
  }
  // Warshall closure on rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (i != k && d->up[i].test(k)) d->up[i] |= d->up[k];
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (d->up[i].test(j) && d->up[j].test(i))
        fail(ErrorCode::AntisymmetryViolation,
             "order contains a cycle through '" + d->labels[i] + "' and '" + d->labels[j] + "'");
  fill_down_from_up(*d);
  return Poset(std::move(d));
}

Poset Poset::from_up_sets(std::vector<std::string> labels, std::vector<Bitset> up) {
  auto d = make_data(std::move(labels));
  const std::size_t n = d->labels.size();
  if (up.size() != n) fail(ErrorCode::InvalidArgument, "relation has the wrong number of rows");
  for (Element i = 0; i < n; ++i) {
    if (up[i].size() != n) fail(ErrorCode::InvalidArgument, "relation row has the wrong width");
    if (!up[i].test(i)) fail(ErrorCode::InvalidArgument, "relation is not reflexive at '" + d->labels[i] + "'");
  }
  for (Element i = 0; i < n; ++i)
    for (Element j = up[i].next(i + 1); j < n; j = up[i].next(j + 1))
      if (up[j].test(i))
        fail(ErrorCode::AntisymmetryViolation,
             "order contains a cycle through '" + d->labels[i] + "' and '" + d->labels[j] + "'");
  for (Element i = 0; i < n; ++i)
    up[i].for_each([&](std::size_t j) {
      if (!up[j].is_subset_of(up[i]))
        fail(ErrorCode::InvalidArgument, "relation is not transitive at '" + d->labels[i] + "'");
    });
  d->up = std::move(up);
  fill_down_from_up(*d);
  return Poset(std::move(d));
}

std::size_t Poset::size() const noexcept { return d_->labels.size(); }
const std::string& Poset::label(Element x) const { return d_->labels.at(x); }
const std::vector<std::string>& Poset::labels() const noexcept { return d_->labels; }

std::optional<Element> Poset::find(std::string_view label) const {
  auto it = d_->index.find(std::string(label));
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

Element Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorCode::UnknownElement, "unknown element '" + std::string(label) + "'");
}

const Bitset& Poset::down(Element x) const noexcept { return d_->down[x]; }
const Bitset& Poset::up(Element x) const noexcept { return d_->up[x]; }

Subset Poset::subset_of(std::span<const Element> xs) const {
  Subset s(size());
  for (Element x : xs) {
    if (x >= size()) fail(ErrorCode::UnknownElement, "element index out of range");
    s.set(x);
  }
  return s;
}

Subset Poset::subset_of_labels(std::span<const std::string> labels) const {
  Subset s(size());
  for (const auto& l : labels) s.set(index_of(l));
  return s;
}

Subset Poset::subset_of_labels(std::initializer_list<std::string_view> labels) const {
  Subset s(size());
  for (auto l : labels) s.set(index_of(l));
  return s;
}

std::string Poset::format_subset(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += label(i);
    first = false;
  });
  return out + "}";
}

Poset Poset::induced(const Subset& members) const {
  std::vector<Element> keep = members.indices();
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Element x : keep) labels.push_back(label(x));
  auto d = make_data(std::move(labels));
  const std::size_t m = keep.size();
  d->up.assign(m, Bitset(m));
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j)
      if (leq(keep[i], keep[j])) d->up[i].set(j);
  fill_down_from_up(*d);
  return Poset(std::move(d));
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x) {
    Bitset above = up(x);
    above.reset(x);
    // y covers x iff y is minimal in the strict up-set of x.
    above.for_each([&](std::size_t y) {
      Bitset between = above & down(y);
      between.reset(y);
      if (between.none()) out.emplace_back(x, y);
    });
  }
  return out;
}

std::optional<Element> Poset::bottom() const { return least(*this, full_subset()); }
std::optional<Element> Poset::top() const { return greatest(*this, full_subset()); }

bool Poset::identical_to(const Poset& other) const {
  if (d_ == other.d_) return true;
  return d_->labels == other.d_->labels && d_->up == other.d_->up;
}

Poset build_poset(std::vector<std::string> labels,
                  std::span<const std::pair<std::string, std::string>> generators) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<Element, Element>> gens;
  gens.reserve(generators.size());
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) fail(ErrorCode::UnknownElement, "unknown element '" + l + "'");
    return it->second;
  };
  for (const auto& [a, b] : generators) gens.emplace_back(lookup(a), lookup(b));
  return Poset::from_generators(std::move(labels), gens);
}

Poset build_poset(std::vector<std::string> labels,
                  std::initializer_list<std::pair<std::string, std::string>> generators) {
  return build_poset(std::move(labels),
                     std::span<const std::pair<std::string, std::string>>(generators.begin(), generators.size()));
}

// --- L/U calculus -----------------------------------------------------------

Subset lower_bounds(const Poset& p, const Subset& b) {
  Subset r = p.full_subset();
  b.for_each([&](std::size_t x) { r &= p.down(x); });
  return r;
}

Subset upper_bounds(const Poset& p, const Subset& b) {
  Subset r = p.full_subset();
  b.for_each([&](std::size_t x) { r &= p.up(x); });
  return r;
}

Subset maximal(const Poset& p, const Subset& b) {
  Subset r(p.size());
  b.for_each([&](std::size_t x) {
    Bitset above = p.up(x) & b;
    if (above.count() == 1) r.set(x);
  });
  return r;
}

Subset minimal(const Poset& p, const Subset& b) {
  Subset r(p.size());
  b.for_each([&](std::size_t x) {
    Bitset below = p.down(x) & b;
    if (below.count() == 1) r.set(x);
  });
  return r;
}

Subset convex_hull(const Poset& p, const Subset& s) {
  if (s.none()) fail(ErrorCode::EmptySubset, "convex hull of the empty set");
  return lower_upper(p, s) & upper_lower(p, s);
}

bool is_convex(const Poset& p, const Subset& b) {
  Subset below(p.size()), above(p.size());
  b.for_each([&](std::size_t x) {
    below |= p.down(x);
    above |= p.up(x);
  });
  return (below & above).is_subset_of(b);
}

bool is_antichain(const Poset& p, const Subset& b) {
  bool ok = true;
  b.for_each([&](std::size_t x) {
    if ((p.up(x) & b).count() != 1) ok = false;
  });
  return ok;
}

bool is_frink_ideal(const Poset& p, const Subset& ideal) {
  return lower_upper(p, ideal).is_subset_of(ideal);
}

bool is_frink_filter(const Poset& p, const Subset& filter) {
  return upper_lower(p, filter).is_subset_of(filter);
}

std::optional<Element> greatest(const Poset& p, const Subset& b) {
  std::optional<Element> g;
  b.for_each([&](std::size_t x) {
    if (!g && b.is_subset_of(p.down(x))) g = x;
  });
  return g;
}

std::optional<Element> least(const Poset& p, const Subset& b) {
  std::optional<Element> g;
  b.for_each([&](std::size_t x) {
    if (!g && b.is_subset_of(p.up(x))) g = x;
  });
  return g;
}

std::optional<Element> supremum(const Poset& p, const Subset& b) { return least(p, upper_bounds(p, b)); }
std::optional<Element> infimum(const Poset& p, const Subset& b) { return greatest(p, lower_bounds(p, b)); }

// --- structural predicates --------------------------------------------------

namespace {

// Calls f(subset) for every non-empty subset of {0..n-1} with at most k members.
void for_each_small_subset(std::size_t n, std::size_t k, const std::function<bool(const Subset&)>& f) {
  Subset cur(n);
  bool stop = false;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t depth) {
    for (std::size_t i = from; i < n && !stop; ++i) {
      cur.set(i);
      if (!f(cur)) stop = true;
      if (!stop && depth + 1 < k) rec(i + 1, depth + 1);
      cur.reset(i);
    }
  };
  if (k > 0) rec(0, 0);
}

bool nary_lower(const Poset& p, std::size_t n) {
  bool ok = true;
  for_each_small_subset(p.size(), n, [&](const Subset& xs) {
    Subset ux = upper_bounds(p, xs);
    Subset lux = lower_bounds(p, ux);
    for (Element z = 0; z < p.size() && ok; ++z) {
      Subset lhs = lux & p.down(z);
      Subset gen(p.size());
      xs.for_each([&](std::size_t x) { gen |= p.down(x) & p.down(z); });
      if (lhs != lower_upper(p, gen)) ok = false;
    }
    return ok;
  });
  return ok;
}

bool nary_upper(const Poset& p, std::size_t n) {
  bool ok = true;
  for_each_small_subset(p.size(), n, [&](const Subset& xs) {
    Subset ulx = upper_bounds(p, lower_bounds(p, xs));
    for (Element z = 0; z < p.size() && ok; ++z) {
      Subset lhs = ulx & p.up(z);
      Subset gen(p.size());
      xs.for_each([&](std::size_t x) { gen |= p.up(x) & p.up(z); });
      if (lhs != upper_lower(p, gen)) ok = false;
    }
    return ok;
  });
  return ok;
}

}  // namespace

bool lu_identity_holds(const Poset& p, LuIdentity identity, std::size_t arity) {
  const std::size_t n = p.size();
  if (identity == LuIdentity::NaryLower) return nary_lower(p, arity);
  if (identity == LuIdentity::NaryUpper) return nary_upper(p, arity);
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Bitset &dx = p.down(x), &dy = p.down(y), &dz = p.down(z);
        const Bitset &ux = p.up(x), &uy = p.up(y), &uz = p.up(z);
        bool ok = true;
        switch (identity) {
          case LuIdentity::LowerOfUpperJoin:
            ok = (lower_bounds(p, ux & uy) & dz) == lower_upper(p, (dx & dz) | (dy & dz));
            break;
          case LuIdentity::UpperOfLowerJoin:
            ok = upper_bounds(p, (dx & dz) | (dy & dz)) == upper_bounds(p, lower_bounds(p, ux & uy) & dz);
            break;
          case LuIdentity::UpperOfLowerMeet:
            ok = (upper_bounds(p, dx & dy) & uz) == upper_lower(p, (ux & uz) | (uy & uz));
            break;
          case LuIdentity::LowerOfUpperMeet:
            ok = lower_bounds(p, (ux & uz) | (uy & uz)) == lower_bounds(p, upper_bounds(p, dx & dy) & uz);
            break;
          default:
            break;
        }
        if (!ok) return false;
      }
  return true;
}

bool is_distributive(const Poset& p) { return lu_identity_holds(p, LuIdentity::LowerOfUpperJoin); }

bool nary_distributive_check(const Poset& p, std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "n-ary distributivity needs n >= 2");
  return nary_lower(p, n) && nary_upper(p, n);
}

bool is_lattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y) {
      Subset xy = p.subset_of({x, y});
      if (!supremum(p, xy) || !infimum(p, xy)) return false;
    }
  return true;
}

bool is_join_irreducible(const Poset& p, Element a) {
  if (a >= p.size()) fail(ErrorCode::UnknownElement, "element index out of range");
  Bitset below = p.down(a);
  below.reset(a);
  for (Element c : below.indices())
    for (Element d : below.indices())
      if (c < d) {
        auto s = supremum(p, p.subset_of({c, d}));
        if (s && *s == a) return false;
      }
  return true;
}

bool is_meet_irreducible(const Poset& p, Element a) {
  if (a >= p.size()) fail(ErrorCode::UnknownElement, "element index out of range");
  Bitset above = p.up(a);
  above.reset(a);
  for (Element c : above.indices())
    for (Element d : above.indices())
      if (c < d) {
        auto s = infimum(p, p.subset_of({c, d}));
        if (s && *s == a) return false;
      }
  return true;
}

Subset complements_of(const Poset& p, Element x) {
  if (x >= p.size()) fail(ErrorCode::UnknownElement, "element index out of range");
  const Subset all_lower = lower_bounds(p, p.full_subset());
  const Subset all_upper = upper_bounds(p, p.full_subset());
  Subset r(p.size());
  for (Element y = 0; y < p.size(); ++y)
    if ((p.down(x) & p.down(y)) == all_lower && (p.up(x) & p.up(y)) == all_upper) r.set(y);
  return r;
}

bool is_complemented(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    if (complements_of(p, x).none()) return false;
  return true;
}

bool is_boolean_poset(const Poset& p) { return is_distributive(p) && is_complemented(p); }

bool has_antichain_of_size(const Poset& p, std::size_t k) {
  if (k == 0) return true;
  std::vector<Element> chosen;
  std::function<bool(Element)> rec = [&](Element from) {
    if (chosen.size() == k) return true;
    for (Element x = from; x < p.size(); ++x) {
      bool free = true;
      for (Element c : chosen)
        if (p.comparable(c, x)) {
          free = false;
          break;
        }
      if (!free) continue;
      chosen.push_back(x);
      if (rec(x + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

Subset interval_subset(const Poset& p, Element a, Element b) {
  if (a >= p.size() || b >= p.size()) fail(ErrorCode::UnknownElement, "element index out of range");
  if (!p.leq(a, b))
    fail(ErrorCode::NotComparable, "interval bounds '" + p.label(a) + "' and '" + p.label(b) + "' are not ordered");
  return p.up(a) & p.down(b);
}

Poset interval(const Poset& p, Element a, Element b) { return p.induced(interval_subset(p, a, b)); }

Poset dual(const Poset& p) {
  return Poset::from_relation(p.labels(), [&](Element i, Element j) { return p.leq(j, i); });
}

}  // namespace kleene
