#include "kleene/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kleene {

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

Poset twist_product(const Poset& a) {
  const std::size_t n = a.size();
  check_size_cap(n * n, "twist product");
  std::vector<std::string> labels;
  labels.reserve(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) labels.push_back(tuple_label({a.label(x), a.label(y)}));
  return Poset::from_relation(std::move(labels), [&](Element i, Element j) {
    return a.leq(i / n, j / n) && a.leq(j % n, i % n);
  });
}

std::vector<ElementPair> ps_pairs(const Poset& a, const Subset& s) {
  if (s.none()) fail(ErrorCode::EmptySubset, "P_S needs a non-empty S");
  const Subset ls = lower_bounds(a, s);
  const Subset us = upper_bounds(a, s);
  std::vector<ElementPair> out;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!(a.down(x) & a.down(y)).is_subset_of(ls)) continue;
      if (!(a.up(x) & a.up(y)).is_subset_of(us)) continue;
      out.emplace_back(x, y);
    }
  return out;
}

std::optional<Element> pair_index(const std::vector<ElementPair>& pairs, Element x, Element y) {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), ElementPair{x, y});
  if (it == pairs.end() || *it != ElementPair{x, y}) return std::nullopt;
  return static_cast<Element>(it - pairs.begin());
}

InvolutivePoset ps_construct(const Poset& a, const Subset& s) {
  const auto pairs = ps_pairs(a, s);
  check_size_cap(pairs.size(), "P_S construction");
  std::vector<std::string> labels;
  labels.reserve(pairs.size());
  for (auto [x, y] : pairs) labels.push_back(tuple_label({a.label(x), a.label(y)}));
  Poset p = Poset::from_relation(std::move(labels), [&](Element i, Element j) {
    return a.leq(pairs[i].first, pairs[j].first) && a.leq(pairs[j].second, pairs[i].second);
  });
  std::vector<Element> inv(pairs.size());
  for (Element i = 0; i < pairs.size(); ++i) inv[i] = *pair_index(pairs, pairs[i].second, pairs[i].first);
  return InvolutivePoset(std::move(p), std::move(inv));
}

PsReductions ps_reductions(const Poset& a, const Subset& s) {
  if (s.none()) fail(ErrorCode::EmptySubset, "P_S needs a non-empty S");
  PsReductions r{maximal(a, s) | minimal(a, s), convex_hull(a, s), std::nullopt, false};
  auto lo = infimum(a, s);
  auto hi = supremum(a, s);
  if (lo && hi) r.bounds = a.subset_of({*lo, *hi});
  const auto base = ps_pairs(a, s);
  r.all_equal = ps_pairs(a, r.max_min) == base && ps_pairs(a, r.hull) == base &&
                (!r.bounds || ps_pairs(a, *r.bounds) == base);
  return r;
}

PointEmbedding embed_at_point(const Poset& a, Element at) {
  if (at >= a.size()) fail(ErrorCode::UnknownElement, "embedding point is not an element");
  const Subset s = Subset::single(a.size(), at);
  const auto pairs = ps_pairs(a, s);
  InvolutivePoset target = ps_construct(a, s);
  std::vector<Element> f(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto idx = pair_index(pairs, x, at);
    if (!idx) fail(ErrorCode::Internal, "(x,a) missing from P_a(A)");
    f[x] = *idx;
  }
  PosetMap map(a, target.poset(), std::move(f));
  map.verify({MapProperty::OrderPreserving, MapProperty::OrderReflecting, MapProperty::LuluMorphism,
              MapProperty::LuluEmbedding});
  const bool convex = is_convex(target.poset(), map.image(a.full_subset()));
  return PointEmbedding{std::move(target), std::move(map), convex};
}

// --- ordinal sums ------------------------------------------------------------

OrdinalSum ordinal_sum(const std::vector<Poset>& operands) {
  if (operands.empty()) fail(ErrorCode::InvalidArgument, "ordinal sum needs at least one operand");
  const std::size_t k = operands.size();
  std::vector<Element> tops(k), bottoms(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Poset& p = operands[i];
    if (p.empty()) fail(ErrorCode::InvalidArgument, "ordinal sum operand is empty");
    if (i + 1 < k) {
      auto t = p.top();
      if (!t) fail(ErrorCode::NoUniqueTop, "operand " + std::to_string(i + 1) + " has no unique top");
      tops[i] = *t;
    }
    if (i > 0) {
      auto b = p.bottom();
      if (!b) fail(ErrorCode::NoUniqueBottom, "operand " + std::to_string(i + 1) + " has no unique bottom");
      bottoms[i] = *b;
    }
  }

  // Assign result indices; the bottom of operand i (i > 0) is the top of operand i-1.
  OrdinalSum out;
  out.operand_maps.resize(k);
  std::vector<std::string> raw;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < k; ++i) {
    const Poset& p = operands[i];
    out.operand_maps[i].resize(p.size());
    for (Element x = 0; x < p.size(); ++x) {
      if (i > 0 && x == bottoms[i]) {
        out.operand_maps[i][x] = out.operand_maps[i - 1][tops[i - 1]];
        continue;
      }
      out.operand_maps[i][x] = raw.size();
      raw.push_back(p.label(x));
      owner.push_back(i);
    }
  }
  std::set<std::string> seen;
  bool clash = false;
  for (const auto& l : raw) clash |= !seen.insert(l).second;
  std::vector<std::string> labels = raw;
  if (clash) {
    // Glued points keep their label; everything else is qualified.
    std::vector<bool> glued(raw.size(), false);
    for (std::size_t i = 0; i + 1 < k; ++i) glued[out.operand_maps[i][tops[i]]] = true;
    for (std::size_t j = 0; j < raw.size(); ++j)
      if (!glued[j]) labels[j] = std::to_string(owner[j] + 1) + "." + raw[j];
    seen.clear();
    bool still = false;
    for (const auto& l : labels) still |= !seen.insert(l).second;
    if (still)
      for (std::size_t j = 0; j < raw.size(); ++j) labels[j] = std::to_string(owner[j] + 1) + "." + raw[j];
  }

  const std::size_t n = labels.size();
  check_size_cap(n, "ordinal sum");
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < k; ++i) {
    const Poset& p = operands[i];
    const auto& m = out.operand_maps[i];
    for (Element x = 0; x < p.size(); ++x)
      p.up(x).for_each([&](std::size_t y) { up[m[x]].set(m[y]); });
  }
  // Everything in operand i lies below everything in later operands.
  for (std::size_t i = 0; i < k; ++i)
    for (Element x = 0; x < operands[i].size(); ++x)
      for (std::size_t j = i + 1; j < k; ++j)
        for (Element y = 0; y < operands[j].size(); ++y) up[out.operand_maps[i][x]].set(out.operand_maps[j][y]);
  out.poset = Poset::from_up_sets(std::move(labels), std::move(up));
  return out;
}

Poset ordinal_sum2(const Poset& a1, const Poset& a2) { return ordinal_sum({a1, a2}).poset; }

Poset ordinal_sum3(const Poset& a1, const Poset& a2, const Poset& a3) { return ordinal_sum({a1, a2, a3}).poset; }

// --- products -----------------------------------------------------------------

namespace {

std::vector<Element> decode(std::size_t index, const std::vector<std::size_t>& radix) {
  std::vector<Element> c(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    c[i] = index % radix[i];
    index /= radix[i];
  }
  return c;
}

std::size_t encode(const std::vector<Element>& coords, const std::vector<std::size_t>& radix) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) index = index * radix[i] + coords[i];
  return index;
}

}  // namespace

Poset direct_product(const std::vector<Poset>& factors) {
  if (factors.empty()) fail(ErrorCode::InvalidArgument, "product needs at least one factor");
  std::vector<std::size_t> radix;
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (f.empty()) fail(ErrorCode::InvalidArgument, "product factor is empty");
    radix.push_back(f.size());
    n *= f.size();
    check_size_cap(n, "direct product");
  }
  std::vector<std::vector<Element>> coords(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    coords[i] = decode(i, radix);
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < factors.size(); ++k) parts.push_back(factors[k].label(coords[i][k]));
    labels[i] = factors.size() == 1 ? parts[0] : tuple_label(parts);
  }
  return Poset::from_relation(std::move(labels), [&](Element i, Element j) {
    for (std::size_t k = 0; k < factors.size(); ++k)
      if (!factors[k].leq(coords[i][k], coords[j][k])) return false;
    return true;
  });
}

InvolutivePoset direct_product(const std::vector<InvolutivePoset>& factors) {
  std::vector<Poset> plain;
  std::vector<std::size_t> radix;
  for (const auto& f : factors) {
    plain.push_back(f.poset());
    radix.push_back(f.size());
  }
  Poset p = direct_product(plain);
  std::vector<Element> inv(p.size());
  for (Element i = 0; i < p.size(); ++i) {
    auto c = decode(i, radix);
    for (std::size_t k = 0; k < factors.size(); ++k) c[k] = factors[k].inv(c[k]);
    inv[i] = encode(c, radix);
  }
  return InvolutivePoset(std::move(p), std::move(inv));
}

ProductFactorization product_factorization(const Poset& a1, const Subset& s1, const Poset& a2, const Subset& s2) {
  const Poset a = direct_product({a1, a2});
  const std::size_t n2 = a2.size();
  Subset s(a.size());
  s1.for_each([&](std::size_t x) { s2.for_each([&](std::size_t y) { s.set(x * n2 + y); }); });

  const auto joint_pairs = ps_pairs(a, s);
  InvolutivePoset joint = ps_construct(a, s);
  const auto p1 = ps_pairs(a1, s1);
  const auto p2 = ps_pairs(a2, s2);
  InvolutivePoset factors = direct_product({ps_construct(a1, s1), ps_construct(a2, s2)});

  std::vector<Element> f(joint.size());
  for (Element i = 0; i < joint_pairs.size(); ++i) {
    auto [x, y] = joint_pairs[i];
    auto i1 = pair_index(p1, x / n2, y / n2);
    auto i2 = pair_index(p2, x % n2, y % n2);
    if (!i1 || !i2) fail(ErrorCode::Internal, "shuffled pair missing from a factor");
    f[i] = *i1 * p2.size() + *i2;
  }
  PosetMap shuffle(joint, factors, std::move(f));
  const bool ok = shuffle.verify({MapProperty::Isomorphism, MapProperty::InvolutionPreserving});
  return ProductFactorization{std::move(joint), std::move(factors), std::move(shuffle), ok};
}

// --- embeddings -----------------------------------------------------------------

Th3Certificate th3_embedding(const Poset& p, Element a, Element b, const InvolutivePoset& ortho) {
  if (a >= p.size() || b >= p.size()) fail(ErrorCode::UnknownElement, "a or b is not an element");
  if (!p.leq(a, b)) fail(ErrorCode::NotComparable, "a <= b is required");
  if (!is_distributive(p)) fail(ErrorCode::NotDistributive, "the poset is not distributive");
  const Poset iv = interval(p, a, b);
  if (!ortho.poset().identical_to(iv))
    fail(ErrorCode::InvalidArgument, "orthocomplementation must be given on the interval [a,b]");
  if (!is_orthocomplementation(ortho)) fail(ErrorCode::NotOrtho, "the involution on [a,b] is not an orthocomplementation");

  const Subset la = p.down(a);
  const Subset lb = p.down(b);
  for (Element x = 0; x < p.size(); ++x) {
    Subset ux_a = p.up(x) & p.up(a);
    ux_a.set(b);  // the set U(x,a) ∪ {b}
    const Subset m = lower_bounds(p, ux_a);
    if (la.is_proper_subset_of(m) && m.is_proper_subset_of(lb) && m != p.down(x))
      fail(ErrorCode::HypothesisFailed, "hypothesis fails at x = '" + p.label(x) + "'");
  }

  Subset ideal(p.size()), filter(p.size());
  const Subset ub = p.up(b);
  for (Element x = 0; x < p.size(); ++x) {
    if ((p.down(x) & lb).is_subset_of(la)) ideal.set(x);
    if ((p.up(x) & p.up(a)).is_subset_of(ub)) filter.set(x);
  }

  Subset s = p.subset_of({a, b});
  const auto pairs = ps_pairs(p, s);
  InvolutivePoset target = ps_construct(p, s);

  // Element of [a,b] in `p` -> its complement in `p`.
  const Subset between = interval_subset(p, a, b);
  std::vector<Element> comp(p.size(), a);
  between.for_each([&](std::size_t x) {
    comp[x] = p.index_of(ortho.poset().label(ortho.inv(ortho.poset().index_of(p.label(x)))));
  });

  std::vector<Element> f(p.size());
  const bool degenerate = ideal.intersects(filter);
  for (Element x = 0; x < p.size(); ++x) {
    ElementPair want;
    if (degenerate)
      want = {x, a};
    else if (ideal.test(x))
      want = {x, b};
    else if (filter.test(x))
      want = {x, a};
    else if (between.test(x))
      want = {x, comp[x]};
    else
      fail(ErrorCode::HypothesisFailed, "'" + p.label(x) + "' lies outside I, F and [a,b]");
    auto idx = pair_index(pairs, want.first, want.second);
    if (!idx) fail(ErrorCode::HypothesisFailed, "f('" + p.label(x) + "') is not in P_{a,b}(A)");
    f[x] = *idx;
  }
  PosetMap map(p, target.poset(), std::move(f));
  const bool ok = map.verify({MapProperty::OrderPreserving, MapProperty::OrderReflecting, MapProperty::LuluMorphism,
                              MapProperty::LuluEmbedding});
  return Th3Certificate{ideal,
                        filter,
                        is_frink_ideal(p, ideal),
                        is_frink_filter(p, filter),
                        std::move(target),
                        std::move(map),
                        ok,
                        is_boolean_poset(iv)};
}

namespace {

// Boolean complement on a Boolean poset, as a permutation.
std::vector<Element> boolean_complement(const Poset& b) {
  std::vector<Element> c(b.size());
  for (Element x = 0; x < b.size(); ++x) {
    Subset cs = complements_of(b, x);
    if (cs.count() != 1) fail(ErrorCode::PreconditionFailed, "B is not Boolean: complement of '" + b.label(x) + "'");
    c[x] = cs.first();
  }
  return c;
}

}  // namespace

Prop2Result prop2_decompose(const Poset& a1, const Poset& b, const Poset& a2) {
  auto need = [](bool cond, const std::string& clause) {
    if (!cond) fail(ErrorCode::PreconditionFailed, clause);
  };
  need(!a1.empty() && !b.empty() && !a2.empty(), "operands must be non-empty");
  need(a1.top().has_value(), "A1 has a top element a");
  need(a2.bottom().has_value(), "A2 has a bottom element b");
  need(b.top().has_value() && b.bottom().has_value(), "B is bounded");
  need(is_distributive(a1), "A1 is distributive");
  need(is_distributive(a2), "A2 is distributive");
  need(is_boolean_poset(b), "B is Boolean");
  const std::vector<Element> b_comp = boolean_complement(b);
  need(is_orthocomplementation(InvolutivePoset(b, b_comp)), "B complementation is an orthocomplementation");
  const bool trivial_b = b.size() == 1;
  if (trivial_b) {
    need(is_join_irreducible(a1, *a1.top()) && is_meet_irreducible(a2, *a2.bottom()),
         "a != b or a is join-irreducible in A1 and meet-irreducible in A2");
  }

  OrdinalSum glued = ordinal_sum({a1, b, a2});
  const Poset& g = glued.poset;
  const auto& m1 = glued.operand_maps[0];
  const auto& mb = glued.operand_maps[1];
  const auto& m2 = glued.operand_maps[2];
  const Element a = m1[*a1.top()];
  const Element bb = m2[*a2.bottom()];
  Subset in1(g.size()), inb(g.size()), in2(g.size());
  for (Element x : m1) in1.set(x);
  for (Element x : mb) inb.set(x);
  for (Element x : m2) in2.set(x);
  std::vector<Element> comp(g.size(), a);
  for (Element x = 0; x < b.size(); ++x) comp[mb[x]] = mb[b_comp[x]];

  const Subset s = g.subset_of({a, bb});
  const auto pairs = ps_pairs(g, s);
  auto member = [&](Element x, Element y) { return pair_index(pairs, x, y).has_value(); };

  // The four membership facts behind the decomposition.
  inb.for_each([&](std::size_t x) {
    if (x == a || x == bb) return;
    for (Element y = 0; y < g.size(); ++y)
      if (member(x, y) && y != comp[x])
        fail(ErrorCode::PreconditionFailed, "fact 1 fails: (" + g.label(x) + "," + g.label(y) + ") in P_ab");
  });
  for (auto [x, y] : pairs) {
    if (in1.test(x) && !in2.test(x) && !in2.test(y)) fail(ErrorCode::PreconditionFailed, "fact 2 fails at '" + g.label(x) + "'");
    if (in2.test(x) && !in1.test(x) && !in1.test(y)) fail(ErrorCode::PreconditionFailed, "fact 3 fails at '" + g.label(x) + "'");
  }
  in1.for_each([&](std::size_t x) {
    in2.for_each([&](std::size_t y) {
      if (!member(x, y) || !member(y, x)) fail(ErrorCode::PreconditionFailed, "fact 4 fails on A1 x A2");
    });
  });
  inb.for_each([&](std::size_t x) {
    if (!member(x, comp[x])) fail(ErrorCode::PreconditionFailed, "fact 4 fails on B");
  });

  InvolutivePoset lhs = ps_construct(g, s);

  // Right-hand side with its involution (x,y) <-> (y,x), complement on B.
  const Poset low = direct_product({a1, dual(a2)});
  const Poset high = direct_product({a2, dual(a1)});
  OrdinalSum rsum = ordinal_sum({low, b, high});
  const std::size_t n1 = a1.size(), n2 = a2.size();
  std::vector<Element> rinv(rsum.poset.size());
  for (Element x = 0; x < n1; ++x)
    for (Element y = 0; y < n2; ++y) {
      const Element lo = rsum.operand_maps[0][x * n2 + y];
      const Element hi = rsum.operand_maps[2][y * n1 + x];
      rinv[lo] = hi;
      rinv[hi] = lo;
    }
  for (Element x = 0; x < b.size(); ++x) rinv[rsum.operand_maps[1][x]] = rsum.operand_maps[1][b_comp[x]];
  InvolutivePoset rhs(rsum.poset, std::move(rinv));

  auto iso = find_isomorphism(lhs, rhs, true);
  const bool kleene = lhs.classification().kleene;

  std::optional<bool> convex;
  if (!trivial_b) {
    std::vector<Element> f(g.size());
    for (Element x = 0; x < g.size(); ++x) {
      ElementPair want = g.leq(x, a) ? ElementPair{x, bb} : g.leq(bb, x) ? ElementPair{x, a} : ElementPair{x, comp[x]};
      f[x] = *pair_index(pairs, want.first, want.second);
    }
    PosetMap piecewise(g, lhs.poset(), f);
    bool ok = piecewise.verify({MapProperty::OrderPreserving, MapProperty::OrderReflecting}) &&
              is_convex(lhs.poset(), piecewise.image(g.full_subset()));
    InvolutivePoset iv_ortho(interval(g, a, bb), [&] {
      const Poset iv = interval(g, a, bb);
      std::vector<Element> c(iv.size());
      for (Element i = 0; i < iv.size(); ++i) c[i] = iv.index_of(g.label(comp[g.index_of(iv.label(i))]));
      return c;
    }());
    Th3Certificate cert = th3_embedding(g, a, bb, iv_ortho);
    ok = ok && cert.embedding_verified && cert.embedding.assignment() == f;
    convex = ok;
  }

  return Prop2Result{g, std::move(lhs), std::move(rhs), std::move(iso), kleene, convex};
}

ChainRepresentation chain_representation(const InvolutivePoset& chain, Element a) {
  const Poset& c = chain.poset();
  if (c.empty()) fail(ErrorCode::NotChain, "empty chain");
  for (Element x = 0; x < c.size(); ++x)
    for (Element y = x + 1; y < c.size(); ++y)
      if (!c.comparable(x, y)) fail(ErrorCode::NotChain, "'" + c.label(x) + "' and '" + c.label(y) + "' are incomparable");
  if (a >= c.size()) fail(ErrorCode::UnknownElement, "a is not an element");
  const Element ap = chain.inv(a);
  if (!c.leq(a, ap)) fail(ErrorCode::GapConditionFailed, "a <= a' is required");
  if (interval_subset(c, a, ap).count() > (a == ap ? 1U : 2U))
    fail(ErrorCode::GapConditionFailed, "[a,a'] contains elements other than a and a'");

  const Element top = *c.top();
  const Poset base = interval(c, a, top);
  const Element ba = base.index_of(c.label(a));
  const Element bap = base.index_of(c.label(ap));
  const Subset s = base.subset_of({ba, bap});
  const auto pairs = ps_pairs(base, s);
  InvolutivePoset target = ps_construct(base, s);

  std::vector<Element> g(c.size());
  for (Element x = 0; x < c.size(); ++x) {
    ElementPair want = c.leq(x, a) ? ElementPair{ba, base.index_of(c.label(chain.inv(x)))}
                                   : ElementPair{base.index_of(c.label(x)), ba};
    auto idx = pair_index(pairs, want.first, want.second);
    if (!idx) fail(ErrorCode::Internal, "g(x) is not in P_S([a,1])");
    g[x] = *idx;
  }
  PosetMap map(chain, target, std::move(g));
  const bool ok = map.verify({MapProperty::Isomorphism, MapProperty::InvolutionPreserving});
  return ChainRepresentation{base, s, std::move(target), std::move(map), ok};
}

}  // namespace kleene
