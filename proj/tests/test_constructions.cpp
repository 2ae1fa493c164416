#include <doctest.h>

#include <map>
#include <set>

#include "kleene/constructions.hpp"
#include "kleene/morphisms.hpp"
#include "kleene/representability.hpp"
#include "support.hpp"

using namespace kleene;
using namespace ktest;

namespace {

const Poset& a7() { return named("a7.poset", "A7").poset; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

bool iso(const Poset& a, const Poset& b) { return a.size() == b.size() && naive_isomorphic(relation(a), relation(b)); }

bool iso(const InvolutivePoset& a, const InvolutivePoset& b) {
  return a.size() == b.size() &&
         naive_isomorphic(relation(a.poset()), relation(b.poset()), &a.involution(), &b.involution());
}

std::set<std::string> labels(const Poset& p) { return {p.labels().begin(), p.labels().end()}; }

// Label-level relation, for exact comparisons with listed orders.
std::set<std::pair<std::string, std::string>> strict_order(const Poset& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.less(x, y)) out.emplace(p.label(x), p.label(y));
  return out;
}

}  // namespace

TEST_CASE("twist product") {
  CHECK(iso(twist_product(chain(2)), diamond()));
  CHECK(twist_product(chain(1)).size() == 1);
  Poset t = twist_product(antichain(3));
  CHECK(t.size() == 9);
  CHECK(t.covers().empty());

  std::mt19937_64 rng(2);
  for (int round = 0; round < 50; ++round) {
    Poset p = random_poset(rng, 1 + rng() % 6);
    Poset tw = twist_product(p);
    const std::size_t n = p.size();
    for (Element i = 0; i < tw.size(); ++i)
      for (Element j = 0; j < tw.size(); ++j)
        CHECK(tw.leq(i, j) == (p.leq(i / n, j / n) && p.leq(j % n, i % n)));
  }

  const std::size_t before = size_cap();
  set_size_cap(8);
  CHECK(code_of([] { twist_product(chain(3)); }) == ErrorCode::SizeLimit);
  set_size_cap(before);
}

TEST_CASE("P_S(A7) for S = {a,b} is the listed eight-element poset") {
  const Poset& p = a7();
  InvolutivePoset k = ps_construct(p, p.subset_of_labels({"a", "b"}));
  CHECK(labels(k.poset()) ==
        std::set<std::string>{"(0,1)", "(0,c)", "(0,d)", "(a,b)", "(b,a)", "(c,0)", "(d,0)", "(1,0)"});
  // (0,1) < (0,c),(0,d) < (a,b),(b,a) < (c,0),(d,0) < (1,0), by the twisted order.
  std::set<std::pair<std::string, std::string>> expect;
  const std::vector<std::string> lv = {"(0,1)", "(0,c)", "(0,d)", "(a,b)", "(b,a)", "(c,0)", "(d,0)", "(1,0)"};
  auto parts = [](const std::string& l) {
    const auto comma = l.find(',');
    return std::pair{l.substr(1, comma - 1), l.substr(comma + 1, l.size() - comma - 2)};
  };
  for (const auto& x : lv)
    for (const auto& y : lv) {
      auto [x1, x2] = parts(x);
      auto [y1, y2] = parts(y);
      if (x != y && p.leq(p.index_of(x1), p.index_of(y1)) && p.leq(p.index_of(y2), p.index_of(x2)))
        expect.emplace(x, y);
    }
  CHECK(strict_order(k.poset()) == expect);
  CHECK(expect.count({"(0,1)", "(1,0)"}) == 1);
  CHECK(expect.count({"(a,b)", "(b,a)"}) == 0);
  CHECK(k.poset().label(k.inv(k.poset().index_of("(0,c)"))) == "(c,0)");
}

TEST_CASE("P_S on small fixtures") {
  Poset c2 = build_poset({"0", "1"}, {{"0", "1"}});
  InvolutivePoset k = ps_construct(c2, c2.full_subset());
  CHECK(k.size() == 2);
  CHECK(k.poset().leq(k.poset().index_of("(0,1)"), k.poset().index_of("(1,0)")));

  Poset one = build_poset({"a"}, {});
  InvolutivePoset s = ps_construct(one, one.full_subset());
  CHECK(s.size() == 1);
  CHECK(s.poset().label(0) == "(a,a)");
  CHECK(code_of([&] { ps_construct(one, one.empty_subset()); }) == ErrorCode::EmptySubset);
}

TEST_CASE("P_S(L1) with S1 realises K1 under the listed mapping") {
  const NamedPoset& l1 = named("chains.poset", "L1");
  const InvolutivePoset& k1 = *named("chains.poset", "K1").involutive;
  InvolutivePoset p = ps_construct(l1.poset, *l1.find_set("S1"));
  CHECK(p.size() == 6);
  const std::map<std::string, std::string> table = {{"1", "(1,b)"},     {"y'", "(b',b)"}, {"x", "(a,a')"},
                                                    {"x'", "(a',a)"},   {"0", "(b,1)"},   {"y", "(b,b')"}};
  std::vector<Element> f(k1.size());
  for (const auto& [from, to] : table) f[k1.poset().index_of(from)] = p.poset().index_of(to);
  PosetMap m(k1, p, f);
  CHECK(m.verify({MapProperty::OrderPreserving, MapProperty::OrderReflecting, MapProperty::InvolutionPreserving}));
  CHECK(is_bijective(m));
}

TEST_CASE("ps_pairs agrees with the oracle") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 7;
    Poset p = random_poset(rng, n);
    Subset s = random_nonempty_subset(rng, n);
    CHECK(ps_pairs(p, s) == naive_ps(relation(p), to_set(s)));
  }
}

TEST_CASE("S reductions") {
  const Poset& p = a7();
  PsReductions r = ps_reductions(p, p.subset_of_labels({"a", "b"}));
  CHECK(r.max_min == p.subset_of_labels({"a", "b"}));
  CHECK(r.all_equal);
  PsReductions r2 = ps_reductions(p, p.subset_of_labels({"0", "a", "c"}));
  CHECK(r2.max_min == p.subset_of_labels({"0", "c"}));
  CHECK(r2.all_equal);
  Poset c4 = chain(4);
  PsReductions r3 = ps_reductions(c4, c4.full_subset());
  CHECK(r3.max_min == c4.subset_of({0, 3}));
  REQUIRE(r3.bounds);
  CHECK(*r3.bounds == c4.subset_of({0, 3}));
}

TEST_CASE("embedding at a point") {
  Poset c2 = chain(2);
  PointEmbedding e = embed_at_point(c2, 0);
  CHECK(e.image_convex);
  CHECK(e.map.image(c2.full_subset()).count() == 2);
  CHECK(e.map.has(MapProperty::LuluEmbedding));
  CHECK(embed_at_point(chain(1), 0).target.size() == 1);
  const Poset& p = a7();
  PointEmbedding ea = embed_at_point(p, p.index_of("a"));
  const Subset img = ea.map.image(p.full_subset());
  CHECK(img.count() == 6);
  CHECK(ea.image_convex);
  // Convexity by brute force.
  const Rel r = relation(ea.target.poset());
  bool convex = true;
  for (Element x = 0; x < r.size(); ++x)
    for (Element y = 0; y < r.size(); ++y)
      for (Element z = 0; z < r.size(); ++z)
        if (img.test(x) && img.test(z) && r[x][y] && r[y][z] && !img.test(y)) convex = false;
  CHECK(convex);
  CHECK(ea.map.has(MapProperty::LuluEmbedding));
  CHECK(code_of([&] { embed_at_point(p, 99); }) == ErrorCode::UnknownElement);
}

TEST_CASE("ordinal sums") {
  CHECK(iso(ordinal_sum2(chain(2), chain(2)), chain(3)));
  Poset two = ordinal_sum2(diamond(), diamond());
  CHECK(two.size() == 7);
  CHECK(naive_distributive(relation(two)));
  CHECK(is_distributive(two));

  Poset c2 = chain(2);
  Poset th1 = ordinal_sum({c2, diamond(), diamond(), c2}).poset;
  CHECK(th1.size() == 9);
  CHECK(iso(th1, make_th1_poset(2).poset()));

  CHECK(code_of([] { ordinal_sum2(antichain(2), chain(2)); }) == ErrorCode::NoUniqueTop);
  CHECK(code_of([] { ordinal_sum2(chain(2), antichain(2)); }) == ErrorCode::NoUniqueBottom);

  OrdinalSum os = ordinal_sum({chain(2), chain(3)});
  CHECK(os.poset.size() == 4);
  CHECK(os.operand_maps[0][1] == os.operand_maps[1][0]);
}

TEST_CASE("direct products") {
  const InvolutivePoset& k1 = *named("chains.poset", "K1").involutive;
  const InvolutivePoset& k2 = *named("chains.poset", "K2").involutive;
  InvolutivePoset k = direct_product(std::vector<InvolutivePoset>{k1, k2});
  CHECK(k.size() == 12);
  CHECK(iso(k, *named("examples.poset", "K3").involutive));
  CHECK(iso(direct_product(std::vector<Poset>{a7(), chain(1)}), a7()));
  CHECK(iso(direct_product(std::vector<Poset>{chain(2), chain(2)}), diamond()));
  CHECK(is_distributive(direct_product(std::vector<Poset>{a7(), chain(3)})));
}

TEST_CASE("product factorization on the fixtures") {
  const NamedPoset& l1 = named("chains.poset", "L1");
  const NamedPoset& l2 = named("chains.poset", "L2");
  ProductFactorization f = product_factorization(l1.poset, *l1.find_set("S1"), l2.poset, *l2.find_set("S2"));
  CHECK(f.joint.size() == 12);
  CHECK(f.verified);
  CHECK(iso(f.joint, f.factors));
  CHECK(iso(f.joint, *named("examples.poset", "K3").involutive));
}

TEST_CASE("embedding into P_{a,b}") {
  // A1 +_a B +_b A2 with 2-chains and the diamond.
  Poset a1 = build_poset({"z", "a"}, {{"z", "a"}});
  Poset b = build_poset({"a", "u", "v", "b"}, {{"a", "u"}, {"a", "v"}, {"u", "b"}, {"v", "b"}});
  Poset a2 = build_poset({"b", "t"}, {{"b", "t"}});
  Poset g = ordinal_sum({a1, b, a2}).poset;
  Element ea = g.index_of("a"), eb = g.index_of("b");
  InvolutivePoset ortho = attach_involution(interval(g, ea, eb), {{"a", "b"}, {"u", "v"}});
  Th3Certificate c = th3_embedding(g, ea, eb, ortho);
  CHECK(c.embedding_verified);
  CHECK(c.ideal_is_frink);
  CHECK(c.filter_is_frink);
  CHECK(c.interval_boolean);
  CHECK(c.ideal_i == g.subset_of_labels({"z", "a"}));
  CHECK(c.filter_f == g.subset_of_labels({"b", "t"}));
  CHECK(c.target.poset().label(c.embedding(g.index_of("u"))) == "(u,v)");

  // a = b: I = F = A and f(x) = (x,a).
  const Poset& p = a7();
  Element x = p.index_of("a");
  Th3Certificate d = th3_embedding(p, x, x, InvolutivePoset(interval(p, x, x), {0}));
  CHECK(d.ideal_i == p.full_subset());
  CHECK(d.filter_f == p.full_subset());
  PointEmbedding pe = embed_at_point(p, x);
  for (Element y = 0; y < p.size(); ++y)
    CHECK(d.target.poset().label(d.embedding(y)) == pe.target.poset().label(pe.map(y)));

  CHECK(code_of([] {
          Poset m = m3();
          th3_embedding(m, 0, 0, InvolutivePoset(interval(m, 0, 0), {0}));
        }) == ErrorCode::NotDistributive);
  CHECK(code_of([&] { th3_embedding(g, ea, eb, InvolutivePoset(interval(g, ea, eb), {3, 1, 2, 0})); }) ==
        ErrorCode::NotOrtho);
}

TEST_CASE("embedding into P_{a,b}: hypothesis failures exist and valid instances verify") {
  std::size_t failures = 0, certified = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      if (!is_distributive(p)) continue;
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
          if (a == b || !p.leq(a, b)) continue;
          Poset iv = interval(p, a, b);
          for (const auto& inv : all_antitone_involutions(iv)) {
            InvolutivePoset ortho(iv, inv);
            if (!is_orthocomplementation(ortho)) continue;
            try {
              Th3Certificate c = th3_embedding(p, a, b, ortho);
              CHECK(c.embedding_verified);
              CHECK(c.ideal_is_frink);
              CHECK(c.filter_is_frink);
              CHECK(c.interval_boolean);
              ++certified;
            } catch (const Error& e) {
              CHECK(e.code() == ErrorCode::HypothesisFailed);
              ++failures;
            }
          }
        }
    }
  CHECK(failures > 0);
  CHECK(certified > 0);
}

TEST_CASE("decomposition of P_{ab} over A1 + B + A2") {
  Poset c2a = build_poset({"z", "a"}, {{"z", "a"}});
  Poset c2b = build_poset({"b", "t"}, {{"b", "t"}});
  Poset b = build_poset({"a", "u", "v", "b"}, {{"a", "u"}, {"a", "v"}, {"u", "b"}, {"v", "b"}});
  Prop2Result r = prop2_decompose(c2a, b, c2b);
  const Rel gr = relation(r.glued);
  Set s(r.glued.size());
  s[r.glued.index_of("a")] = s[r.glued.index_of("b")] = true;
  // 2*2 + 4 + 2*2 with the two glue points shared.
  CHECK(naive_ps(gr, s).size() == 10);
  CHECK(r.lhs.size() == 10);
  CHECK(r.rhs.size() == 10);
  REQUIRE(r.iso);
  CHECK(iso(r.lhs, r.rhs));
  CHECK(r.lhs_kleene);
  REQUIRE(r.piecewise_map_convex);
  CHECK(*r.piecewise_map_convex);

  // B trivial: (A1 x A2^d) + (A2 x A1^d).
  Poset one = build_poset({"a"}, {});
  Poset c2c = build_poset({"a", "t"}, {{"a", "t"}});
  Prop2Result t = prop2_decompose(c2a, one, c2c);
  CHECK(t.lhs.size() == 7);
  CHECK(t.iso);
  CHECK_FALSE(t.piecewise_map_convex);

  // A2 trivial: A1 + B + A1^d.
  Poset tb = build_poset({"b"}, {});
  Prop2Result u = prop2_decompose(c2a, b, tb);
  CHECK(u.iso);
  CHECK(iso(u.rhs.poset(), ordinal_sum({c2a, b, dual(c2a)}).poset));

  // The side condition when B is trivial.
  Poset v = build_poset({"p", "q", "a"}, {{"p", "a"}, {"q", "a"}});
  try {
    prop2_decompose(v, one, c2c);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
    CHECK(std::string(e.what()).find("join-irreducible") != std::string::npos);
  }
  CHECK(code_of([&] { prop2_decompose(c2a, chain(3), c2b); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("chain representations") {
  InvolutivePoset c3 = attach_involution(build_poset({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}),
                                         {{"0", "1"}, {"m", "m"}});
  ChainRepresentation r = chain_representation(c3, 1);
  CHECK(r.verified);
  CHECK(r.base.size() == 2);
  CHECK(r.target.size() == 3);
  CHECK(labels(r.target.poset()) == std::set<std::string>{"(m,1)", "(m,m)", "(1,m)"});

  InvolutivePoset c4 = attach_involution(build_poset({"0", "p", "q", "1"}, {{"0", "p"}, {"p", "q"}, {"q", "1"}}),
                                         {{"0", "1"}, {"p", "q"}});
  ChainRepresentation r4 = chain_representation(c4, 1);
  CHECK(r4.verified);
  const Poset& t = r4.target.poset();
  CHECK(labels(t) == std::set<std::string>{"(p,1)", "(p,q)", "(q,p)", "(1,p)"});
  CHECK(t.less(t.index_of("(p,1)"), t.index_of("(p,q)")));
  CHECK(t.less(t.index_of("(p,q)"), t.index_of("(q,p)")));
  CHECK(t.less(t.index_of("(q,p)"), t.index_of("(1,p)")));

  const InvolutivePoset& k2 = *named("chains.poset", "K2").involutive;
  ChainRepresentation r2 = chain_representation(k2, 0);
  CHECK(r2.verified);
  CHECK(r2.target.size() == 2);

  CHECK(code_of([&] { chain_representation(c4, 0); }) == ErrorCode::GapConditionFailed);
  CHECK(code_of([&] { chain_representation(c4, 2); }) == ErrorCode::GapConditionFailed);
  CHECK(code_of([] {
          chain_representation(InvolutivePoset(antichain(2), {0, 1}), 0);
        }) == ErrorCode::NotChain);
}

TEST_CASE("chain representations hold for every valid point of chains up to length 9") {
  for (std::size_t n = 1; n <= 9; ++n) {
    Poset c = chain(n);
    std::vector<Element> inv(n);
    for (Element i = 0; i < n; ++i) inv[i] = n - 1 - i;
    InvolutivePoset k(c, inv);
    // Valid a: a <= a' with nothing strictly between.
    for (Element a = 0; a < n; ++a) {
      const bool valid = a <= inv[a] && inv[a] - a <= 1;
      if (valid) {
        ChainRepresentation r = chain_representation(k, a);
        CHECK(r.verified);
        CHECK(iso(r.target, k));
      } else {
        CHECK(code_of([&] { chain_representation(k, a); }) == ErrorCode::GapConditionFailed);
      }
    }
  }
}
