#include <doctest.h>

#include "kleene/constructions.hpp"
#include "kleene/representability.hpp"
#include "support.hpp"

using namespace kleene;
using namespace ktest;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

const InvolutivePoset& inv_fixture(const std::string& file, const std::string& name) {
  return *named(file, name).involutive;
}

InvolutivePoset chain3_fixed() {
  return attach_involution(build_poset({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}), {{"0", "1"}, {"m", "m"}});
}

// The witness re-verifies independently of the search.
void check_witness(const InvolutivePoset& k, const RepresentationResult& r) {
  REQUIRE(r.verdict == Verdict::Representable);
  REQUIRE(r.witness);
  const Witness& w = *r.witness;
  InvolutivePoset p = ps_construct(w.carrier, w.s);
  CHECK(naive_isomorphic(relation(k.poset()), relation(p.poset()), &k.involution(), &p.involution()));
  CHECK(verify_representation(k, w.carrier, w.s));
  for (Element x = 0; x < k.size(); ++x) CHECK(w.iso(k.inv(x)) == p.inv(w.iso(x)));
}

// Odd-case oracle: every abstract A up to (|K|+1)/2 elements and every point.
bool brute_force_odd(const InvolutivePoset& k) {
  const Rel kr = relation(k.poset());
  for (std::size_t m = 1; 2 * m <= k.size() + 1; ++m)
    for (const Poset& a : enumerate_posets(m))
      for (Element x = 0; x < m; ++x) {
        InvolutivePoset p = ps_construct(a, a.subset_of({x}));
        if (p.size() != k.size()) continue;
        if (naive_isomorphic(kr, relation(p.poset()), &k.involution(), &p.involution())) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("verify_representation") {
  const InvolutivePoset& k1 = inv_fixture("chains.poset", "K1");
  const NamedPoset& l1 = named("chains.poset", "L1");
  CHECK(verify_representation(k1, l1.poset, *l1.find_set("S1")));
  const InvolutivePoset& k2 = inv_fixture("chains.poset", "K2");
  const NamedPoset& l2 = named("chains.poset", "L2");
  CHECK(verify_representation(k2, l2.poset, *l2.find_set("S2")));
  CHECK_FALSE(verify_representation(k1, l1.poset, l1.poset.subset_of_labels({"a"})));
  CHECK(code_of([&] { verify_representation(k1, l1.poset, l1.poset.empty_subset()); }) == ErrorCode::EmptySubset);
}

TEST_CASE("the non-representable family") {
  InvolutivePoset t2 = make_th1_poset(2);
  InvolutivePoset t3 = make_th1_poset(3);
  CHECK(t2.size() == 9);
  CHECK(t3.size() == 11);
  CHECK(t2.classification().kleene);
  CHECK(t3.classification().kleene);
  CHECK(fixed_points(t2) == t2.poset().subset_of_labels({"c"}));
  CHECK(fixed_points(t3) == t3.poset().subset_of_labels({"c"}));
  CHECK(code_of([] { make_th1_poset(1); }) == ErrorCode::BadLength);
  // Fixture file holds the same posets.
  CHECK(t2.poset().identical_to(named("nonrep.poset", "NONREP_2").poset));
  CHECK(t3.poset().identical_to(named("nonrep.poset", "NONREP_3").poset));
}

TEST_CASE("odd-complete search") {
  InvolutivePoset c3 = chain3_fixed();
  RepresentationResult r = search_odd(c3);
  check_witness(c3, r);
  CHECK(r.witness->carrier.size() == 2);
  CHECK(r.witness->s.count() == 1);
  CHECK(r.witness->carrier.label(r.witness->s.first()) == "m");

  RepresentationResult t2 = search_odd(make_th1_poset(2));
  CHECK(t2.verdict == Verdict::NotRepresentable);
  CHECK(t2.candidates <= 163);
  CHECK(t2.candidates == 163);
  CHECK(t2.max_carrier_size == 5);
  CHECK(search_odd(make_th1_poset(3)).verdict == Verdict::NotRepresentable);
  CHECK(search_odd(make_th1_poset(2), 1, false).verdict == Verdict::NotRepresentable);

  InvolutivePoset one(build_poset({"x"}, {}), {0});
  check_witness(one, search_odd(one));

  CHECK(code_of([] { search_odd(*named("chains.poset", "K1").involutive); }) == ErrorCode::EvenCardinality);
}

TEST_CASE("odd-complete search matches the abstract brute force") {
  std::size_t seen = 0, representable = 0;
  for (std::size_t n = 1; n <= 7; n += 2)
    for (const Poset& p : enumerate_posets(n))
      for (const auto& inv : all_antitone_involutions(p)) {
        InvolutivePoset k(p, inv);
        if (!k.classification().pseudo_kleene) continue;
        ++seen;
        RepresentationResult r = search_odd(k);
        const bool expect = brute_force_odd(k);
        CHECK(expect == (r.verdict == Verdict::Representable));
        if (r.verdict == Verdict::Representable) {
          ++representable;
          check_witness(k, r);
        } else {
          CHECK(r.verdict == Verdict::NotRepresentable);
        }
      }
  // Size 9: every P_a(A) with |A| = 5, plus the non-representable one.
  for (const Poset& a : enumerate_posets(5))
    for (Element x = 0; x < 5; ++x) {
      InvolutivePoset k = ps_construct(a, a.subset_of({x}));
      if (k.size() != 9) continue;
      ++seen;
      CHECK(search_odd(k).verdict == Verdict::Representable);
    }
  CHECK_FALSE(brute_force_odd(make_th1_poset(2)));
  CHECK(seen > 50);
  CHECK(representable > 10);
}

TEST_CASE("bounded search on the representable fixtures") {
  SearchConfig cfg;
  const InvolutivePoset& k1 = inv_fixture("chains.poset", "K1");
  RepresentationResult r1 = search_general(k1, cfg);
  check_witness(k1, r1);
  CHECK(r1.witness->s.count() >= 2);

  for (const char* name : {"K3", "Ks", "K0"}) {
    const InvolutivePoset& k = inv_fixture("examples.poset", name);
    RepresentationResult r = search_general(k, cfg);
    CAPTURE(name);
    check_witness(k, r);
  }
  const InvolutivePoset& k2 = inv_fixture("chains.poset", "K2");
  check_witness(k2, search_general(k2, cfg));
}

TEST_CASE("exhaustive mode") {
  SearchConfig cfg;
  cfg.mode = SearchMode::Exhaustive;
  cfg.max_carrier_size = 5;
  const InvolutivePoset& k1 = inv_fixture("chains.poset", "K1");
  check_witness(k1, represent(k1, cfg));
  const InvolutivePoset& k0 = inv_fixture("examples.poset", "K0");
  check_witness(k0, represent(k0, cfg));

  cfg.max_carrier_size = 4;
  RepresentationResult t = represent(make_th1_poset(2), cfg);
  CHECK(t.verdict == Verdict::NotRepresentableWithinBounds);
  CHECK_FALSE(t.witness);

  cfg.max_carrier_size = 0;
  RepresentationResult big = represent(make_th1_poset(3), cfg);
  CHECK(big.max_carrier_size == kExhaustiveCarrierLimit);
  CHECK_FALSE(big.note.empty());
}

TEST_CASE("representable families") {
  SearchConfig cfg;
  // Chains with an involution.
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Element> inv(n);
    for (Element i = 0; i < n; ++i) inv[i] = n - 1 - i;
    InvolutivePoset c(chain(n), inv);
    check_witness(c, represent(c, cfg));
  }
  // P_ab(A1 + B + A2).
  Poset c2a = build_poset({"z", "a"}, {{"z", "a"}});
  Poset c2b = build_poset({"b", "t"}, {{"b", "t"}});
  Poset b = build_poset({"a", "u", "v", "b"}, {{"a", "u"}, {"a", "v"}, {"u", "b"}, {"v", "b"}});
  Prop2Result pr = prop2_decompose(c2a, b, c2b);
  check_witness(pr.rhs, represent(pr.rhs, cfg));
}

TEST_CASE("pruning and partitions never change results") {
  std::vector<InvolutivePoset> suite = {inv_fixture("chains.poset", "K1"),  inv_fixture("chains.poset", "K2"),
                                        inv_fixture("chains.poset", "C3"),  inv_fixture("examples.poset", "K0"),
                                        inv_fixture("examples.poset", "Ks"), inv_fixture("a7.poset", "A7"),
                                        make_th1_poset(2)};
  for (const auto& k : suite) {
    SearchConfig base;
    base.max_carrier_size = std::min<std::size_t>(k.size(), 7);
    RepresentationResult r1 = represent(k, base);
    SearchConfig par = base;
    par.partitions = 8;
    RepresentationResult r8 = represent(k, par);
    SearchConfig nop = base;
    nop.pruning = false;
    RepresentationResult rn = represent(k, nop);
    CHECK(r1.verdict == r8.verdict);
    CHECK(r1.verdict == rn.verdict);
    CHECK(r1.candidates == r8.candidates);
    if (r1.witness) {
      REQUIRE(r8.witness);
      CHECK(r1.witness->carrier.identical_to(r8.witness->carrier));
      CHECK(r1.witness->s == r8.witness->s);
      CHECK(r1.witness->iso.assignment() == r8.witness->iso.assignment());
    }
  }
}

TEST_CASE("the no-3-antichain filter") {
  const Poset& a7 = named("a7.poset", "A7").poset;
  CHECK_FALSE(prune_lemma3(a7, a7.index_of("a"), false));
  CHECK(prune_lemma3(a7, a7.index_of("a"), true));
  Poset c4 = chain(4);
  for (Element x = 0; x < 4; ++x) CHECK(prune_lemma3(c4, x, false));
  Poset d = diamond();
  CHECK_FALSE(prune_lemma3(d, d.index_of("c"), false));
}

TEST_CASE("poset enumeration") {
  const std::vector<std::size_t> counts = {1, 1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 1; n < counts.size(); ++n) {
    const auto& ps = enumerate_posets(n);
    CHECK_MESSAGE(ps.size() == counts[n], "n = " << n);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto& ps = enumerate_posets(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(naive_isomorphic(relation(ps[i]), relation(ps[j])));
  }
  CHECK(code_of([] { enumerate_posets(kExhaustiveCarrierLimit + 1); }) == ErrorCode::SizeLimit);
}
