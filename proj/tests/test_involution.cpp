#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kleene/representability.hpp"
#include "support.hpp"

using namespace kleene;
using namespace ktest;

namespace {

const InvolutivePoset& a7k() { return *named("a7.poset", "A7").involutive; }
const InvolutivePoset& k1() { return *named("chains.poset", "K1").involutive; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

InvolutivePoset diamond_k() { return attach_involution(diamond(), {{"b", "c"}, {"u", "v"}}); }

InvolutivePoset chain3_fixed() {
  return attach_involution(build_poset({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}), {{"0", "1"}, {"m", "m"}});
}

InvolutivePoset double_antichain() {
  Poset p = build_poset({"x", "y", "z", "w"}, {{"x", "z"}, {"x", "w"}, {"y", "z"}, {"y", "w"}});
  return attach_involution(p, {{"x", "z"}, {"y", "w"}});
}

// Every antitone involution by trying all permutations.
std::vector<std::vector<Element>> naive_involutions(const Poset& p) {
  const Rel r = relation(p);
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    bool ok = true;
    for (Element x = 0; x < p.size() && ok; ++x) {
      if (perm[perm[x]] != x) ok = false;
      for (Element y = 0; y < p.size() && ok; ++y)
        if (r[x][y] && !r[perm[y]][perm[x]]) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("attach_involution validates") {
  const InvolutivePoset& k = a7k();
  CHECK(k.poset().label(k.inv(k.poset().index_of("a"))) == "d");
  CHECK(k.poset().label(k.inv(k.poset().index_of("b"))) == "c");

  Poset anti = antichain(2);
  CHECK_NOTHROW(attach_involution(anti, {{"x0", "x0"}, {"x1", "x1"}}));
  CHECK(code_of([] { attach_involution(chain(2), {{"c0", "c0"}, {"c1", "c1"}}); }) == ErrorCode::NotAntitone);
  CHECK(code_of([] { InvolutivePoset(antichain(3), {1, 2, 0}); }) == ErrorCode::NotInvolutive);
}

TEST_CASE("normality and Zhu on the named fixtures") {
  CHECK(normality_holds(a7k()));
  CHECK(zhu_holds(a7k()));
  CHECK(normality_holds(diamond_k()));
  CHECK(zhu_holds(diamond_k()));
  InvolutivePoset da = double_antichain();
  const bool expect = naive_normality(relation(da.poset()), da.involution());
  CHECK(normality_holds(da) == expect);
  CHECK(zhu_holds(da) == expect);
  CHECK(naive_zhu(relation(da.poset()), da.involution()) == expect);
  InvolutivePoset one(build_poset({"x"}, {}), {0});
  CHECK(zhu_holds(one));
  CHECK(normality_holds(one));
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(a7k()).none());
  InvolutivePoset c3 = chain3_fixed();
  CHECK(fixed_points(c3) == c3.poset().subset_of_labels({"m"}));
  CHECK(fixed_points(k1()).none());
}

TEST_CASE("classification") {
  const Classification& c = a7k().classification();
  CHECK(c.distributive);
  CHECK(c.pseudo_kleene);
  CHECK(c.kleene);
  CHECK_FALSE(c.lattice);
  CHECK_FALSE(c.boolean);
  CHECK(k1().classification().kleene);
  CHECK(k1().classification().lattice);

  for (const auto& inv : all_antitone_involutions(m3())) {
    Classification m = classify(InvolutivePoset(m3(), inv));
    CHECK_FALSE(m.kleene);
  }
  CHECK(classify(diamond_k()).boolean);
  CHECK(classify(diamond_k()).ortho);
}

TEST_CASE("orthocomplementation") {
  CHECK(is_orthocomplementation(diamond_k()));
  CHECK_FALSE(is_orthocomplementation(chain3_fixed()));
  CHECK_FALSE(is_orthocomplementation(a7k()));
  CHECK(code_of([] { is_orthocomplementation(double_antichain()); }) == ErrorCode::NotBounded);
}

TEST_CASE("all_antitone_involutions matches the permutation oracle") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) CHECK(all_antitone_involutions(p) == naive_involutions(p));
}

TEST_CASE("predicates agree with the oracles on random involutive posets") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int round = 0; round < 4000 && checked < 600; ++round) {
    Poset p = random_poset(rng, 2 + rng() % 9, 0.4);
    auto invs = all_antitone_involutions(p);
    if (invs.empty()) continue;
    InvolutivePoset k(p, invs[rng() % invs.size()]);
    const Rel r = relation(p);
    const bool norm = naive_normality(r, k.involution());
    CHECK(normality_holds(k) == norm);
    CHECK(zhu_holds(k) == norm);
    CHECK(naive_zhu(r, k.involution()) == norm);
    const Classification& c = k.classification();
    CHECK(c.pseudo_kleene == norm);
    CHECK(c.distributive == naive_distributive(r));
    CHECK(c.kleene == (c.distributive && c.pseudo_kleene));
    if (norm) CHECK(c.fixed_points.count() <= 1);
    if (c.ortho) CHECK(c.pseudo_kleene);
    ++checked;
  }
  CHECK(checked >= 500);
}
