#pragma once

// Shared fixtures and brute-force oracles. The oracles work on plain boolean
// matrices and never call the library's L/U calculus.

#include <algorithm>
#include <functional>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "kleene/format.hpp"
#include "kleene/involution.hpp"
#include "kleene/poset.hpp"

namespace ktest {

using kleene::Element;
using kleene::InvolutivePoset;
using kleene::Poset;
using kleene::Subset;

using Rel = std::vector<std::vector<bool>>;
using Set = std::vector<bool>;

inline std::string fixture_path(const std::string& name) { return std::string(KLEENE_FIXTURE_DIR) + "/" + name; }

inline const kleene::PosetDocument& fixture(const std::string& file) {
  static std::vector<std::pair<std::string, kleene::PosetDocument>> cache;
  for (const auto& [f, d] : cache)
    if (f == file) return d;
  cache.emplace_back(file, kleene::load_document(fixture_path(file)));
  return cache.back().second;
}

inline const kleene::NamedPoset& named(const std::string& file, const std::string& name) {
  return fixture(file).get(name);
}

inline Poset chain(std::size_t n, const std::string& prefix = "c") {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    if (i) gens.emplace_back(i - 1, i);
  }
  return Poset::from_generators(labels, gens);
}

inline Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return Poset::from_generators(labels, {});
}

inline Poset diamond() { return kleene::build_poset({"b", "u", "v", "c"}, {{"b", "u"}, {"b", "v"}, {"u", "c"}, {"v", "c"}}); }

inline Poset m3() {
  return kleene::build_poset({"0", "p", "q", "r", "1"},
                             {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
}

inline Poset n5() {
  return kleene::build_poset({"0", "p", "q", "r", "1"}, {{"0", "p"}, {"p", "q"}, {"q", "1"}, {"0", "r"}, {"r", "1"}});
}

inline Rel relation(const Poset& p) {
  Rel r(p.size(), std::vector<bool>(p.size()));
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) r[x][y] = p.leq(x, y);
  return r;
}

inline Set to_set(const Subset& s) {
  Set out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.test(i);
  return out;
}

inline Subset to_subset(const Set& s) {
  Subset out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.set(i);
  return out;
}

inline Set bits(std::size_t n, unsigned long long mask) {
  Set s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1U;
  return s;
}

inline Rel warshall(Rel r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

inline Set naive_lower(const Rel& r, const Set& b) {
  const std::size_t n = r.size();
  Set out(n, true);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (b[y] && !r[x][y]) out[x] = false;
  return out;
}

inline Set naive_upper(const Rel& r, const Set& b) {
  const std::size_t n = r.size();
  Set out(n, true);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (b[y] && !r[y][x]) out[x] = false;
  return out;
}

inline Set pair_set(std::size_t n, std::size_t x, std::size_t y) {
  Set s(n);
  s[x] = s[y] = true;
  return s;
}

// Every element of a is below every element of b.
inline bool set_leq(const Rel& r, const Set& a, const Set& b) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (a[x] && b[y] && !r[x][y]) return false;
  return true;
}

inline bool naive_normality(const Rel& r, const std::vector<Element>& inv) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!set_leq(r, naive_lower(r, pair_set(n, x, inv[x])), naive_upper(r, pair_set(n, y, inv[y])))) return false;
  return true;
}

inline bool naive_zhu(const Rel& r, const std::vector<Element>& inv) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r[x][inv[x]] && r[inv[y]][y] && !r[x][y]) return false;
  return true;
}

inline Set intersect(Set a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

inline Set unite(Set a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  return a;
}

// L(U(x,y),z) = LU(L(x,z),L(y,z)) for all triples.
inline bool naive_distributive(const Rel& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Set z1(n);
        z1[z] = true;
        Set lhs = intersect(naive_lower(r, naive_upper(r, pair_set(n, x, y))), naive_lower(r, z1));
        Set rhs = naive_lower(r, naive_upper(r, unite(naive_lower(r, pair_set(n, x, z)), naive_lower(r, pair_set(n, y, z)))));
        if (lhs != rhs) return false;
      }
  return true;
}

// Pairs (x,y) with L(x,y) <= S <= U(x,y), lexicographic.
inline std::vector<std::pair<Element, Element>> naive_ps(const Rel& r, const Set& s) {
  std::vector<std::pair<Element, Element>> out;
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Set xy = pair_set(n, x, y);
      if (set_leq(r, naive_lower(r, xy), s) && set_leq(r, s, naive_upper(r, xy))) out.emplace_back(x, y);
    }
  return out;
}

// LU-closed subsets by enumerating all 2^n subsets.
inline std::vector<Set> naive_dm(const Rel& r) {
  std::vector<Set> out;
  const std::size_t n = r.size();
  for (unsigned long long m = 0; m < (1ULL << n); ++m) {
    Set s = bits(n, m);
    if (naive_lower(r, naive_upper(r, s)) == s) out.push_back(s);
  }
  return out;
}

// Order isomorphism by trying every injective assignment, abandoning a
// branch as soon as an assigned pair disagrees. Optional involutions.
inline bool naive_isomorphic(const Rel& a, const Rel& b, const std::vector<Element>* ia = nullptr,
                             const std::vector<Element>* ib = nullptr) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  constexpr Element kFree = static_cast<Element>(-1);
  std::vector<Element> perm(n, kFree);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t x) {
    for (std::size_t y = 0; y <= x; ++y)
      if (a[x][y] != b[perm[x]][perm[y]] || a[y][x] != b[perm[y]][perm[x]]) return false;
    if (ia && ib) {
      for (std::size_t y = 0; y <= x; ++y) {
        const Element iy = (*ia)[y];
        if (iy <= x && perm[iy] != (*ib)[perm[y]]) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t x) {
    if (x == n) return true;
    for (Element t = 0; t < n; ++t) {
      if (used[t]) continue;
      perm[x] = t;
      used[t] = true;
      if (consistent(x) && go(x + 1)) return true;
      used[t] = false;
    }
    perm[x] = kFree;
    return false;
  };
  return go(0);
}

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Random poset: random DAG along a shuffled order, closed by Warshall.
inline Poset random_poset(std::mt19937_64& rng, std::size_t n, double density = 0.35) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(density);
  Rel r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) r[order[i]][order[j]] = true;
  r = warshall(r);
  return Poset::from_relation(numbered(n), [&](Element x, Element y) { return r[x][y]; });
}

inline Subset random_nonempty_subset(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<unsigned long long> d(1, (1ULL << n) - 1);
  return to_subset(bits(n, d(rng)));
}

}  // namespace ktest
