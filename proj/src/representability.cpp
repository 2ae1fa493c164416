#include "kleene/representability.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "kleene/constructions.hpp"

namespace kleene {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Representable: return "Representable";
    case Verdict::NotRepresentableWithinBounds: return "NotRepresentableWithinBounds";
    case Verdict::NotRepresentable: return "NotRepresentable";
  }
  return "?";
}

std::string_view mode_name(SearchMode m) noexcept {
  switch (m) {
    case SearchMode::OddComplete: return "odd";
    case SearchMode::Subposet: return "subposet";
    case SearchMode::Exhaustive: return "exhaustive";
  }
  return "?";
}

std::optional<PosetMap> verify_representation(const InvolutivePoset& k, const Poset& a, const Subset& s) {
  if (s.none()) fail(ErrorCode::EmptySubset, "S must be non-empty");
  if (ps_pairs(a, s).size() != k.size()) return std::nullopt;
  return find_isomorphism(k, ps_construct(a, s), true);
}

bool prune_lemma3(const Poset& p, Element a, bool target_has_3_antichain) {
  if (target_has_3_antichain) return true;
  for (Element x = 0; x < p.size(); ++x)
    if (!p.comparable(x, a)) return false;
  return is_join_irreducible(p, a) && is_meet_irreducible(p, a);
}

InvolutivePoset make_th1_poset(std::size_t n) {
  if (n < 2) fail(ErrorCode::BadLength, "chain length must be at least 2");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> le;
  std::vector<std::string> lower, upper;
  for (std::size_t i = 0; i + 1 < n; ++i) lower.push_back("l" + std::to_string(i));
  lower.push_back("b");
  upper.push_back("d");
  for (std::size_t i = 1; i < n; ++i) upper.push_back("u" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < lower.size(); ++i) le.emplace_back(lower[i], lower[i + 1]);
  for (std::size_t i = 0; i + 1 < upper.size(); ++i) le.emplace_back(upper[i], upper[i + 1]);
  for (auto [lo, m1, m2, hi] : {std::array<const char*, 4>{"b", "p1", "q1", "c"}, {"c", "p2", "q2", "d"}}) {
    le.emplace_back(lo, m1);
    le.emplace_back(lo, m2);
    le.emplace_back(m1, hi);
    le.emplace_back(m2, hi);
  }
  labels = lower;
  for (const char* x : {"p1", "q1", "c", "p2", "q2"}) labels.emplace_back(x);
  labels.insert(labels.end(), upper.begin(), upper.end());
  Poset p = build_poset(labels, le);
  std::vector<std::pair<std::string, std::string>> inv{{"p1", "p2"}, {"q1", "q2"}, {"c", "c"}};
  for (std::size_t i = 0; i < n; ++i) inv.emplace_back(lower[i], upper[n - 1 - i]);
  return attach_involution(p, inv);
}

// --- abstract poset enumeration -------------------------------------------------

namespace {

using ShapeKey = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>>;

ShapeKey shape_key(const Poset& p) {
  std::vector<std::size_t> lc(p.size()), uc(p.size());
  for (auto [x, y] : p.covers()) {
    ++uc[x];
    ++lc[y];
  }
  ShapeKey k;
  for (Element x = 0; x < p.size(); ++x) k.emplace_back(p.down(x).count(), p.up(x).count(), lc[x], uc[x]);
  std::sort(k.begin(), k.end());
  return k;
}

std::vector<std::string> generic_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("e" + std::to_string(i));
  return l;
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n > kExhaustiveCarrierLimit)
    fail(ErrorCode::SizeLimit, "abstract poset enumeration is limited to " +
                                   std::to_string(kExhaustiveCarrierLimit) + " elements");
  static std::mutex mu;
  static std::vector<std::vector<Poset>> levels;
  std::lock_guard lock(mu);
  if (levels.empty()) levels.push_back({Poset::from_up_sets({}, {})});
  while (levels.size() <= n) {
    const std::size_t m = levels.size() - 1;  // extend posets of size m
    std::vector<Poset> next;
    std::map<ShapeKey, std::vector<std::size_t>> buckets;
    for (const Poset& p : levels[m]) {
      // Each down-closed D gives a new maximal element e_m with L(e_m) = D ∪ {e_m}.
      for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        Subset d(m);
        for (Element i = 0; i < m; ++i)
          if (mask >> i & 1U) d.set(i);
        bool closed = true;
        d.for_each([&](std::size_t x) { closed = closed && p.down(x).is_subset_of(d); });
        if (!closed) continue;
        std::vector<Bitset> up(m + 1, Bitset(m + 1));
        for (Element x = 0; x < m; ++x) {
          p.up(x).for_each([&](std::size_t y) { up[x].set(y); });
          if (d.test(x)) up[x].set(m);
        }
        up[m].set(m);
        Poset q = Poset::from_up_sets(generic_labels(m + 1), std::move(up));
        auto& bucket = buckets[shape_key(q)];
        bool dup = false;
        for (std::size_t idx : bucket)
          if (find_isomorphism(next[idx], q)) {
            dup = true;
            break;
          }
        if (dup) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(q));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels[n];
}

// --- search driver ----------------------------------------------------------------

namespace {

struct KInfo {
  const InvolutivePoset& k;
  std::size_t n;
  bool has_fixed_point;
  bool has_3_antichain;
};

// Tries every admissible S on carrier `a`; first hit in S order wins.
std::optional<Witness> try_carrier(const KInfo& ki, const Poset& a, const std::vector<Subset>& s_candidates) {
  for (const Subset& s : s_candidates) {
    if (ps_pairs(a, s).size() != ki.n) continue;
    auto iso = find_isomorphism(ki.k, ps_construct(a, s), true);
    if (iso) return Witness{a, s, std::move(*iso)};
  }
  return std::nullopt;
}

std::vector<Subset> convex_closed_subsets(const KInfo& ki, const Poset& a, bool pruning) {
  const std::size_t m = a.size();
  if (m > 20) fail(ErrorCode::SizeLimit, "S enumeration is limited to carriers of 20 elements");
  std::vector<Subset> out;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    Subset s(m);
    for (Element i = 0; i < m; ++i)
      if (mask >> i & 1U) s.set(i);
    if (convex_hull(a, s) != s) continue;
    const std::size_t c = s.count();
    if (pruning) {
      if ((ki.n % 2 == 1) != (c == 1)) continue;         // parity
      if (ki.has_fixed_point != (c == 1)) continue;      // fixed point only for singleton S
      if (c == 1 && 2 * m > ki.n + 1) continue;          // carrier bound for singleton S
      if (c == 1 && !prune_lemma3(a, s.first(), ki.has_3_antichain)) continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Runs `evaluate` over candidate indices [0, count) on `partitions` threads
// (round-robin slices) and returns the least index with a witness.
RepresentationResult drive(std::size_t count, std::size_t partitions,
                           const std::function<std::optional<Witness>(std::size_t)>& evaluate) {
  partitions = std::max<std::size_t>(1, std::min(partitions, std::max<std::size_t>(count, 1)));
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::atomic<std::size_t> best{kNone};
  std::mutex mu;
  std::optional<Witness> best_witness;
  std::exception_ptr error;

  auto worker = [&](std::size_t t) {
    try {
      for (std::size_t i = t; i < count; i += partitions) {
        if (i > best.load(std::memory_order_relaxed)) return;
        auto w = evaluate(i);
        if (!w) continue;
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          best_witness = std::move(w);
        }
        return;
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  };

  if (partitions == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < partitions; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  if (error) std::rethrow_exception(error);

  RepresentationResult r;
  if (best_witness) {
    r.verdict = Verdict::Representable;
    r.witness = std::move(best_witness);
    r.candidates = best.load() + 1;
  } else {
    r.candidates = count;
  }
  return r;
}

// Subsets of {0..n-1} with `required` members, by size then lexicographically.
std::vector<Subset> subsets_by_size(std::size_t n, std::size_t max_size, std::optional<Element> required) {
  std::vector<Subset> out;
  std::vector<Element> pool;
  for (Element x = 0; x < n; ++x)
    if (x != required) pool.push_back(x);
  const std::size_t base = required ? 1 : 0;
  for (std::size_t size = std::max<std::size_t>(base, 1); size <= std::min(max_size, n); ++size) {
    const std::size_t pick = size - base;
    if (pick > pool.size()) break;
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
      Subset s(n);
      if (required) s.set(*required);
      for (std::size_t i : idx) s.set(pool[i]);
      out.push_back(std::move(s));
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == pool.size() - pick + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RepresentationResult search_odd(const InvolutivePoset& k, std::size_t partitions, bool pruning) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = k.size();
  if (n % 2 == 0) fail(ErrorCode::EvenCardinality, "odd-complete search needs an odd number of elements");
  const Subset fixed = fixed_points(k);
  if (fixed.count() != 1)
    fail(ErrorCode::NoFixedPoint, "expected exactly one fixed point, found " + std::to_string(fixed.count()));
  const Element a = fixed.first();
  const std::size_t bound = (n + 1) / 2;

  RepresentationResult r;
  if (!k.classification().pseudo_kleene) {
    r.verdict = Verdict::NotRepresentable;
    r.note = "not pseudo-Kleene, and every P_S(A) is";
  } else {
    const KInfo ki{k, n, true, has_antichain_of_size(k.poset(), 3)};
    const auto candidates = subsets_by_size(n, bound, a);
    r = drive(candidates.size(), partitions, [&](std::size_t i) -> std::optional<Witness> {
      const Poset sub = k.poset().induced(candidates[i]);
      const Element at = sub.index_of(k.poset().label(a));
      if (pruning && !prune_lemma3(sub, at, ki.has_3_antichain)) return std::nullopt;
      return try_carrier(ki, sub, {Subset::single(sub.size(), at)});
    });
    if (!r.witness) r.verdict = Verdict::NotRepresentable;
    if (!k.classification().distributive)
      r.note = "K is pseudo-Kleene but not Kleene; the subposet bound is applied beyond its stated scope";
  }
  r.mode = SearchMode::OddComplete;
  r.max_carrier_size = bound;
  r.elapsed_ms = ms_since(t0);
  return r;
}

RepresentationResult search_general(const InvolutivePoset& k, const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = k.size();
  std::size_t bound = cfg.max_carrier_size ? cfg.max_carrier_size : n;
  std::string note;
  if (cfg.mode == SearchMode::Exhaustive && bound > kExhaustiveCarrierLimit) {
    bound = kExhaustiveCarrierLimit;
    note = "carrier bound clamped to " + std::to_string(bound);
  }
  if (cfg.mode == SearchMode::Subposet) bound = std::min(bound, n);

  RepresentationResult r;
  if (!k.classification().pseudo_kleene) {
    r.note = "not pseudo-Kleene, and every P_S(A) is";
  } else {
    const KInfo ki{k, n, fixed_points(k).any(), has_antichain_of_size(k.poset(), 3)};
    if (cfg.mode == SearchMode::Exhaustive) {
      std::vector<Poset> carriers;
      for (std::size_t m = 1; m <= bound; ++m)
        for (auto& p : enumerate_posets(m)) carriers.push_back(std::move(p));
      r = drive(carriers.size(), cfg.partitions, [&](std::size_t i) {
        return try_carrier(ki, carriers[i], convex_closed_subsets(ki, carriers[i], cfg.pruning));
      });
    } else {
      const auto candidates = subsets_by_size(n, bound, std::nullopt);
      r = drive(candidates.size(), cfg.partitions, [&](std::size_t i) {
        const Poset sub = k.poset().induced(candidates[i]);
        return try_carrier(ki, sub, convex_closed_subsets(ki, sub, cfg.pruning));
      });
    }
    r.note = note;
  }
  r.mode = cfg.mode;
  r.max_carrier_size = bound;
  r.elapsed_ms = ms_since(t0);
  return r;
}

RepresentationResult represent(const InvolutivePoset& k, const SearchConfig& cfg) {
  if (cfg.mode == SearchMode::OddComplete) return search_odd(k, cfg.partitions, cfg.pruning);
  return search_general(k, cfg);
}

}  // namespace kleene
