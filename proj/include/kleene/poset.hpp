#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kleene/bitset.hpp"
#include "kleene/error.hpp"

namespace kleene {

using Element = std::size_t;
using Subset = Bitset;

/// Default cap on the carrier size of any constructed poset.
inline constexpr std::size_t kDefaultSizeCap = 4096;

/// Process-wide construction size cap (twist products, products, completions).
std::size_t size_cap() noexcept;
void set_size_cap(std::size_t cap) noexcept;  // 0 restores the default
void check_size_cap(std::size_t requested, std::string_view what);

namespace detail {
struct PosetData;
}

/// Finite poset with the full order relation stored as down-sets and
/// up-sets per element. Immutable; copies share storage.
class Poset {
 public:
  Poset();

  /// Reflexive-transitive closure of `generators` (pairs of indices into
  /// `labels`, meaning first <= second).
  static Poset from_generators(std::vector<std::string> labels,
                               std::span<const std::pair<Element, Element>> generators);

  /// From the full relation given as up-sets (up[i] = {j | i <= j}).
  /// Validates reflexivity, antisymmetry and transitivity instead of
  /// closing; throws InvalidArgument / AntisymmetryViolation.
  static Poset from_up_sets(std::vector<std::string> labels, std::vector<Bitset> up);

  /// From a complete relation: `leq(i, j)` for all i, j.
  template <class Leq>
  static Poset from_relation(std::vector<std::string> labels, Leq&& leq) {
    const std::size_t n = labels.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        if (leq(i, j)) up[i].set(j);
    return from_up_sets(std::move(labels), std::move(up));
  }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  const std::string& label(Element x) const;
  const std::vector<std::string>& labels() const noexcept;
  std::optional<Element> find(std::string_view label) const;
  Element index_of(std::string_view label) const;  // throws UnknownElement

  bool leq(Element x, Element y) const noexcept { return down(y).test(x); }
  bool less(Element x, Element y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const noexcept { return leq(x, y) || leq(y, x); }

  /// {y | y <= x} and {y | x <= y}.
  const Bitset& down(Element x) const noexcept;
  const Bitset& up(Element x) const noexcept;

  Subset empty_subset() const { return Subset(size()); }
  Subset full_subset() const { return Subset::full(size()); }
  Subset subset_of(std::span<const Element> xs) const;
  Subset subset_of(std::initializer_list<Element> xs) const {
    return subset_of(std::span<const Element>(xs.begin(), xs.size()));
  }
  Subset subset_of_labels(std::span<const std::string> labels) const;
  Subset subset_of_labels(std::initializer_list<std::string_view> labels) const;
  std::string format_subset(const Subset& s) const;

  /// Induced subposet on `members`, keeping the original labels and the
  /// relative order of indices.
  Poset induced(const Subset& members) const;

  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

  std::optional<Element> bottom() const;
  std::optional<Element> top() const;

  /// Same labels in the same order and the same relation.
  bool identical_to(const Poset& other) const;

  bool same_as(const Poset& other) const noexcept { return d_ == other.d_; }

 private:
  explicit Poset(std::shared_ptr<const detail::PosetData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::PosetData> d_;
};

/// Convenience builder from labels: `build_poset({"0","a"}, {{"0","a"}})`.
Poset build_poset(std::vector<std::string> labels,
                  std::span<const std::pair<std::string, std::string>> generators);
Poset build_poset(std::vector<std::string> labels,
                  std::initializer_list<std::pair<std::string, std::string>> generators);

// --- L/U calculus -----------------------------------------------------------

/// L(B): elements below every member of B. L(empty) is the full carrier.
Subset lower_bounds(const Poset& p, const Subset& b);
/// U(B): elements above every member of B. U(empty) is the full carrier.
Subset upper_bounds(const Poset& p, const Subset& b);
inline Subset lower_upper(const Poset& p, const Subset& b) { return lower_bounds(p, upper_bounds(p, b)); }
inline Subset upper_lower(const Poset& p, const Subset& b) { return upper_bounds(p, lower_bounds(p, b)); }

Subset maximal(const Poset& p, const Subset& b);
Subset minimal(const Poset& p, const Subset& b);

/// co(S) = LU(S) ∩ UL(S). Throws EmptySubset.
Subset convex_hull(const Poset& p, const Subset& s);
bool is_convex(const Poset& p, const Subset& b);
bool is_antichain(const Poset& p, const Subset& b);

/// LU(M) ⊆ I for all M ⊆ I. Monotonicity of LU reduces this to M = I.
bool is_frink_ideal(const Poset& p, const Subset& ideal);
bool is_frink_filter(const Poset& p, const Subset& filter);

/// Greatest element of `b`, if any (as opposed to merely maximal).
std::optional<Element> greatest(const Poset& p, const Subset& b);
std::optional<Element> least(const Poset& p, const Subset& b);
/// Supremum / infimum of a subset: least element of U(B) / greatest of L(B).
std::optional<Element> supremum(const Poset& p, const Subset& b);
std::optional<Element> infimum(const Poset& p, const Subset& b);

// --- structural predicates --------------------------------------------------

/// The six LU-identities that each characterise distributive posets.
enum class LuIdentity {
  LowerOfUpperJoin,   // L(U(x,y),z) = LU(L(x,z),L(y,z))
  UpperOfLowerJoin,   // U(L(x,z),L(y,z)) = UL(U(x,y),z)
  UpperOfLowerMeet,   // U(L(x,y),z) = UL(U(x,z),U(y,z))
  LowerOfUpperMeet,   // L(U(x,z),U(y,z)) = LU(L(x,y),z)
  NaryLower,          // L(U(x1..xn),z) = LU(L(x1,z),..,L(xn,z))
  NaryUpper,          // U(L(x1..xn),z) = UL(U(x1,z),..,U(xn,z))
};

/// Checks one identity over all argument tuples. `arity` applies to the
/// n-ary forms only.
bool lu_identity_holds(const Poset& p, LuIdentity identity, std::size_t arity = 3);

bool is_distributive(const Poset& p);
/// Both n-ary identities for all tuples of length n (n >= 2).
bool nary_distributive_check(const Poset& p, std::size_t n);

bool is_lattice(const Poset& p);

bool is_join_irreducible(const Poset& p, Element a);
bool is_meet_irreducible(const Poset& p, Element a);

Subset complements_of(const Poset& p, Element x);
bool is_complemented(const Poset& p);
bool is_boolean_poset(const Poset& p);

/// True when some antichain has exactly k elements.
bool has_antichain_of_size(const Poset& p, std::size_t k);

/// [a, b] as an induced subposet. Throws NotComparable unless a <= b.
Poset interval(const Poset& p, Element a, Element b);
Subset interval_subset(const Poset& p, Element a, Element b);
Poset dual(const Poset& p);

}  // namespace kleene
