#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kleene/involution.hpp"
#include "kleene/morphisms.hpp"
#include "kleene/poset.hpp"

namespace kleene {

enum class SearchMode { OddComplete, Subposet, Exhaustive };

/// Largest carrier the exhaustive mode enumerates abstract posets for.
inline constexpr std::size_t kExhaustiveCarrierLimit = 8;

struct SearchConfig {
  SearchMode mode = SearchMode::Subposet;
  std::size_t max_carrier_size = 0;  // 0: |K| (clamped in exhaustive mode)
  std::size_t partitions = 1;
  bool pruning = true;
};

enum class Verdict {
  Representable,
  NotRepresentableWithinBounds,
  NotRepresentable,  // odd-complete mode only
};

struct Witness {
  Poset carrier;  // A
  Subset s;       // S ⊆ A
  PosetMap iso;   // K -> P_S(A), involution-respecting
};

struct RepresentationResult {
  Verdict verdict = Verdict::NotRepresentableWithinBounds;
  std::optional<Witness> witness;
  SearchMode mode = SearchMode::Subposet;
  std::size_t max_carrier_size = 0;  // bound actually searched
  /// Candidate carriers up to and including the witness, or all of them.
  /// Independent of the partition count.
  std::size_t candidates = 0;
  double elapsed_ms = 0;
  std::string note;
};

std::string_view verdict_name(Verdict v) noexcept;
std::string_view mode_name(SearchMode m) noexcept;

/// P_S(A) then an involution-respecting isomorphism search.
std::optional<PosetMap> verify_representation(const InvolutivePoset& k, const Poset& a, const Subset& s);

/// Complete decision for odd |K|: subposets A of K containing the fixed
/// point with |A| <= (|K|+1)/2, S = {fixed point}. Throws EvenCardinality,
/// NoFixedPoint.
RepresentationResult search_odd(const InvolutivePoset& k, std::size_t partitions = 1, bool pruning = true);

/// Bounded search; never returns NotRepresentable.
RepresentationResult search_general(const InvolutivePoset& k, const SearchConfig& cfg);

/// Dispatches on cfg.mode.
RepresentationResult represent(const InvolutivePoset& k, const SearchConfig& cfg);

/// C +_b B +_c B +_d C with C an n-chain and B the four-element Boolean
/// poset; the involution swaps the two halves and fixes c. Throws BadLength.
InvolutivePoset make_th1_poset(std::size_t n);

/// False when `a` cannot be the point of a representation P_a(A) of a target
/// without 3-element antichains: a must be comparable to everything and be
/// join- and meet-irreducible. Always true when the target has a 3-antichain.
bool prune_lemma3(const Poset& a_poset, Element a, bool target_has_3_antichain);

/// All posets on n elements up to isomorphism, labelled e0..e{n-1}, in a
/// fixed generation order. Throws SizeLimit above kExhaustiveCarrierLimit.
std::vector<Poset> enumerate_posets(std::size_t n);

}  // namespace kleene
