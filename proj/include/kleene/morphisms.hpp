#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kleene/involution.hpp"
#include "kleene/poset.hpp"

namespace kleene {

enum class MapProperty : std::uint32_t {
  OrderPreserving = 1U << 0,
  OrderReflecting = 1U << 1,
  LuluMorphism = 1U << 2,
  LuluEmbedding = 1U << 3,
  InvolutionPreserving = 1U << 4,
  Isomorphism = 1U << 5,
};

/// A total map between two carriers. The `verified` flags are only ever set
/// by `verify`, which runs the matching checker.
class PosetMap {
 public:
  PosetMap(Poset source, Poset target, std::vector<Element> assignment);
  PosetMap(const InvolutivePoset& source, const InvolutivePoset& target, std::vector<Element> assignment);

  const Poset& source() const noexcept { return source_; }
  const Poset& target() const noexcept { return target_; }
  const std::vector<Element>& assignment() const noexcept { return assignment_; }
  Element operator()(Element x) const noexcept { return assignment_[x]; }
  Subset image(const Subset& x) const;

  bool has_involutions() const noexcept { return source_inv_.has_value() && target_inv_.has_value(); }
  const std::vector<Element>* source_involution() const noexcept {
    return source_inv_ ? &*source_inv_ : nullptr;
  }
  const std::vector<Element>* target_involution() const noexcept {
    return target_inv_ ? &*target_inv_ : nullptr;
  }

  bool has(MapProperty p) const noexcept { return (verified_ & static_cast<std::uint32_t>(p)) != 0; }
  std::uint32_t verified() const noexcept { return verified_; }

  /// Runs each requested checker and records the ones that pass. Returns
  /// true iff all requested properties hold.
  bool verify(std::initializer_list<MapProperty> properties);

 private:
  Poset source_;
  Poset target_;
  std::vector<Element> assignment_;
  std::optional<std::vector<Element>> source_inv_;
  std::optional<std::vector<Element>> target_inv_;
  std::uint32_t verified_ = 0;
};

bool is_order_preserving(const PosetMap& f);
bool is_order_reflecting(const PosetMap& f);
bool is_bijective(const PosetMap& f);
/// f(x') = f(x)'; false when either side carries no involution.
bool is_involution_preserving(const PosetMap& f);

enum class LuluCheck {
  Antichains,   // X ranges over non-empty antichains (min/max reduction)
  AllSubsets,   // X ranges over all non-empty subsets; the reference oracle
};

/// L(f(X)) = L(f(UL(X))) and U(f(Y)) = U(f(LU(Y))) for all non-empty X, Y.
/// Throws NotOrderPreserving.
bool is_lulu_morphism(const PosetMap& f, LuluCheck mode = LuluCheck::Antichains);
bool is_lulu_embedding(const PosetMap& f, LuluCheck mode = LuluCheck::Antichains);
/// Bijective LULU-morphism whose inverse is also a LULU-morphism.
bool is_lulu_isomorphism(const PosetMap& f);

/// Order isomorphism a -> b found by backtracking, or nullopt. Candidates are
/// tried in index order, so the result is reproducible.
std::optional<PosetMap> find_isomorphism(const Poset& a, const Poset& b);
/// As above; when `respect_involution` the witness also commutes with '.
std::optional<PosetMap> find_isomorphism(const InvolutivePoset& a, const InvolutivePoset& b,
                                         bool respect_involution = true);

}  // namespace kleene
