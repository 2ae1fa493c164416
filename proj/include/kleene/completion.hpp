#pragma once

#include <optional>
#include <vector>

#include "kleene/involution.hpp"
#include "kleene/morphisms.hpp"
#include "kleene/poset.hpp"

namespace kleene {

/// A completion whose members are subsets of a base poset, ordered by
/// inclusion. Members are sorted by size, then by bit pattern, so the
/// bottom comes first and the full carrier (when present) last.
class SubsetLattice {
 public:
  SubsetLattice(Poset base, std::vector<Subset> members);

  const Poset& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Subset& member(Element i) const { return members_.at(i); }
  const std::vector<Subset>& members() const noexcept { return members_; }
  std::optional<Element> find(const Subset& s) const;

  /// Members as a poset under inclusion; labels are "{x,y,...}".
  const Poset& order() const noexcept { return order_; }

  /// principal()[x] is the member L(x).
  const std::vector<Element>& principal() const noexcept { return principal_; }

  /// Meet is intersection (empty meet = top); join is LU of the union
  /// (empty join = bottom). Both throw Internal if the result is not a member.
  Element meet(const std::vector<Element>& xs) const;
  Element join(const std::vector<Element>& xs) const;

 private:
  Poset base_;
  std::vector<Subset> members_;
  Poset order_;
  std::vector<Element> principal_;
};

/// All LU-closed subsets, via closing {A} ∪ {L(x)} under intersection.
SubsetLattice dm_completion(const Poset& a);

/// Finite intersections of the sets LU(F), F non-empty, computed from the
/// upper sets U(F) without reference to dm_completion.
SubsetLattice g_completion(const Poset& a);

/// X -> L(X') on the members of `lattice`; `k` supplies the involution on
/// the base, which must be the lattice's base.
std::vector<Element> bot_involution(const SubsetLattice& lattice, const InvolutivePoset& k);

/// The completion with ⊥ as an involutive poset.
InvolutivePoset with_bot_involution(const SubsetLattice& lattice, const InvolutivePoset& k);

/// Every member is the join of the chosen members below it and the meet of
/// those above it.
bool is_doubly_dense(const std::vector<Element>& chosen, const SubsetLattice& lattice);

struct KleeneCompletionReport {
  SubsetLattice g;
  InvolutivePoset completion;      // G(K) with ⊥
  bool kleene_lattice = false;     // (i)
  bool principal_closed = false;   // (ii) {L(a)} closed under ⊥
  bool principal_dense = false;    // (ii) {L(a)} doubly dense
  bool principal_iso = false;      // (iii) a -> L(a) is an involution-respecting iso onto {L(a)}
};
/// Throws NotKleene.
KleeneCompletionReport verify_kleene_completion(const InvolutivePoset& k);

struct DmPsComparison {
  InvolutivePoset left;   // DM(P_S(A)) with ⊥
  InvolutivePoset right;  // P_{L(S)}(DM(A)) with the swap involution
  std::optional<PosetMap> iso;
  bool isomorphic() const noexcept { return iso.has_value(); }
};
DmPsComparison dm_ps_compare(const Poset& a, const Subset& s);

}  // namespace kleene
