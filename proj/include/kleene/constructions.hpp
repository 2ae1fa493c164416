#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleene/involution.hpp"
#include "kleene/morphisms.hpp"
#include "kleene/poset.hpp"

namespace kleene {

using ElementPair = std::pair<Element, Element>;

/// "(x,y)" style label for a tuple of labels.
std::string tuple_label(const std::vector<std::string>& parts);

/// A x A ordered by (x,y) <= (z,u) iff x <= z and u <= y. Element x*n + y is
/// the pair (x,y).
Poset twist_product(const Poset& a);

/// Pairs (x,y) with L(x,y) <= S <= U(x,y), in lexicographic index order.
/// This is also the element order of ps_construct(a, s).
std::vector<ElementPair> ps_pairs(const Poset& a, const Subset& s);

/// P_S(A) with the swap involution. Throws EmptySubset.
InvolutivePoset ps_construct(const Poset& a, const Subset& s);

/// Index of (x,y) in `pairs` (as returned by ps_pairs), if present.
std::optional<Element> pair_index(const std::vector<ElementPair>& pairs, Element x, Element y);

struct PsReductions {
  Subset max_min;                 // Max S ∪ Min S
  Subset hull;                    // co(S)
  std::optional<Subset> bounds;   // {inf S, sup S} when both exist
  bool all_equal = false;         // every variant yields the same P_S carrier
};
PsReductions ps_reductions(const Poset& a, const Subset& s);

struct PointEmbedding {
  InvolutivePoset target;  // P_a(A)
  PosetMap map;            // x -> (x,a)
  bool image_convex = false;
};
/// x -> (x,a) into P_a(A), with its properties verified.
PointEmbedding embed_at_point(const Poset& a, Element at);

struct OrdinalSum {
  Poset poset;
  /// operand_maps[i][x] is the index in `poset` of element x of operand i.
  std::vector<std::vector<Element>> operand_maps;
};
/// Glues the top of each operand to the bottom of the next. The glued
/// element keeps the label of the lower operand's top. Other labels are kept
/// when they are unique across operands, otherwise prefixed with "<i>.".
/// Throws NoUniqueTop / NoUniqueBottom / InvalidArgument (empty operand).
OrdinalSum ordinal_sum(const std::vector<Poset>& operands);
Poset ordinal_sum2(const Poset& a1, const Poset& a2);
Poset ordinal_sum3(const Poset& a1, const Poset& a2, const Poset& a3);

/// Componentwise order. Element index is mixed-radix with the first factor
/// most significant; labels are "(x,y,...)".
Poset direct_product(const std::vector<Poset>& factors);
/// Product with the componentwise involution.
InvolutivePoset direct_product(const std::vector<InvolutivePoset>& factors);

struct ProductFactorization {
  InvolutivePoset joint;    // P_{S1 x S2}(A1 x A2)
  InvolutivePoset factors;  // P_{S1}(A1) x P_{S2}(A2)
  PosetMap shuffle;         // ((x1,x2),(y1,y2)) -> ((x1,y1),(x2,y2))
  bool verified = false;    // shuffle is an involution-preserving isomorphism
};
ProductFactorization product_factorization(const Poset& a1, const Subset& s1, const Poset& a2, const Subset& s2);

struct Th3Certificate {
  Subset ideal_i;
  Subset filter_f;
  bool ideal_is_frink = false;
  bool filter_is_frink = false;
  InvolutivePoset target;  // P_{a,b}(A)
  PosetMap embedding;
  bool embedding_verified = false;  // LULU-embedding
  bool interval_boolean = false;
};
/// `ortho` must be an involution on interval(a_poset, a, b) (same labels).
/// Throws NotDistributive, NotComparable, NotOrtho, HypothesisFailed.
Th3Certificate th3_embedding(const Poset& a_poset, Element a, Element b, const InvolutivePoset& ortho);

struct Prop2Result {
  Poset glued;                   // A1 +_a B +_b A2
  InvolutivePoset lhs;           // P_{ab}(glued)
  InvolutivePoset rhs;           // (A1 x A2^d) + B + (A2 x A1^d)
  std::optional<PosetMap> iso;   // involution-respecting
  bool lhs_kleene = false;
  /// The piecewise map x -> (x,b) / (x,x') / (x,a) agrees with the Th3
  /// embedding and has convex image. Only computed when B is non-trivial.
  std::optional<bool> piecewise_map_convex;
};
/// Throws PreconditionFailed naming the failed clause.
Prop2Result prop2_decompose(const Poset& a1, const Poset& b, const Poset& a2);

struct ChainRepresentation {
  Poset base;               // [a, 1]
  Subset s;                 // {a, a'} (or {a})
  InvolutivePoset target;   // P_S(base)
  PosetMap map;             // C -> target
  bool verified = false;    // involution-respecting isomorphism
};
/// Throws NotChain, GapConditionFailed.
ChainRepresentation chain_representation(const InvolutivePoset& chain, Element a);

}  // namespace kleene
