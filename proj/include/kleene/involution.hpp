#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kleene/poset.hpp"

namespace kleene {

struct Classification {
  bool distributive = false;
  bool pseudo_kleene = false;  // normality condition
  bool kleene = false;         // distributive and pseudo-Kleene
  bool boolean = false;        // distributive and complemented
  bool ortho = false;          // bounded, and ' is an orthocomplementation
  bool lattice = false;
  Subset fixed_points;
};

namespace detail {
struct ClassificationCache;
}

/// A poset with a validated antitone involution, stored as a permutation
/// over the poset's element indices.
class InvolutivePoset {
 public:
  /// Validates x'' = x and antitonicity. Throws NotInvolutive / NotAntitone
  /// (the latter naming the lexicographically first violating pair).
  InvolutivePoset(Poset poset, std::vector<Element> involution);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Element inv(Element x) const noexcept { return (*inv_)[x]; }
  const std::vector<Element>& involution() const noexcept { return *inv_; }

  /// Computed once; eager for carriers up to 64 elements.
  const Classification& classification() const;

 private:
  Poset poset_;
  std::shared_ptr<const std::vector<Element>> inv_;
  std::shared_ptr<detail::ClassificationCache> cache_;
};

/// Mapping given as unordered label pairs a <-> b (a == b for fixed points).
InvolutivePoset attach_involution(const Poset& p, std::span<const std::pair<std::string, std::string>> pairs);
InvolutivePoset attach_involution(const Poset& p,
                                  std::initializer_list<std::pair<std::string, std::string>> pairs);

/// Image X' of a subset.
Subset image(const InvolutivePoset& k, const Subset& x);

bool normality_holds(const InvolutivePoset& k);
bool zhu_holds(const InvolutivePoset& k);
Subset fixed_points(const InvolutivePoset& k);
Classification classify(const InvolutivePoset& k);
/// Throws NotBounded when the carrier lacks a bottom or top.
bool is_orthocomplementation(const InvolutivePoset& k);

/// Every antitone involution of `p`, in lexicographic order of the
/// permutation arrays. Exponential; meant for small posets.
std::vector<std::vector<Element>> all_antitone_involutions(const Poset& p);

}  // namespace kleene
