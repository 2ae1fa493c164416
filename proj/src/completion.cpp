#include "kleene/completion.hpp"

#include <algorithm>
#include <unordered_set>

#include "kleene/constructions.hpp"

namespace kleene {

namespace {

bool member_order(const Subset& x, const Subset& y) {
  if (x.count() != y.count()) return x.count() < y.count();
  return x < y;
}

// Closes `generators` under pairwise (hence finite non-empty) intersection.
std::vector<Subset> intersection_closure(const std::vector<Subset>& generators, std::string_view what) {
  std::unordered_set<Subset, BitsetHash> seen;
  std::vector<Subset> family;
  for (const auto& g : generators) {
    std::vector<Subset> fresh;
    if (seen.insert(g).second) fresh.push_back(g);
    for (const auto& m : family) {
      Subset x = m & g;
      if (seen.insert(x).second) fresh.push_back(std::move(x));
    }
    for (auto& f : fresh) family.push_back(std::move(f));
    check_size_cap(family.size(), what);
  }
  return family;
}

}  // namespace

SubsetLattice::SubsetLattice(Poset base, std::vector<Subset> members)
    : base_(std::move(base)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), member_order);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  std::vector<std::string> labels;
  for (const auto& m : members_) labels.push_back(base_.format_subset(m));
  order_ = Poset::from_relation(std::move(labels),
                                [&](Element i, Element j) { return members_[i].is_subset_of(members_[j]); });
  principal_.resize(base_.size());
  for (Element x = 0; x < base_.size(); ++x) {
    auto idx = find(base_.down(x));
    if (!idx) fail(ErrorCode::Internal, "principal ideal missing from completion");
    principal_[x] = *idx;
  }
}

std::optional<Element> SubsetLattice::find(const Subset& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, member_order);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<Element>(it - members_.begin());
}

Element SubsetLattice::meet(const std::vector<Element>& xs) const {
  Subset r = base_.full_subset();
  for (Element x : xs) r &= members_.at(x);
  auto idx = find(r);
  if (!idx) fail(ErrorCode::Internal, "meet is not a member");
  return *idx;
}

Element SubsetLattice::join(const std::vector<Element>& xs) const {
  Subset u(base_.size());
  for (Element x : xs) u |= members_.at(x);
  auto idx = find(lower_upper(base_, u));
  if (!idx) fail(ErrorCode::Internal, "join is not a member");
  return *idx;
}

SubsetLattice dm_completion(const Poset& a) {
  std::vector<Subset> gens{a.full_subset()};
  for (Element x = 0; x < a.size(); ++x) gens.push_back(a.down(x));
  return SubsetLattice(a, intersection_closure(gens, "Dedekind-MacNeille completion"));
}

SubsetLattice g_completion(const Poset& a) {
  std::vector<Subset> ups;
  for (Element x = 0; x < a.size(); ++x) ups.push_back(a.up(x));
  // U(F) for non-empty finite F, then LU(F) = L(U(F)), then intersections.
  std::vector<Subset> lus;
  for (const auto& u : intersection_closure(ups, "G completion")) lus.push_back(lower_bounds(a, u));
  return SubsetLattice(a, intersection_closure(lus, "G completion"));
}

std::vector<Element> bot_involution(const SubsetLattice& lattice, const InvolutivePoset& k) {
  if (!k.poset().same_as(lattice.base()) && !k.poset().identical_to(lattice.base()))
    fail(ErrorCode::InvalidArgument, "involution is on a different base poset");
  std::vector<Element> out(lattice.size());
  for (Element i = 0; i < lattice.size(); ++i) {
    auto idx = lattice.find(lower_bounds(k.poset(), image(k, lattice.member(i))));
    if (!idx) fail(ErrorCode::Internal, "X^⊥ is not a member");
    out[i] = *idx;
  }
  return out;
}

InvolutivePoset with_bot_involution(const SubsetLattice& lattice, const InvolutivePoset& k) {
  return InvolutivePoset(lattice.order(), bot_involution(lattice, k));
}

bool is_doubly_dense(const std::vector<Element>& chosen, const SubsetLattice& lattice) {
  for (Element c = 0; c < lattice.size(); ++c) {
    std::vector<Element> below, above;
    for (Element x : chosen) {
      if (lattice.member(x).is_subset_of(lattice.member(c))) below.push_back(x);
      if (lattice.member(c).is_subset_of(lattice.member(x))) above.push_back(x);
    }
    if (lattice.join(below) != c || lattice.meet(above) != c) return false;
  }
  return true;
}

KleeneCompletionReport verify_kleene_completion(const InvolutivePoset& k) {
  if (!k.classification().kleene) fail(ErrorCode::NotKleene, "the poset is not a Kleene poset");
  SubsetLattice g = g_completion(k.poset());
  InvolutivePoset completion = with_bot_involution(g, k);
  const Classification& c = completion.classification();
  const bool kleene_lattice = c.kleene && c.lattice;

  const auto& pr = g.principal();
  std::vector<Element> chosen(pr.begin(), pr.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  bool closed = true;
  for (Element x : chosen) closed &= std::binary_search(chosen.begin(), chosen.end(), completion.inv(x));

  PosetMap emb(k, completion, pr);
  bool iso = emb.verify({MapProperty::OrderPreserving, MapProperty::OrderReflecting, MapProperty::InvolutionPreserving});
  iso = iso && chosen.size() == k.size();

  const bool dense = is_doubly_dense(chosen, g);
  return KleeneCompletionReport{std::move(g), std::move(completion), kleene_lattice, closed, dense, iso};
}

DmPsComparison dm_ps_compare(const Poset& a, const Subset& s) {
  const InvolutivePoset ps = ps_construct(a, s);
  const SubsetLattice left_lattice = dm_completion(ps.poset());
  InvolutivePoset left = with_bot_involution(left_lattice, ps);

  const SubsetLattice dm = dm_completion(a);
  Subset ls(dm.size());
  s.for_each([&](std::size_t x) { ls.set(dm.principal()[x]); });
  InvolutivePoset right = ps_construct(dm.order(), ls);

  auto iso = find_isomorphism(left, right, true);
  return DmPsComparison{std::move(left), std::move(right), std::move(iso)};
}

}  // namespace kleene
