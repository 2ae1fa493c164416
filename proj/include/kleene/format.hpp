#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kleene/involution.hpp"
#include "kleene/poset.hpp"

namespace kleene {

/// One `poset NAME ... end` block.
struct NamedPoset {
  std::string name;
  Poset poset;
  std::optional<InvolutivePoset> involutive;
  std::vector<std::pair<std::string, Subset>> sets;
  int line = 0;  // line of the `poset` header

  const Subset* find_set(std::string_view set_name) const;
};

struct PosetDocument {
  std::vector<NamedPoset> posets;

  const NamedPoset* find(std::string_view name) const;
  /// Throws InvalidArgument when absent.
  const NamedPoset& get(std::string_view name) const;
};

/// Line-oriented format:
///   poset NAME
///     elem a b c
///     le a b        (a <= b; the closure is taken)
///     inv a b       (a' = b and b' = a)
///     set S a b
///   end
/// `#` starts a comment. Errors carry the offending line number.
PosetDocument parse_document(std::string_view text);
PosetDocument load_document(const std::string& path);

/// Writes covering pairs as `le` lines; parsing the output gives back a
/// poset with identical labels, order and involution.
std::string print_poset(const std::string& name, const Poset& p, const std::vector<Element>* involution = nullptr,
                        const std::vector<std::pair<std::string, Subset>>& sets = {});
std::string print_document(const PosetDocument& doc);

/// Hasse diagram: one node per element, one edge per covering pair drawn
/// upward, the involution as dashed undirected edges.
std::string to_dot(const std::string& name, const Poset& p, const std::vector<Element>* involution = nullptr);

}  // namespace kleene
