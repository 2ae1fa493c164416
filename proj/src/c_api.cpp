#include "kleene/kleene.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "kleene/completion.hpp"
#include "kleene/constructions.hpp"
#include "kleene/format.hpp"
#include "kleene/representability.hpp"

using namespace kleene;

struct kleene_poset {
  Poset poset;
  std::optional<InvolutivePoset> inv;
  std::vector<std::pair<std::string, Subset>> sets;
};

struct kleene_document {
  PosetDocument doc;
};

struct kleene_representation {
  RepresentationResult result;
};

static_assert(static_cast<int>(ErrorCode::Internal) == KLEENE_E_INTERNAL);
static_assert(static_cast<int>(ErrorCode::SyntaxError) == KLEENE_E_SYNTAX);

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;

template <class F>
kleene_status guarded(F&& body) {
  g_error.clear();
  g_error_line = 0;
  try {
    body();
    return KLEENE_OK;
  } catch (const Error& e) {
    g_error = e.what();
    g_error_line = e.line();
    return static_cast<kleene_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
  } catch (const std::exception& e) {
    g_error = e.what();
  } catch (...) {
    g_error = "unknown failure";
  }
  return KLEENE_E_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Subset subset_from(const Poset& p, const char* const* labels, std::size_t n) {
  if (n) require(labels, "subset");
  Subset s(p.size());
  for (std::size_t i = 0; i < n; ++i) s.set(p.index_of(labels[i]));
  return s;
}

std::string subset_text(const Poset& p, const Subset& s) {
  std::string out;
  s.for_each([&](std::size_t x) {
    if (!out.empty()) out += ' ';
    out += p.label(x);
  });
  return out;
}

kleene_poset* wrap(Poset p) { return new kleene_poset{std::move(p), std::nullopt, {}}; }
kleene_poset* wrap(InvolutivePoset k) { return new kleene_poset{k.poset(), std::move(k), {}}; }

const InvolutivePoset& involutive(const kleene_poset* p) {
  if (!p->inv) fail(ErrorCode::InvalidArgument, "poset carries no involution");
  return *p->inv;
}

std::string map_text(const PosetMap& f) {
  std::string out;
  for (Element x = 0; x < f.source().size(); ++x)
    out += f.source().label(x) + " " + f.target().label(f(x)) + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* kleene_last_error(void) { return g_error.c_str(); }
int kleene_last_error_line(void) { return g_error_line; }

const char* kleene_status_name(kleene_status status) {
  if (status == KLEENE_OK) return "Ok";
  static thread_local std::string name;
  name = std::string(error_name(static_cast<ErrorCode>(status)));
  return name.c_str();
}

void kleene_string_free(char* s) { std::free(s); }

void kleene_set_size_cap(size_t cap) { set_size_cap(cap ? cap : kDefaultSizeCap); }

// --- documents -----------------------------------------------------------------

kleene_status kleene_document_parse(const char* text, kleene_document** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new kleene_document{parse_document(text)};
  });
}

kleene_status kleene_document_load(const char* path, kleene_document** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new kleene_document{load_document(path)};
  });
}

void kleene_document_free(kleene_document* doc) { delete doc; }

size_t kleene_document_count(const kleene_document* doc) { return doc ? doc->doc.posets.size() : 0; }

const char* kleene_document_name(const kleene_document* doc, size_t index) {
  if (!doc || index >= doc->doc.posets.size()) return nullptr;
  return doc->doc.posets[index].name.c_str();
}

kleene_status kleene_document_get(const kleene_document* doc, const char* name, kleene_poset** out) {
  return guarded([&] {
    require(doc, "document");
    require(name, "name");
    require(out, "out");
    const NamedPoset& np = doc->doc.get(name);
    *out = new kleene_poset{np.poset, np.involutive, np.sets};
  });
}

// --- posets --------------------------------------------------------------------

kleene_status kleene_poset_build(const char* const* labels, size_t label_count, const char* const* pairs,
                                 size_t pair_count, kleene_poset** out) {
  return guarded([&] {
    require(out, "out");
    if (label_count) require(labels, "labels");
    if (pair_count) require(pairs, "pairs");
    std::vector<std::string> ls(labels, labels + label_count);
    std::vector<std::pair<std::string, std::string>> gens;
    for (size_t i = 0; i < pair_count; ++i) gens.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = wrap(build_poset(std::move(ls), gens));
  });
}

kleene_status kleene_poset_with_involution(const kleene_poset* p, const char* const* pairs, size_t pair_count,
                                           kleene_poset** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    if (pair_count) require(pairs, "pairs");
    std::vector<std::pair<std::string, std::string>> ps;
    for (size_t i = 0; i < pair_count; ++i) ps.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    auto* r = wrap(attach_involution(p->poset, ps));
    r->sets = p->sets;
    *out = r;
  });
}

kleene_status kleene_poset_clone(const kleene_poset* p, kleene_poset** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = new kleene_poset(*p);
  });
}

void kleene_poset_free(kleene_poset* p) { delete p; }

size_t kleene_poset_size(const kleene_poset* p) { return p ? p->poset.size() : 0; }

const char* kleene_poset_label(const kleene_poset* p, size_t index) {
  if (!p || index >= p->poset.size()) return nullptr;
  return p->poset.label(index).c_str();
}

int kleene_poset_has_involution(const kleene_poset* p) { return p && p->inv ? 1 : 0; }

kleene_status kleene_poset_leq(const kleene_poset* p, const char* a, const char* b, int* out) {
  return guarded([&] {
    require(p, "poset");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = p->poset.leq(p->poset.index_of(a), p->poset.index_of(b)) ? 1 : 0;
  });
}

kleene_status kleene_poset_involution_of(const kleene_poset* p, const char* a, const char** out) {
  return guarded([&] {
    require(p, "poset");
    require(a, "a");
    require(out, "out");
    *out = p->poset.label(involutive(p).inv(p->poset.index_of(a))).c_str();
  });
}

kleene_status kleene_poset_set(const kleene_poset* p, const char* name, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(name, "name");
    require(out, "out");
    for (const auto& [n, s] : p->sets)
      if (n == name) {
        *out = dup_string(subset_text(p->poset, s));
        return;
      }
    fail(ErrorCode::InvalidArgument, std::string("no set named '") + name + "'");
  });
}

kleene_status kleene_poset_print(const kleene_poset* p, const char* name, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(name, "name");
    require(out, "out");
    *out = dup_string(print_poset(name, p->poset, p->inv ? &p->inv->involution() : nullptr, p->sets));
  });
}

kleene_status kleene_poset_to_dot(const kleene_poset* p, const char* name, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(name, "name");
    require(out, "out");
    *out = dup_string(to_dot(name, p->poset, p->inv ? &p->inv->involution() : nullptr));
  });
}

// --- L/U calculus ----------------------------------------------------------------

kleene_status kleene_lower_bounds(const kleene_poset* p, const char* const* subset, size_t n, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = dup_string(subset_text(p->poset, lower_bounds(p->poset, subset_from(p->poset, subset, n))));
  });
}

kleene_status kleene_upper_bounds(const kleene_poset* p, const char* const* subset, size_t n, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = dup_string(subset_text(p->poset, upper_bounds(p->poset, subset_from(p->poset, subset, n))));
  });
}

kleene_status kleene_convex_hull(const kleene_poset* p, const char* const* subset, size_t n, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = dup_string(subset_text(p->poset, convex_hull(p->poset, subset_from(p->poset, subset, n))));
  });
}

kleene_status kleene_classify(const kleene_poset* p, kleene_classification* out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    if (!p->inv) {
      const bool dist = is_distributive(p->poset);
      *out = kleene_classification{dist, 0, 0, dist && is_complemented(p->poset), 0, is_lattice(p->poset), 0};
      return;
    }
    const Classification& c = p->inv->classification();
    *out = kleene_classification{c.distributive, c.pseudo_kleene, c.kleene, c.boolean,
                                 c.ortho,        c.lattice,       c.fixed_points.count()};
  });
}

kleene_status kleene_fixed_points(const kleene_poset* p, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = dup_string(subset_text(p->poset, fixed_points(involutive(p))));
  });
}

kleene_status kleene_is_distributive(const kleene_poset* p, int* out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = is_distributive(p->poset) ? 1 : 0;
  });
}

// --- constructions -----------------------------------------------------------------

kleene_status kleene_twist_product(const kleene_poset* p, kleene_poset** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = wrap(twist_product(p->poset));
  });
}

kleene_status kleene_ps_construct(const kleene_poset* p, const char* const* subset, size_t n, kleene_poset** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = wrap(ps_construct(p->poset, subset_from(p->poset, subset, n)));
  });
}

kleene_status kleene_ordinal_sum(const kleene_poset* const* operands, size_t count, kleene_poset** out) {
  return guarded([&] {
    require(operands, "operands");
    require(out, "out");
    std::vector<Poset> ops;
    for (size_t i = 0; i < count; ++i) {
      require(operands[i], "operand");
      ops.push_back(operands[i]->poset);
    }
    *out = wrap(ordinal_sum(ops).poset);
  });
}

kleene_status kleene_direct_product(const kleene_poset* const* factors, size_t count, kleene_poset** out) {
  return guarded([&] {
    require(factors, "factors");
    require(out, "out");
    bool all_inv = count > 0;
    for (size_t i = 0; i < count; ++i) {
      require(factors[i], "factor");
      all_inv = all_inv && factors[i]->inv.has_value();
    }
    if (all_inv) {
      std::vector<InvolutivePoset> fs;
      for (size_t i = 0; i < count; ++i) fs.push_back(*factors[i]->inv);
      *out = wrap(direct_product(fs));
    } else {
      std::vector<Poset> fs;
      for (size_t i = 0; i < count; ++i) fs.push_back(factors[i]->poset);
      *out = wrap(direct_product(fs));
    }
  });
}

kleene_status kleene_dual(const kleene_poset* p, kleene_poset** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    Poset d = dual(p->poset);
    // An antitone involution stays antitone on the dual.
    *out = p->inv ? wrap(InvolutivePoset(d, p->inv->involution())) : wrap(d);
  });
}

kleene_status kleene_interval(const kleene_poset* p, const char* lo, const char* hi, kleene_poset** out) {
  return guarded([&] {
    require(p, "poset");
    require(lo, "lo");
    require(hi, "hi");
    require(out, "out");
    *out = wrap(interval(p->poset, p->poset.index_of(lo), p->poset.index_of(hi)));
  });
}

// --- completions --------------------------------------------------------------------

kleene_status kleene_complete(const kleene_poset* p, kleene_completion_kind kind, int with_involution,
                              kleene_poset** out, char** principal) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    SubsetLattice lat = kind == KLEENE_COMPLETION_G ? g_completion(p->poset) : dm_completion(p->poset);
    std::string table;
    if (principal) {
      for (Element x = 0; x < p->poset.size(); ++x)
        table += p->poset.label(x) + " " + lat.order().label(lat.principal()[x]) + "\n";
    }
    kleene_poset* r = with_involution ? wrap(with_bot_involution(lat, involutive(p))) : wrap(lat.order());
    if (principal) *principal = dup_string(table);
    *out = r;
  });
}

kleene_status kleene_compare_dm(const kleene_poset* p, const char* const* subset, size_t n, int* isomorphic,
                                size_t* left_size, size_t* right_size, char** witness) {
  return guarded([&] {
    require(p, "poset");
    require(isomorphic, "isomorphic");
    DmPsComparison cmp = dm_ps_compare(p->poset, subset_from(p->poset, subset, n));
    *isomorphic = cmp.isomorphic() ? 1 : 0;
    if (left_size) *left_size = cmp.left.size();
    if (right_size) *right_size = cmp.right.size();
    if (witness) *witness = cmp.iso ? dup_string(map_text(*cmp.iso)) : nullptr;
  });
}

// --- isomorphism --------------------------------------------------------------------

kleene_status kleene_find_isomorphism(const kleene_poset* a, const kleene_poset* b, int respect_involution,
                                      int* found, char** witness) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(found, "found");
    std::optional<PosetMap> f;
    if (respect_involution)
      f = find_isomorphism(involutive(a), involutive(b), true);
    else
      f = find_isomorphism(a->poset, b->poset);
    *found = f ? 1 : 0;
    if (witness) *witness = f ? dup_string(map_text(*f)) : nullptr;
  });
}

// --- representability ------------------------------------------------------------------

kleene_status kleene_represent(const kleene_poset* k, kleene_search_mode mode, size_t max_carrier_size,
                               size_t partitions, int pruning, kleene_representation** out) {
  return guarded([&] {
    require(k, "poset");
    require(out, "out");
    SearchConfig cfg;
    switch (mode) {
      case KLEENE_SEARCH_ODD: cfg.mode = SearchMode::OddComplete; break;
      case KLEENE_SEARCH_SUBPOSET: cfg.mode = SearchMode::Subposet; break;
      case KLEENE_SEARCH_EXHAUSTIVE: cfg.mode = SearchMode::Exhaustive; break;
      default: fail(ErrorCode::InvalidArgument, "unknown search mode");
    }
    cfg.max_carrier_size = max_carrier_size;
    cfg.partitions = partitions ? partitions : 1;
    cfg.pruning = pruning != 0;
    *out = new kleene_representation{represent(involutive(k), cfg)};
  });
}

void kleene_representation_free(kleene_representation* r) { delete r; }

kleene_verdict kleene_representation_verdict(const kleene_representation* r) {
  if (!r) return KLEENE_NOT_REPRESENTABLE_WITHIN_BOUNDS;
  switch (r->result.verdict) {
    case Verdict::Representable: return KLEENE_REPRESENTABLE;
    case Verdict::NotRepresentable: return KLEENE_NOT_REPRESENTABLE;
    default: return KLEENE_NOT_REPRESENTABLE_WITHIN_BOUNDS;
  }
}

size_t kleene_representation_candidates(const kleene_representation* r) { return r ? r->result.candidates : 0; }
size_t kleene_representation_max_carrier(const kleene_representation* r) {
  return r ? r->result.max_carrier_size : 0;
}
double kleene_representation_elapsed_ms(const kleene_representation* r) { return r ? r->result.elapsed_ms : 0; }
const char* kleene_representation_note(const kleene_representation* r) { return r ? r->result.note.c_str() : ""; }

namespace {
const Witness& witness_of(const kleene_representation* r) {
  require(r, "representation");
  if (!r->result.witness) fail(ErrorCode::InvalidArgument, "no witness");
  return *r->result.witness;
}
}  // namespace

kleene_status kleene_representation_carrier(const kleene_representation* r, kleene_poset** out) {
  return guarded([&] {
    require(out, "out");
    const Witness& w = witness_of(r);
    kleene_poset* p = wrap(w.carrier);
    p->sets.emplace_back("S", w.s);
    *out = p;
  });
}

kleene_status kleene_representation_subset(const kleene_representation* r, char** out) {
  return guarded([&] {
    require(out, "out");
    const Witness& w = witness_of(r);
    *out = dup_string(subset_text(w.carrier, w.s));
  });
}

kleene_status kleene_representation_map(const kleene_representation* r, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(map_text(witness_of(r).iso));
  });
}

}  // extern "C"
