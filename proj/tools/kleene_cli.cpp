// kleene: command-line front end over the C library interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kleene/kleene.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

// Failure inside a command; carries the exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

void check(kleene_status st) {
  if (st == KLEENE_OK) return;
  std::string msg = std::string(kleene_status_name(st)) + ": " + kleene_last_error();
  const bool usage = st == KLEENE_E_SYNTAX || st == KLEENE_E_IO || st == KLEENE_E_INVALID_ARGUMENT ||
                     st == KLEENE_E_UNKNOWN_ELEMENT || st == KLEENE_E_DUPLICATE_LABEL;
  throw CommandError{usage ? kExitUsage : kExitNegative, msg};
}

struct PosetFree {
  void operator()(kleene_poset* p) const { kleene_poset_free(p); }
};
struct DocFree {
  void operator()(kleene_document* d) const { kleene_document_free(d); }
};
struct ReprFree {
  void operator()(kleene_representation* r) const { kleene_representation_free(r); }
};
using PosetPtr = std::unique_ptr<kleene_poset, PosetFree>;
using DocPtr = std::unique_ptr<kleene_document, DocFree>;
using ReprPtr = std::unique_ptr<kleene_representation, ReprFree>;

std::string take(char* s) {
  std::string out = s ? s : "";
  kleene_string_free(s);
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::vector<std::pair<std::string, std::string>> map_lines(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(s);
  for (std::string a, b; is >> a >> b;) out.emplace_back(a, b);
  return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

DocPtr load(const std::string& path) {
  kleene_document* d = nullptr;
  check(kleene_document_load(path.c_str(), &d));
  return DocPtr(d);
}

PosetPtr get(const kleene_document* doc, const std::string& name) {
  kleene_poset* p = nullptr;
  check(kleene_document_get(doc, name.c_str(), &p));
  return PosetPtr(p);
}

// Default: the first poset in the file.
PosetPtr get_or_first(const kleene_document* doc, const std::string& name) {
  if (!name.empty()) return get(doc, name);
  return get(doc, kleene_document_name(doc, 0));
}

std::vector<std::string> labels_of(const kleene_poset* p) {
  std::vector<std::string> out;
  for (size_t i = 0; i < kleene_poset_size(p); ++i) out.emplace_back(kleene_poset_label(p, i));
  return out;
}

// A named set of the poset, a single label, or a list of labels separated by
// whitespace (or by commas when there is no whitespace).
std::vector<std::string> resolve_set(const kleene_poset* p, const std::string& spec) {
  char* text = nullptr;
  if (kleene_poset_set(p, spec.c_str(), &text) == KLEENE_OK) return split_ws(take(text));
  for (const auto& l : labels_of(p))
    if (l == spec) return {spec};
  std::vector<std::string> out = split_ws(spec);
  if (out.size() == 1) {
    out.clear();
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw CommandError{kExitUsage, "empty set '" + spec + "'"};
  return out;
}

std::string braces(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "}";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError{kExitUsage, "cannot write '" + path + "'"};
  out << text;
}

// --- commands ------------------------------------------------------------------

struct CheckArgs {
  std::string file, poset;
  bool json = false;
};

int run_check(const CheckArgs& a) {
  DocPtr doc = load(a.file);
  PosetPtr p = get(doc.get(), a.poset);
  kleene_classification c{};
  check(kleene_classify(p.get(), &c));
  const bool inv = kleene_poset_has_involution(p.get());
  std::string verdict;
  if (!inv)
    verdict = c.distributive ? "distributive poset" : "poset";
  else if (c.kleene)
    verdict = c.lattice ? "Kleene lattice" : "Kleene poset";
  else if (c.pseudo_kleene)
    verdict = c.lattice ? "pseudo-Kleene lattice" : "pseudo-Kleene poset";
  else
    verdict = "involutive poset (not pseudo-Kleene)";
  std::vector<std::string> fixed;
  if (inv) fixed = split_ws(take([&] {
    char* s = nullptr;
    check(kleene_fixed_points(p.get(), &s));
    return s;
  }()));

  if (a.json) {
    json j{{"poset", a.poset},     {"size", kleene_poset_size(p.get())}, {"verdict", verdict},
           {"involution", inv},    {"distributive", bool(c.distributive)}, {"lattice", bool(c.lattice)},
           {"boolean", bool(c.boolean)}};
    if (inv) {
      j["pseudo_kleene"] = bool(c.pseudo_kleene);
      j["kleene"] = bool(c.kleene);
      j["ortho"] = bool(c.ortho);
      j["fixed_points"] = fixed;
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  auto yn = [](int b) { return b ? "yes" : "no"; };
  std::cout << "poset: " << a.poset << " (" << kleene_poset_size(p.get()) << " elements)\n";
  std::cout << "verdict: " << verdict << '\n';
  std::cout << "distributive: " << yn(c.distributive) << '\n';
  std::cout << "lattice: " << yn(c.lattice) << '\n';
  std::cout << "Boolean: " << yn(c.boolean) << '\n';
  if (inv) {
    std::cout << "pseudo-Kleene: " << yn(c.pseudo_kleene) << '\n';
    std::cout << "Kleene: " << yn(c.kleene) << '\n';
    std::cout << "orthocomplemented: " << yn(c.ortho) << '\n';
    std::cout << "fixed points: " << braces(fixed) << '\n';
  }
  return kExitOk;
}

struct ConstructArgs {
  std::string kind, file, out, name, set, lo, hi;
  std::vector<std::string> posets;
};

int run_construct(const ConstructArgs& a) {
  DocPtr doc = load(a.file);
  std::vector<PosetPtr> ops;
  for (const auto& n : a.posets) ops.push_back(get(doc.get(), n));
  auto need = [&](size_t lo, size_t hi) {
    if (ops.size() < lo || ops.size() > hi)
      throw CommandError{kExitUsage, "construct " + a.kind + " takes " + std::to_string(lo) +
                                         (hi > lo ? " or more" : "") + " --poset option(s)"};
  };
  kleene_poset* r = nullptr;
  std::vector<const kleene_poset*> raw;
  for (auto& o : ops) raw.push_back(o.get());
  if (a.kind == "twist") {
    need(1, 1);
    check(kleene_twist_product(raw[0], &r));
  } else if (a.kind == "ps") {
    need(1, 1);
    if (a.set.empty()) throw CommandError{kExitUsage, "construct ps needs --set"};
    auto s = resolve_set(raw[0], a.set);
    auto cs = c_strings(s);
    check(kleene_ps_construct(raw[0], cs.data(), cs.size(), &r));
  } else if (a.kind == "osum2") {
    need(2, 2);
    check(kleene_ordinal_sum(raw.data(), raw.size(), &r));
  } else if (a.kind == "osum3") {
    need(3, 3);
    check(kleene_ordinal_sum(raw.data(), raw.size(), &r));
  } else if (a.kind == "product") {
    need(1, 64);
    check(kleene_direct_product(raw.data(), raw.size(), &r));
  } else if (a.kind == "dual") {
    need(1, 1);
    check(kleene_dual(raw[0], &r));
  } else if (a.kind == "interval") {
    need(1, 1);
    if (a.lo.empty() || a.hi.empty()) throw CommandError{kExitUsage, "construct interval needs --lo and --hi"};
    check(kleene_interval(raw[0], a.lo.c_str(), a.hi.c_str(), &r));
  } else {
    throw CommandError{kExitUsage, "unknown construction '" + a.kind + "'"};
  }
  PosetPtr result(r);
  std::string name = a.name.empty() ? a.kind + "_" + a.posets[0] : a.name;
  char* text = nullptr;
  check(kleene_poset_print(result.get(), name.c_str(), &text));
  std::string body = take(text);
  if (a.out.empty() || a.out == "-")
    std::cout << body;
  else {
    write_file(a.out, body);
    std::cout << "wrote " << name << " (" << kleene_poset_size(result.get()) << " elements) to " << a.out << '\n';
  }
  return kExitOk;
}

struct CompleteArgs {
  std::string kind, file, poset, out;
  bool involution = false, json = false;
};

int run_complete(const CompleteArgs& a) {
  DocPtr doc = load(a.file);
  PosetPtr p = get(doc.get(), a.poset);
  if (a.kind != "dm" && a.kind != "g") throw CommandError{kExitUsage, "completion kind must be dm or g"};
  kleene_poset* r = nullptr;
  char* table = nullptr;
  check(kleene_complete(p.get(), a.kind == "g" ? KLEENE_COMPLETION_G : KLEENE_COMPLETION_DM, a.involution, &r,
                        &table));
  PosetPtr lat(r);
  auto principal = map_lines(take(table));
  auto members = labels_of(lat.get());
  std::vector<std::pair<std::string, std::string>> bot;
  if (a.involution)
    for (const auto& m : members) {
      const char* img = nullptr;
      check(kleene_poset_involution_of(lat.get(), m.c_str(), &img));
      bot.emplace_back(m, img);
    }
  if (!a.out.empty()) {
    char* text = nullptr;
    check(kleene_poset_print(lat.get(), (a.kind + "_" + a.poset).c_str(), &text));
    write_file(a.out, take(text));
  }
  if (a.json) {
    json j{{"poset", a.poset}, {"completion", a.kind}, {"members", members}};
    json pr = json::object();
    for (auto& [x, m] : principal) pr[x] = m;
    j["principal"] = pr;
    if (a.involution) {
      json b = json::object();
      for (auto& [x, y] : bot) b[x] = y;
      j["involution"] = b;
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << (a.kind == "dm" ? "DM" : "G") << " completion of " << a.poset << ": " << members.size()
            << " members\n";
  for (const auto& m : members) std::cout << "  " << m << '\n';
  std::cout << "principal embedding:\n";
  for (auto& [x, m] : principal) std::cout << "  " << x << " -> " << m << '\n';
  if (a.involution) {
    std::cout << "involution X -> L(X'):\n";
    for (auto& [x, y] : bot) std::cout << "  " << x << " -> " << y << '\n';
  }
  return kExitOk;
}

struct CompareArgs {
  std::string file, poset, set;
  bool json = false;
};

int run_compare(const CompareArgs& a) {
  DocPtr doc = load(a.file);
  PosetPtr p = get(doc.get(), a.poset);
  auto s = resolve_set(p.get(), a.set);
  auto cs = c_strings(s);
  int iso = 0;
  size_t left = 0, right = 0;
  char* witness = nullptr;
  check(kleene_compare_dm(p.get(), cs.data(), cs.size(), &iso, &left, &right, &witness));
  auto map = map_lines(take(witness));
  if (a.json) {
    json j{{"poset", a.poset}, {"set", s}, {"left_size", left}, {"right_size", right}, {"isomorphic", bool(iso)}};
    if (iso) {
      json w = json::object();
      for (auto& [x, y] : map) w[x] = y;
      j["witness"] = w;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "DM(P_S(A)): " << left << " elements\n";
    std::cout << "P_L(S)(DM(A)): " << right << " elements\n";
    std::cout << "verdict: " << (iso ? "isomorphic" : "not isomorphic") << '\n';
    if (iso)
      for (auto& [x, y] : map) std::cout << "  " << x << " -> " << y << '\n';
  }
  return iso ? kExitOk : kExitNegative;
}

struct RepresentArgs {
  std::string file, poset, mode = "subposet";
  size_t max_size = 0, partitions = 1;
  bool no_pruning = false, json = false;
};

int run_represent(const RepresentArgs& a) {
  DocPtr doc = load(a.file);
  PosetPtr p = get(doc.get(), a.poset);
  kleene_search_mode mode;
  if (a.mode == "odd")
    mode = KLEENE_SEARCH_ODD;
  else if (a.mode == "subposet")
    mode = KLEENE_SEARCH_SUBPOSET;
  else if (a.mode == "exhaustive")
    mode = KLEENE_SEARCH_EXHAUSTIVE;
  else
    throw CommandError{kExitUsage, "unknown mode '" + a.mode + "'"};
  kleene_representation* raw = nullptr;
  check(kleene_represent(p.get(), mode, a.max_size, a.partitions, a.no_pruning ? 0 : 1, &raw));
  ReprPtr r(raw);
  const kleene_verdict v = kleene_representation_verdict(r.get());
  const size_t bound = kleene_representation_max_carrier(r.get());
  const std::string note = kleene_representation_note(r.get());
  std::string verdict;
  switch (v) {
    case KLEENE_REPRESENTABLE: verdict = "Representable"; break;
    case KLEENE_NOT_REPRESENTABLE: verdict = "NotRepresentable (odd-complete)"; break;
    default: verdict = "NotRepresentableWithinBounds (max carrier size " + std::to_string(bound) + ")"; break;
  }
  std::string carrier_text, subset_text, map_text;
  if (v == KLEENE_REPRESENTABLE) {
    kleene_poset* c = nullptr;
    check(kleene_representation_carrier(r.get(), &c));
    PosetPtr carrier(c);
    char* t = nullptr;
    check(kleene_poset_print(carrier.get(), "A", &t));
    carrier_text = take(t);
    check(kleene_representation_subset(r.get(), &t));
    subset_text = take(t);
    check(kleene_representation_map(r.get(), &t));
    map_text = take(t);
  }
  std::cerr << "elapsed: " << kleene_representation_elapsed_ms(r.get()) << " ms\n";

  if (a.json) {
    json j{{"poset", a.poset},
           {"mode", a.mode},
           {"verdict", v == KLEENE_REPRESENTABLE       ? "Representable"
                       : v == KLEENE_NOT_REPRESENTABLE ? "NotRepresentable"
                                                       : "NotRepresentableWithinBounds"},
           {"max_carrier_size", bound},
           {"candidates", kleene_representation_candidates(r.get())}};
    if (!note.empty()) j["note"] = note;
    if (v == KLEENE_REPRESENTABLE) {
      j["witness"] = {{"carrier", carrier_text}, {"S", split_ws(subset_text)}};
      json m = json::object();
      for (auto& [x, y] : map_lines(map_text)) m[x] = y;
      j["witness"]["map"] = m;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "verdict: " << verdict << '\n';
    std::cout << "mode: " << a.mode << '\n';
    std::cout << "max carrier size: " << bound << '\n';
    std::cout << "candidates: " << kleene_representation_candidates(r.get()) << '\n';
    if (!note.empty()) std::cout << "note: " << note << '\n';
    if (v == KLEENE_REPRESENTABLE) {
      std::cout << "witness:\n" << carrier_text;
      std::cout << "S: " << braces(split_ws(subset_text)) << '\n';
      std::cout << "map:\n";
      for (auto& [x, y] : map_lines(map_text)) std::cout << "  " << x << " -> " << y << '\n';
    }
  }
  return v == KLEENE_REPRESENTABLE ? kExitOk : kExitNegative;
}

struct IsoArgs {
  std::string file_a, file_b, poset_a, poset_b;
  bool involution = false, json = false;
};

int run_iso(const IsoArgs& a) {
  DocPtr da = load(a.file_a);
  DocPtr db = load(a.file_b);
  PosetPtr pa = get_or_first(da.get(), a.poset_a);
  PosetPtr pb = get_or_first(db.get(), a.poset_b);
  int found = 0;
  char* witness = nullptr;
  check(kleene_find_isomorphism(pa.get(), pb.get(), a.involution, &found, &witness));
  auto map = map_lines(take(witness));
  if (a.json) {
    json j{{"isomorphic", bool(found)}};
    if (found) {
      json w = json::object();
      for (auto& [x, y] : map) w[x] = y;
      j["witness"] = w;
    }
    std::cout << j.dump(2) << '\n';
  } else if (found) {
    std::cout << "isomorphic\n";
    for (auto& [x, y] : map) std::cout << "  " << x << " -> " << y << '\n';
  } else {
    std::cout << "not isomorphic\n";
  }
  return found ? kExitOk : kExitNegative;
}

struct ExportArgs {
  std::string format, file, poset, out;
};

int run_export(const ExportArgs& a) {
  if (a.format != "dot") throw CommandError{kExitUsage, "only 'dot' export is supported"};
  DocPtr doc = load(a.file);
  PosetPtr p = get(doc.get(), a.poset);
  char* text = nullptr;
  check(kleene_poset_to_dot(p.get(), a.poset.c_str(), &text));
  std::string dot = take(text);
  if (a.out.empty() || a.out == "-")
    std::cout << dot;
  else
    write_file(a.out, dot);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("KLEENE_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0') {
      std::cerr << "error: KLEENE_SIZE_CAP must be a positive integer\n";
      return kExitUsage;
    }
    kleene_set_size_cap(static_cast<size_t>(v));
  }

  CLI::App app{"Finite posets, antitone involutions and Kleene structures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kleene 0.1.0");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Classify a poset and its involution");
  check_cmd->add_option("file", check_args.file, "poset file")->required();
  check_cmd->add_option("--poset", check_args.poset, "poset name")->required();
  check_cmd->add_flag("--json", check_args.json, "machine-readable output");

  ConstructArgs cons;
  auto* cons_cmd = app.add_subcommand("construct", "Build a new poset");
  cons_cmd->add_option("kind", cons.kind, "twist|ps|osum2|osum3|product|dual|interval")
      ->required()
      ->check(CLI::IsMember({"twist", "ps", "osum2", "osum3", "product", "dual", "interval"}));
  cons_cmd->add_option("file", cons.file, "poset file")->required();
  cons_cmd->add_option("--poset", cons.posets, "operand poset(s), in order")->required()->take_all();
  cons_cmd->add_option("--set", cons.set, "S for ps: a set name or labels separated by spaces or commas");
  cons_cmd->add_option("--lo", cons.lo, "lower end for interval");
  cons_cmd->add_option("--hi", cons.hi, "upper end for interval");
  cons_cmd->add_option("--name", cons.name, "name of the result");
  cons_cmd->add_option("--out", cons.out, "output file (default stdout)");

  CompleteArgs comp;
  auto* comp_cmd = app.add_subcommand("complete", "Dedekind-MacNeille or G completion");
  comp_cmd->add_option("kind", comp.kind, "dm|g")->required()->check(CLI::IsMember({"dm", "g"}));
  comp_cmd->add_option("file", comp.file, "poset file")->required();
  comp_cmd->add_option("--poset", comp.poset, "poset name")->required();
  comp_cmd->add_flag("--involution", comp.involution, "also report X -> L(X')");
  comp_cmd->add_option("--out", comp.out, "write the completion lattice to a file");
  comp_cmd->add_flag("--json", comp.json, "machine-readable output");

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare-dm", "Compare DM(P_S(A)) with P_L(S)(DM(A))");
  cmp_cmd->add_option("file", cmp.file, "poset file")->required();
  cmp_cmd->add_option("--poset", cmp.poset, "poset name")->required();
  cmp_cmd->add_option("--set", cmp.set, "set name or labels separated by spaces or commas")->required();
  cmp_cmd->add_flag("--json", cmp.json, "machine-readable output");

  RepresentArgs rep;
  auto* rep_cmd = app.add_subcommand("represent", "Search for A, S with K isomorphic to P_S(A)");
  rep_cmd->add_option("file", rep.file, "poset file")->required();
  rep_cmd->add_option("--poset", rep.poset, "poset name")->required();
  rep_cmd->add_option("--mode", rep.mode, "odd|subposet|exhaustive")
      ->check(CLI::IsMember({"odd", "subposet", "exhaustive"}));
  rep_cmd->add_option("--max-size", rep.max_size, "largest carrier A to try (0: |K|)");
  rep_cmd->add_option("--partitions", rep.partitions, "parallel work partitions")->check(CLI::PositiveNumber);
  rep_cmd->add_flag("--no-pruning", rep.no_pruning, "disable the pruning rules");
  rep_cmd->add_flag("--json", rep.json, "machine-readable output");

  IsoArgs iso;
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test between two posets");
  iso_cmd->add_option("fileA", iso.file_a, "first file")->required();
  iso_cmd->add_option("fileB", iso.file_b, "second file")->required();
  iso_cmd->add_option("--poset-a", iso.poset_a, "poset in the first file (default: first)");
  iso_cmd->add_option("--poset-b", iso.poset_b, "poset in the second file (default: first)");
  iso_cmd->add_flag("--involution", iso.involution, "require the map to commute with the involutions");
  iso_cmd->add_flag("--json", iso.json, "machine-readable output");

  ExportArgs exp;
  auto* exp_cmd = app.add_subcommand("export", "Export a Hasse diagram");
  exp_cmd->add_option("format", exp.format, "dot")->required()->check(CLI::IsMember({"dot"}));
  exp_cmd->add_option("file", exp.file, "poset file")->required();
  exp_cmd->add_option("--poset", exp.poset, "poset name")->required();
  exp_cmd->add_option("--out", exp.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check_cmd) return run_check(check_args);
    if (*cons_cmd) return run_construct(cons);
    if (*comp_cmd) return run_complete(comp);
    if (*cmp_cmd) return run_compare(cmp);
    if (*rep_cmd) return run_represent(rep);
    if (*iso_cmd) return run_iso(iso);
    if (*exp_cmd) return run_export(exp);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
  return kExitUsage;
}
