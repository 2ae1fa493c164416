#include "kleene/format.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kleene {

const Subset* NamedPoset::find_set(std::string_view set_name) const {
  for (const auto& [n, s] : sets)
    if (n == set_name) return &s;
  return nullptr;
}

const NamedPoset* PosetDocument::find(std::string_view name) const {
  for (const auto& p : posets)
    if (p.name == name) return &p;
  return nullptr;
}

const NamedPoset& PosetDocument::get(std::string_view name) const {
  const NamedPoset* p = find(name);
  if (!p) fail(ErrorCode::InvalidArgument, "no poset named '" + std::string(name) + "'");
  return *p;
}

namespace {

struct Statement {
  int line;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail_at(ErrorCode code, int line, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg, line);
}

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

NamedPoset build_block(const std::string& name, int header_line, const std::vector<Statement>& body) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> index;
  for (const auto& st : body) {
    if (st.tokens[0] != "elem") continue;
    if (st.tokens.size() < 2) fail_at(ErrorCode::SyntaxError, st.line, "elem needs at least one id");
    for (std::size_t i = 1; i < st.tokens.size(); ++i) {
      if (!index.emplace(st.tokens[i], labels.size()).second)
        fail_at(ErrorCode::DuplicateLabel, st.line, "element '" + st.tokens[i] + "' declared twice");
      labels.push_back(st.tokens[i]);
    }
  }
  if (labels.empty()) fail_at(ErrorCode::SyntaxError, header_line, "poset '" + name + "' has no elements");
  auto lookup = [&](const Statement& st, const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) fail_at(ErrorCode::UnknownElement, st.line, "unknown element '" + id + "'");
    return it->second;
  };

  std::vector<std::pair<Element, Element>> gens;
  std::vector<std::pair<Element, Element>> inv_pairs;
  std::vector<std::pair<const Statement*, std::vector<Element>>> set_stmts;
  for (const auto& st : body) {
    const std::string& kw = st.tokens[0];
    if (kw == "elem") continue;
    if (kw == "le" || kw == "inv") {
      if (st.tokens.size() != 3) fail_at(ErrorCode::SyntaxError, st.line, kw + " takes exactly two ids");
      auto pr = std::make_pair(lookup(st, st.tokens[1]), lookup(st, st.tokens[2]));
      (kw == "le" ? gens : inv_pairs).push_back(pr);
    } else if (kw == "set") {
      if (st.tokens.size() < 2) fail_at(ErrorCode::SyntaxError, st.line, "set needs a name");
      std::vector<Element> members;
      for (std::size_t i = 2; i < st.tokens.size(); ++i) members.push_back(lookup(st, st.tokens[i]));
      set_stmts.emplace_back(&st, std::move(members));
    } else {
      fail_at(ErrorCode::SyntaxError, st.line, "unknown statement '" + kw + "'");
    }
  }

  NamedPoset out;
  out.name = name;
  out.line = header_line;
  try {
    out.poset = Poset::from_generators(labels, gens);
  } catch (const Error& e) {
    fail_at(e.code(), header_line, e.what());
  }
  if (!inv_pairs.empty()) {
    constexpr Element kUnset = static_cast<Element>(-1);
    std::vector<Element> inv(labels.size(), kUnset);
    for (auto [x, y] : inv_pairs) {
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        if (inv[p] != kUnset && inv[p] != q)
          fail_at(ErrorCode::NotInvolutive, header_line, "conflicting images for '" + labels[p] + "'");
        inv[p] = q;
      }
    }
    for (Element x = 0; x < labels.size(); ++x)
      if (inv[x] == kUnset) fail_at(ErrorCode::NotInvolutive, header_line, "no image given for '" + labels[x] + "'");
    try {
      out.involutive.emplace(out.poset, std::move(inv));
    } catch (const Error& e) {
      fail_at(e.code(), header_line, e.what());
    }
  }
  for (const auto& [st, members] : set_stmts) {
    const std::string& set_name = st->tokens[1];
    for (const auto& [n, s] : out.sets)
      if (n == set_name) fail_at(ErrorCode::SyntaxError, st->line, "set '" + set_name + "' defined twice");
    out.sets.emplace_back(set_name, out.poset.subset_of(members));
  }
  return out;
}

}  // namespace

PosetDocument parse_document(std::string_view text) {
  PosetDocument doc;
  std::optional<std::string> open_name;
  int open_line = 0;
  std::vector<Statement> body;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "poset") {
      if (open_name) fail_at(ErrorCode::SyntaxError, line_no, "nested poset block (missing 'end')");
      if (tokens.size() != 2) fail_at(ErrorCode::SyntaxError, line_no, "expected 'poset NAME'");
      if (doc.find(tokens[1])) fail_at(ErrorCode::SyntaxError, line_no, "poset '" + tokens[1] + "' defined twice");
      open_name = tokens[1];
      open_line = line_no;
      body.clear();
    } else if (tokens[0] == "end") {
      if (!open_name) fail_at(ErrorCode::SyntaxError, line_no, "'end' outside a poset block");
      if (tokens.size() != 1) fail_at(ErrorCode::SyntaxError, line_no, "'end' takes no arguments");
      doc.posets.push_back(build_block(*open_name, open_line, body));
      open_name.reset();
    } else {
      if (!open_name) fail_at(ErrorCode::SyntaxError, line_no, "statement outside a poset block");
      body.push_back({line_no, std::move(tokens)});
    }
  }
  if (open_name) fail_at(ErrorCode::SyntaxError, line_no, "poset '" + *open_name + "' is not closed with 'end'");
  if (doc.posets.empty()) fail_at(ErrorCode::SyntaxError, line_no, "no poset blocks found");
  return doc;
}

PosetDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string print_poset(const std::string& name, const Poset& p, const std::vector<Element>* involution,
                        const std::vector<std::pair<std::string, Subset>>& sets) {
  std::ostringstream os;
  os << "poset " << name << '\n';
  constexpr std::size_t kPerLine = 12;
  for (Element x = 0; x < p.size(); x += kPerLine) {
    os << "  elem";
    for (Element y = x; y < std::min(p.size(), x + kPerLine); ++y) os << ' ' << p.label(y);
    os << '\n';
  }
  for (auto [x, y] : p.covers()) os << "  le " << p.label(x) << ' ' << p.label(y) << '\n';
  if (involution)
    for (Element x = 0; x < p.size(); ++x)
      if (x <= (*involution)[x]) os << "  inv " << p.label(x) << ' ' << p.label((*involution)[x]) << '\n';
  for (const auto& [set_name, s] : sets) {
    os << "  set " << set_name;
    s.for_each([&](std::size_t x) { os << ' ' << p.label(x); });
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

std::string print_document(const PosetDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.posets.size(); ++i) {
    const auto& np = doc.posets[i];
    if (i) out += '\n';
    out += print_poset(np.name, np.poset, np.involutive ? &np.involutive->involution() : nullptr, np.sets);
  }
  return out;
}

namespace {
std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}
}  // namespace

std::string to_dot(const std::string& name, const Poset& p, const std::vector<Element>* involution) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  os << "  rankdir=BT;\n";
  for (Element x = 0; x < p.size(); ++x) os << "  " << dot_quote(p.label(x)) << ";\n";
  for (auto [x, y] : p.covers()) os << "  " << dot_quote(p.label(x)) << " -> " << dot_quote(p.label(y)) << ";\n";
  if (involution)
    for (Element x = 0; x < p.size(); ++x) {
      const Element y = (*involution)[x];
      if (x < y)
        os << "  " << dot_quote(p.label(x)) << " -> " << dot_quote(p.label(y))
           << " [dir=none, style=dashed, constraint=false];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace kleene
