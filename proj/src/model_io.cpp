// Reader and writer for the line-oriented .alcm model format:
//
//   signature
//     concepts Husband Wife Male Female
//     roles marriedTo
//   model
//     domain Homer Marge
//     concept Male = { Homer }
//     role marriedTo = { (Homer, Marge) (Marge, Homer) }
//
// A '#' starting a token opens a comment; inside an individual name (as in
// the coproduct's "0#Homer") it is an ordinary character.

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alc/semantics.hpp"

namespace alc {

namespace {

bool word_start(char ch) {
  auto u = static_cast<unsigned char>(ch);
  return std::isalnum(u) || u == '_';
}

bool word_char(char ch) { return word_start(ch) || ch == '#'; }

struct Tok {
  std::string text;
  bool punct;
};

std::vector<Tok> split(std::string_view line, std::size_t line_no) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '#') {
      break;
    } else if (word_start(ch)) {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j])) ++j;
      out.push_back({std::string(line.substr(i, j - i)), false});
      i = j;
    } else if (ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == ',' || ch == '=') {
      out.push_back({std::string(1, ch), true});
      ++i;
    } else {
      throw InvalidModel(std::string("unexpected character '") + ch + "'", line_no);
    }
  }
  return out;
}

class LineReader {
public:
  LineReader(std::vector<Tok> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  bool done() const { return pos_ == toks_.size(); }

  const Tok &peek() const {
    if (done()) fail("unexpected end of line");
    return toks_[pos_];
  }

  std::string word() {
    const Tok &t = peek();
    if (t.punct) fail("expected a name, found '" + t.text + "'");
    ++pos_;
    return t.text;
  }

  void expect(char p) {
    const Tok &t = peek();
    if (!t.punct || t.text[0] != p) fail(std::string("expected '") + p + "', found '" + t.text + "'");
    ++pos_;
  }

  bool accept(char p) {
    if (!done() && toks_[pos_].punct && toks_[pos_].text[0] == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  void finish() const {
    if (!done()) fail("unexpected trailing input '" + toks_[pos_].text + "'");
  }

  [[noreturn]] void fail(const std::string &msg) const { throw InvalidModel(msg, line_); }

private:
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

} // namespace

bool is_individual_name(std::string_view name) {
  if (name.empty() || !word_start(name.front())) return false;
  for (char ch : name)
    if (!word_char(ch)) return false;
  return true;
}

Interpretation parse_model(std::string_view text) {
  enum class Section { None, Signature, Model };
  Section section = Section::None;
  std::optional<std::vector<std::string>> concepts, roles, domain;
  std::optional<Signature> sig;
  std::map<std::string, std::size_t> individual_of;
  std::vector<std::optional<Subset>> concept_ext;
  std::vector<std::optional<std::vector<Interpretation::Edge>>> role_ext;

  auto individual = [&](LineReader &r) {
    auto name = r.word();
    auto it = individual_of.find(name);
    if (it == individual_of.end()) r.fail("unknown individual '" + name + "'");
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    auto toks = split(raw, line_no);
    if (toks.empty()) continue;
    last_line = line_no;
    LineReader r(std::move(toks), line_no);
    const std::string head = r.word();

    if (head == "signature") {
      if (section != Section::None) r.fail("'signature' must come first and only once");
      section = Section::Signature;
    } else if (head == "model") {
      if (section != Section::Signature) r.fail("'model' must follow the signature section");
      section = Section::Model;
      try {
        sig.emplace(concepts.value_or(std::vector<std::string>{}), roles.value_or(std::vector<std::string>{}));
      } catch (const InvalidSignature &e) {
        r.fail(e.what());
      }
      concept_ext.assign(sig->concept_names().size(), std::nullopt);
      role_ext.assign(sig->role_names().size(), std::nullopt);
    } else if (head == "concepts" || head == "roles") {
      if (section != Section::Signature) r.fail("'" + head + "' belongs to the signature section");
      auto &target = head == "concepts" ? concepts : roles;
      if (target) r.fail("duplicate '" + head + "' line");
      target.emplace();
      while (!r.done()) target->push_back(r.word());
    } else if (head == "domain") {
      if (section != Section::Model) r.fail("'domain' belongs to the model section");
      if (domain) r.fail("duplicate 'domain' line");
      domain.emplace();
      while (!r.done()) {
        auto name = r.word();
        if (!individual_of.emplace(name, domain->size()).second) r.fail("individual '" + name + "' declared twice");
        domain->push_back(name);
      }
      if (domain->empty()) r.fail("the domain must be nonempty");
    } else if (head == "concept" || head == "role") {
      if (section != Section::Model) r.fail("'" + head + "' belongs to the model section");
      if (!domain) r.fail("'domain' must precede extensions");
      const auto name = r.word();
      r.expect('=');
      r.expect('{');
      if (head == "concept") {
        auto idx = sig->concept_index(name);
        if (!idx) r.fail("'" + name + "' is not a declared concept name");
        if (concept_ext[*idx]) r.fail("duplicate extension for concept '" + name + "'");
        Subset ext(domain->size());
        while (!r.accept('}')) {
          ext.set(individual(r));
          r.accept(',');
        }
        concept_ext[*idx] = std::move(ext);
      } else {
        auto idx = sig->role_index(name);
        if (!idx) r.fail("'" + name + "' is not a declared role name");
        if (role_ext[*idx]) r.fail("duplicate extension for role '" + name + "'");
        std::vector<Interpretation::Edge> edges;
        while (!r.accept('}')) {
          r.expect('(');
          auto a = individual(r);
          r.expect(',');
          auto b = individual(r);
          r.expect(')');
          r.accept(',');
          edges.emplace_back(a, b);
        }
        role_ext[*idx] = std::move(edges);
      }
    } else {
      r.fail("unknown directive '" + head + "'");
    }
    r.finish();
  }

  if (section != Section::Model) throw InvalidModel("missing 'model' section", last_line);
  if (!domain) throw InvalidModel("missing 'domain' line", last_line);
  std::vector<Subset> concepts_out;
  for (std::size_t c = 0; c < concept_ext.size(); ++c) {
    if (!concept_ext[c]) throw InvalidModel("no extension given for concept '" + sig->concept_names()[c] + "'", last_line);
    concepts_out.push_back(std::move(*concept_ext[c]));
  }
  std::vector<std::vector<Interpretation::Edge>> roles_out;
  for (std::size_t r = 0; r < role_ext.size(); ++r) {
    if (!role_ext[r]) throw InvalidModel("no extension given for role '" + sig->role_names()[r] + "'", last_line);
    roles_out.push_back(std::move(*role_ext[r]));
  }
  return Interpretation(*sig, *domain, std::move(concepts_out), std::move(roles_out));
}

std::string write_model(const Interpretation &i) {
  const auto &sig = i.signature();
  std::string out = "signature\n  concepts";
  for (const auto &c : sig.concept_names()) out += " " + c;
  out += "\n  roles";
  for (const auto &r : sig.role_names()) out += " " + r;
  out += "\nmodel\n  domain";
  for (const auto &a : i.individuals()) out += " " + a;
  out += '\n';
  for (std::size_t c = 0; c < sig.concept_names().size(); ++c) {
    out += "  concept " + sig.concept_names()[c] + " = {";
    const auto &ext = i.concept_extension(c);
    bool first = true;
    for (auto a = ext.find_first(); a != Subset::npos; a = ext.find_next(a)) {
      out += first ? " " : ", ";
      out += i.individual(a);
      first = false;
    }
    out += " }\n";
  }
  for (std::size_t r = 0; r < sig.role_names().size(); ++r) {
    out += "  role " + sig.role_names()[r] + " = {";
    for (auto [a, b] : i.role_edges(r)) out += " (" + i.individual(a) + ", " + i.individual(b) + ")";
    out += " }\n";
  }
  return out;
}

} // namespace alc
