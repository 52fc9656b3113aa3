#include "alc/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace alc {

namespace {

constexpr std::array<std::string_view, 6> kKeywords = {"top", "bot", "exists", "forall", "lfp", "gfp"};

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return std::isalnum(u) || u == '_';
  });
}

} // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<std::string> concept_names, std::vector<std::string> role_names)
    : concepts_(std::move(concept_names)), roles_(std::move(role_names)) {
  auto check = [](const std::string &n) {
    if (!is_identifier(n)) throw InvalidSignature("'" + n + "' is not a valid identifier");
    if (is_keyword(n)) throw InvalidSignature("'" + n + "' is a reserved keyword");
  };
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    check(concepts_[i]);
    if (!concept_index_.emplace(concepts_[i], i).second)
      throw InvalidSignature("concept name '" + concepts_[i] + "' declared twice");
  }
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    check(roles_[i]);
    if (concept_index_.count(roles_[i]))
      throw InvalidSignature("'" + roles_[i] + "' declared both as concept and as role");
    if (!role_index_.emplace(roles_[i], i).second)
      throw InvalidSignature("role name '" + roles_[i] + "' declared twice");
  }
}

std::optional<std::size_t> Signature::concept_index(std::string_view name) const {
  auto it = concept_index_.find(std::string(name));
  if (it == concept_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::role_index(std::string_view name) const {
  auto it = role_index_.find(std::string(name));
  if (it == role_index_.end()) return std::nullopt;
  return it->second;
}

Concept Signature::atom(std::string_view name) const {
  auto idx = concept_index(name);
  if (!idx) throw UnknownName(std::string(name), 0);
  return Concept::name(std::string(name), *idx);
}

Concept Signature::exists(std::string_view role, Concept filler) const {
  auto idx = role_index(role);
  if (!idx) throw UnknownName(std::string(role), 0);
  return Concept::exists(std::string(role), *idx, std::move(filler));
}

Concept Signature::forall(std::string_view role, Concept filler) const {
  auto idx = role_index(role);
  if (!idx) throw UnknownName(std::string(role), 0);
  return Concept::forall(std::string(role), *idx, std::move(filler));
}

Signature merge_signatures(const Signature &a, const Signature &b) {
  auto concepts = a.concept_names();
  auto roles = a.role_names();
  for (const auto &c : b.concept_names())
    if (!a.concept_index(c)) concepts.push_back(c);
  for (const auto &r : b.role_names())
    if (!a.role_index(r)) roles.push_back(r);
  return Signature(std::move(concepts), std::move(roles));
}

// ---------------------------------------------------------------------------
// Concept

Concept Concept::top() {
  static const Concept t(std::make_shared<const Node>(Node{ConceptKind::Top, {}, 0, nullptr, nullptr}));
  return t;
}

Concept Concept::bot() {
  static const Concept b(std::make_shared<const Node>(Node{ConceptKind::Bot, {}, 0, nullptr, nullptr}));
  return b;
}

Concept Concept::name(std::string name, std::size_t index) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Name, std::move(name), index, nullptr, nullptr}));
}

Concept Concept::conj(Concept lhs, Concept rhs) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::And, {}, 0,
                                                   std::make_shared<const Concept>(std::move(lhs)),
                                                   std::make_shared<const Concept>(std::move(rhs))}));
}

Concept Concept::disj(Concept lhs, Concept rhs) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Or, {}, 0,
                                                   std::make_shared<const Concept>(std::move(lhs)),
                                                   std::make_shared<const Concept>(std::move(rhs))}));
}

Concept Concept::negation(Concept operand) {
  return Concept(std::make_shared<const Node>(
      Node{ConceptKind::Not, {}, 0, std::make_shared<const Concept>(std::move(operand)), nullptr}));
}

Concept Concept::exists(std::string role, std::size_t role_index, Concept filler) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Exists, std::move(role), role_index,
                                                   std::make_shared<const Concept>(std::move(filler)), nullptr}));
}

Concept Concept::forall(std::string role, std::size_t role_index, Concept filler) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Forall, std::move(role), role_index,
                                                   std::make_shared<const Concept>(std::move(filler)), nullptr}));
}

bool operator==(const Concept &a, const Concept &b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
  case ConceptKind::Top:
  case ConceptKind::Bot:
    return true;
  case ConceptKind::Name:
    return a.label() == b.label();
  case ConceptKind::And:
  case ConceptKind::Or:
    return a.first() == b.first() && a.second() == b.second();
  case ConceptKind::Not:
    return a.first() == b.first();
  case ConceptKind::Exists:
  case ConceptKind::Forall:
    return a.label() == b.label() && a.first() == b.first();
  }
  return false;
}

std::size_t depth(const Concept &c) {
  switch (c.kind()) {
  case ConceptKind::Top:
  case ConceptKind::Bot:
  case ConceptKind::Name:
    return 0;
  case ConceptKind::And:
  case ConceptKind::Or:
    return 1 + std::max(depth(c.first()), depth(c.second()));
  default:
    return 1 + depth(c.first());
  }
}

std::size_t size(const Concept &c) {
  switch (c.kind()) {
  case ConceptKind::Top:
  case ConceptKind::Bot:
  case ConceptKind::Name:
    return 1;
  case ConceptKind::And:
  case ConceptKind::Or:
    return 1 + size(c.first()) + size(c.second());
  default:
    return 1 + size(c.first());
  }
}

bool mentions(const Concept &c, std::string_view concept_name) {
  return negation_parity(concept_name, c) != Parity::Absent;
}

Gci Gci::fixdef(Concept defined, Concept body, FixSemantics sem) {
  if (defined.kind() != ConceptKind::Name) throw WrongGciKind("a fixpoint definition must define a concept name");
  return {Kind::FixDef, std::move(defined), std::move(body), sem};
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Context levels: 0 accepts a disjunction, 1 a conjunction, 2 only a unary term.
void render_into(const Concept &c, int level, std::string &out) {
  switch (c.kind()) {
  case ConceptKind::Top:
    out += "top";
    return;
  case ConceptKind::Bot:
    out += "bot";
    return;
  case ConceptKind::Name:
    out += c.label();
    return;
  case ConceptKind::Or:
  case ConceptKind::And: {
    const bool is_or = c.kind() == ConceptKind::Or;
    const int own = is_or ? 0 : 1;
    const bool wrap = level > own;
    if (wrap) out += '(';
    render_into(c.first(), own, out);
    out += is_or ? " | " : " & ";
    render_into(c.second(), own + 1, out);
    if (wrap) out += ')';
    return;
  }
  case ConceptKind::Not:
    out += '~';
    render_into(c.first(), 2, out);
    return;
  case ConceptKind::Exists:
  case ConceptKind::Forall:
    out += c.kind() == ConceptKind::Exists ? "exists " : "forall ";
    out += c.label();
    out += " . ";
    render_into(c.first(), 2, out);
    return;
  }
}

} // namespace

std::string render(const Concept &c) {
  std::string out;
  render_into(c, 0, out);
  return out;
}

std::string render(const Gci &g) {
  switch (g.kind) {
  case Gci::Kind::Subsumes:
    return render(g.lhs) + " <= " + render(g.rhs);
  case Gci::Kind::Equiv:
    return render(g.lhs) + " == " + render(g.rhs);
  case Gci::Kind::FixDef:
    return std::string(g.semantics == FixSemantics::Lfp ? "lfp " : "gfp ") + g.defined() + " = " + render(g.rhs);
  }
  return {};
}

std::string render(const Theory &t) {
  std::string out;
  for (const auto &g : t) {
    out += render(g);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms and analyses

namespace {

Concept nnf_of(const Concept &c, bool negated) {
  switch (c.kind()) {
  case ConceptKind::Top:
    return negated ? Concept::bot() : c;
  case ConceptKind::Bot:
    return negated ? Concept::top() : c;
  case ConceptKind::Name:
    return negated ? Concept::negation(c) : c;
  case ConceptKind::Not:
    return nnf_of(c.first(), !negated);
  case ConceptKind::And:
  case ConceptKind::Or: {
    auto l = nnf_of(c.first(), negated);
    auto r = nnf_of(c.second(), negated);
    const bool make_and = (c.kind() == ConceptKind::And) != negated;
    return make_and ? Concept::conj(std::move(l), std::move(r)) : Concept::disj(std::move(l), std::move(r));
  }
  case ConceptKind::Exists:
  case ConceptKind::Forall: {
    auto f = nnf_of(c.first(), negated);
    const bool make_exists = (c.kind() == ConceptKind::Exists) != negated;
    return make_exists ? Concept::exists(c.label(), c.index(), std::move(f))
                       : Concept::forall(c.label(), c.index(), std::move(f));
  }
  }
  return c;
}

void collect_parity(std::string_view name, const Concept &c, unsigned nots, bool &even, bool &odd) {
  switch (c.kind()) {
  case ConceptKind::Top:
  case ConceptKind::Bot:
    return;
  case ConceptKind::Name:
    if (c.label() == name) (nots % 2 == 0 ? even : odd) = true;
    return;
  case ConceptKind::Not:
    collect_parity(name, c.first(), nots + 1, even, odd);
    return;
  case ConceptKind::And:
  case ConceptKind::Or:
    collect_parity(name, c.first(), nots, even, odd);
    collect_parity(name, c.second(), nots, even, odd);
    return;
  case ConceptKind::Exists:
  case ConceptKind::Forall:
    collect_parity(name, c.first(), nots, even, odd);
    return;
  }
}

} // namespace

Concept nnf(const Concept &c) { return nnf_of(c, false); }

Parity negation_parity(std::string_view concept_name, const Concept &c) {
  bool even = false;
  bool odd = false;
  collect_parity(concept_name, c, 0, even, odd);
  if (even && odd) return Parity::Mixed;
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Absent;
}

Concept substitute(const Concept &c, std::string_view concept_name, const Concept &replacement) {
  switch (c.kind()) {
  case ConceptKind::Top:
  case ConceptKind::Bot:
    return c;
  case ConceptKind::Name:
    return c.label() == concept_name ? replacement : c;
  case ConceptKind::Not:
    return Concept::negation(substitute(c.first(), concept_name, replacement));
  case ConceptKind::And:
    return Concept::conj(substitute(c.first(), concept_name, replacement),
                         substitute(c.second(), concept_name, replacement));
  case ConceptKind::Or:
    return Concept::disj(substitute(c.first(), concept_name, replacement),
                         substitute(c.second(), concept_name, replacement));
  case ConceptKind::Exists:
    return Concept::exists(c.label(), c.index(), substitute(c.first(), concept_name, replacement));
  case ConceptKind::Forall:
    return Concept::forall(c.label(), c.index(), substitute(c.first(), concept_name, replacement));
  }
  return c;
}

std::vector<Gci> unfold_cycles(const std::vector<Gci> &defs) {
  std::map<std::string, std::size_t, std::less<>> position;
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (defs[i].kind != Gci::Kind::FixDef) throw WrongGciKind("unfold_cycles expects fixpoint definitions only");
    if (!position.emplace(defs[i].defined(), i).second)
      throw IllFormedSystem("concept '" + defs[i].defined() + "' is defined more than once");
  }

  // deps[i] = definitions (other than i) whose name occurs in body i
  std::vector<std::vector<std::size_t>> deps(defs.size());
  for (std::size_t i = 0; i < defs.size(); ++i)
    for (std::size_t j = 0; j < defs.size(); ++j)
      if (i != j && mentions(defs[i].rhs, defs[j].defined())) deps[i].push_back(j);

  std::vector<Gci> out;
  out.reserve(defs.size());
  for (std::size_t i = 0; i < defs.size(); ++i) {
    // Substitution from i terminates iff the definitions reachable from i,
    // with i itself removed, form an acyclic graph.
    enum class Mark { White, Grey, Black };
    std::vector<Mark> mark(defs.size(), Mark::White);
    std::vector<std::size_t> topo; // reverse post-order = dependencies last
    std::function<void(std::size_t)> visit = [&](std::size_t j) {
      mark[j] = Mark::Grey;
      for (auto k : deps[j]) {
        if (k == i) continue;
        if (mark[k] == Mark::Grey)
          throw IllFormedSystem("definition of '" + defs[i].defined() + "' depends on the cycle through '" +
                                defs[k].defined() + "', which does not involve it");
        if (mark[k] == Mark::White) visit(k);
      }
      mark[j] = Mark::Black;
      topo.push_back(j);
    };
    for (auto j : deps[i])
      if (mark[j] == Mark::White) visit(j);

    // Resolve each reachable definition bottom-up, then substitute into body i.
    std::map<std::size_t, Concept> resolved;
    for (auto j : topo) {
      Concept body = defs[j].rhs;
      for (auto k : deps[j])
        if (k != i) body = substitute(body, defs[k].defined(), resolved.at(k));
      resolved.emplace(j, std::move(body));
    }
    Concept body = defs[i].rhs;
    for (auto j : deps[i]) body = substitute(body, defs[j].defined(), resolved.at(j));
    out.push_back(Gci::fixdef(defs[i].lhs, std::move(body), defs[i].semantics));
  }
  return out;
}

} // namespace alc
