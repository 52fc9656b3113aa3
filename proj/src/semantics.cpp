#include "alc/semantics.hpp"

#include <unordered_set>

namespace alc {

Interpretation::Interpretation(Signature sig, std::vector<std::string> individuals, std::vector<Subset> concept_ext,
                               std::vector<std::vector<Edge>> role_ext)
    : sig_(std::move(sig)), individuals_(std::move(individuals)), concept_ext_(std::move(concept_ext)) {
  const std::size_t n = individuals_.size();
  if (n == 0) throw InvalidModel("the carrier must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto &name : individuals_)
    if (!seen.insert(name).second) throw InvalidModel("individual '" + name + "' declared twice");
  if (concept_ext_.size() != sig_.concept_names().size())
    throw InvalidModel("expected one extension per concept name");
  for (std::size_t c = 0; c < concept_ext_.size(); ++c)
    if (concept_ext_[c].size() != n)
      throw InvalidModel("extension of '" + sig_.concept_names()[c] + "' does not match the carrier size");
  if (role_ext.size() != sig_.role_names().size()) throw InvalidModel("expected one extension per role name");
  succ_.assign(role_ext.size(), std::vector<Subset>(n, Subset(n)));
  for (std::size_t r = 0; r < role_ext.size(); ++r) {
    for (auto [a, b] : role_ext[r]) {
      if (a >= n || b >= n) throw InvalidModel("pair of '" + sig_.role_names()[r] + "' outside the carrier");
      succ_[r][a].set(b);
    }
  }
}

std::optional<std::size_t> Interpretation::individual_index(std::string_view name) const {
  for (std::size_t i = 0; i < individuals_.size(); ++i)
    if (individuals_[i] == name) return i;
  return std::nullopt;
}

const Subset &Interpretation::concept_extension(std::string_view name) const {
  auto idx = sig_.concept_index(name);
  if (!idx) throw UnknownName(std::string(name), 0);
  return concept_ext_[*idx];
}

std::vector<Interpretation::Edge> Interpretation::role_edges(std::size_t role_idx) const {
  std::vector<Edge> out;
  const auto &rows = succ_.at(role_idx);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (auto b = rows[a].find_first(); b != Subset::npos; b = rows[a].find_next(b)) out.emplace_back(a, b);
  return out;
}

Subset Interpretation::role_domain(std::size_t role_idx) const {
  Subset out(size());
  const auto &rows = succ_.at(role_idx);
  for (std::size_t a = 0; a < rows.size(); ++a)
    if (rows[a].any()) out.set(a);
  return out;
}

Subset Interpretation::color(std::size_t a) const {
  Subset out(concept_ext_.size());
  for (std::size_t c = 0; c < concept_ext_.size(); ++c)
    if (concept_ext_[c].test(a)) out.set(c);
  return out;
}

Interpretation Interpretation::with_concept_extension(std::size_t concept_idx, Subset ext) const {
  if (ext.size() != size()) throw InvalidModel("extension does not match the carrier size");
  Interpretation copy = *this;
  copy.concept_ext_.at(concept_idx) = std::move(ext);
  return copy;
}

Valuation make_valuation(const Interpretation &i, std::string_view fixname) {
  auto idx = i.signature().concept_index(fixname);
  if (!idx) throw UnknownName(std::string(fixname), 0);
  return i.with_concept_extension(*idx, i.empty_set());
}

namespace {

struct Binding {
  std::string_view name;
  const Subset *value;
};

Subset evaluate(const Concept &c, const Interpretation &i, const Binding *bound) {
  switch (c.kind()) {
  case ConceptKind::Top:
    return i.full_set();
  case ConceptKind::Bot:
    return i.empty_set();
  case ConceptKind::Name:
    if (bound && c.label() == bound->name) return *bound->value;
    return i.concept_extension(c.index());
  case ConceptKind::And:
    return evaluate(c.first(), i, bound) & evaluate(c.second(), i, bound);
  case ConceptKind::Or:
    return evaluate(c.first(), i, bound) | evaluate(c.second(), i, bound);
  case ConceptKind::Not:
    return ~evaluate(c.first(), i, bound);
  case ConceptKind::Exists:
  case ConceptKind::Forall: {
    const Subset filler = evaluate(c.first(), i, bound);
    const bool is_exists = c.kind() == ConceptKind::Exists;
    Subset out(i.size());
    for (std::size_t a = 0; a < i.size(); ++a) {
      const Subset &succ = i.successors(c.index(), a);
      if (is_exists ? succ.intersects(filler) : succ.is_subset_of(filler)) out.set(a);
    }
    return out;
  }
  }
  return i.empty_set();
}

void require_monotone(const Concept &body, std::string_view fixname) {
  const auto parity = negation_parity(fixname, body);
  if (parity == Parity::Odd || parity == Parity::Mixed)
    throw NonMonotoneBody("'" + std::string(fixname) + "' occurs under an odd number of negations");
}

FixpointRun iterate(const Concept &body, std::string_view fixname, const Valuation &v, Subset x) {
  FixpointRun run;
  for (;;) {
    Subset next = f_step(body, fixname, v, x);
    if (next == x) break;
    x = std::move(next);
    ++run.steps;
  }
  run.value = std::move(x);
  return run;
}

} // namespace

Subset eval_concept(const Concept &c, const Interpretation &i) { return evaluate(c, i, nullptr); }

bool satisfies(const Interpretation &i, const Gci &g) {
  switch (g.kind) {
  case Gci::Kind::Subsumes:
    return eval_concept(g.lhs, i).is_subset_of(eval_concept(g.rhs, i));
  case Gci::Kind::Equiv:
    return eval_concept(g.lhs, i) == eval_concept(g.rhs, i);
  case Gci::Kind::FixDef:
    break;
  }
  throw WrongGciKind("fixpoint definitions are checked with satisfies_fixpoint");
}

bool satisfies_any(const Interpretation &i, const Gci &g) {
  return g.kind == Gci::Kind::FixDef ? satisfies_fixpoint(i, g) : satisfies(i, g);
}

bool satisfies_all(const Interpretation &i, const Theory &t) {
  for (const auto &g : t)
    if (!satisfies_any(i, g)) return false;
  return true;
}

Subset f_step(const Concept &body, std::string_view fixname, const Valuation &v, const Subset &x) {
  const Binding b{fixname, &x};
  return evaluate(body, v, &b);
}

FixpointRun least_fixpoint(const Concept &body, std::string_view fixname, const Valuation &v) {
  require_monotone(body, fixname);
  return iterate(body, fixname, v, v.empty_set());
}

FixpointRun greatest_fixpoint(const Concept &body, std::string_view fixname, const Valuation &v) {
  require_monotone(body, fixname);
  return iterate(body, fixname, v, v.full_set());
}

Subset lfp(const Concept &body, std::string_view fixname, const Valuation &v) {
  return least_fixpoint(body, fixname, v).value;
}

Subset gfp(const Concept &body, std::string_view fixname, const Valuation &v) {
  return greatest_fixpoint(body, fixname, v).value;
}

Subset fixpoint_extension(const Interpretation &i, const Gci &def) {
  if (def.kind != Gci::Kind::FixDef) throw WrongGciKind("expected a fixpoint definition");
  const Valuation v = make_valuation(i, def.defined());
  return def.semantics == FixSemantics::Lfp ? lfp(def.rhs, def.defined(), v) : gfp(def.rhs, def.defined(), v);
}

bool satisfies_fixpoint(const Interpretation &i, const Gci &def) {
  return fixpoint_extension(i, def) == i.concept_extension(def.defined());
}

std::string format_set(const Interpretation &i, const Subset &s) {
  std::string out = "{";
  bool first = true;
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a)) {
    if (!first) out += ", ";
    out += i.individual(a);
    first = false;
  }
  out += "}";
  return out;
}

} // namespace alc
