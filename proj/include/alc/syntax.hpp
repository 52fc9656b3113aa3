#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alc/errors.hpp"

namespace alc {

class Concept;

/// Vocabulary of concept names and role names, in declaration order.
class Signature {
public:
  Signature() = default;
  Signature(std::vector<std::string> concept_names, std::vector<std::string> role_names);

  const std::vector<std::string> &concept_names() const noexcept { return concepts_; }
  const std::vector<std::string> &role_names() const noexcept { return roles_; }

  std::optional<std::size_t> concept_index(std::string_view name) const;
  std::optional<std::size_t> role_index(std::string_view name) const;

  // Builders for hand-written concepts; unknown names throw UnknownName.
  Concept atom(std::string_view name) const;
  Concept exists(std::string_view role, Concept filler) const;
  Concept forall(std::string_view role, Concept filler) const;

  friend bool operator==(const Signature &a, const Signature &b) {
    return a.concepts_ == b.concepts_ && a.roles_ == b.roles_;
  }

private:
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::unordered_map<std::string, std::size_t> concept_index_;
  std::unordered_map<std::string, std::size_t> role_index_;
};

/// True for the words the concrete syntax reserves.
bool is_keyword(std::string_view word);

enum class ConceptKind { Top, Bot, Name, And, Or, Not, Exists, Forall };

/// Immutable concept description. Copies share structure; equality is
/// syntactic.
class Concept {
public:
  static Concept top();
  static Concept bot();
  static Concept name(std::string name, std::size_t index);
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept negation(Concept operand);
  static Concept exists(std::string role, std::size_t role_index, Concept filler);
  static Concept forall(std::string role, std::size_t role_index, Concept filler);

  ConceptKind kind() const noexcept { return node_->kind; }
  /// Concept name for Name nodes, role name for quantifiers.
  const std::string &label() const noexcept { return node_->label; }
  /// Signature index of label().
  std::size_t index() const noexcept { return node_->index; }
  /// Left operand of And/Or; sole operand of Not/Exists/Forall.
  const Concept &first() const { return *node_->first; }
  const Concept &second() const { return *node_->second; }

  bool is_quantifier() const noexcept {
    return kind() == ConceptKind::Exists || kind() == ConceptKind::Forall;
  }

  friend bool operator==(const Concept &a, const Concept &b);

private:
  struct Node {
    ConceptKind kind;
    std::string label;
    std::size_t index = 0;
    std::shared_ptr<const Concept> first;
    std::shared_ptr<const Concept> second;
  };

  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Concept operator&(Concept a, Concept b) { return Concept::conj(std::move(a), std::move(b)); }
inline Concept operator|(Concept a, Concept b) { return Concept::disj(std::move(a), std::move(b)); }
inline Concept operator~(Concept a) { return Concept::negation(std::move(a)); }

/// Height of the syntax tree; atoms have depth 0.
std::size_t depth(const Concept &c);
std::size_t size(const Concept &c);
bool mentions(const Concept &c, std::string_view concept_name);

enum class FixSemantics { Lfp, Gfp };

/// A subsumption, an equivalence, or a tagged fixpoint definition. For
/// FixDef, `lhs` is the defined Name and `rhs` its body.
struct Gci {
  enum class Kind { Subsumes, Equiv, FixDef };

  Kind kind = Kind::Subsumes;
  Concept lhs = Concept::top();
  Concept rhs = Concept::top();
  FixSemantics semantics = FixSemantics::Gfp;

  static Gci subsumes(Concept lhs, Concept rhs) { return {Kind::Subsumes, std::move(lhs), std::move(rhs)}; }
  static Gci equiv(Concept lhs, Concept rhs) { return {Kind::Equiv, std::move(lhs), std::move(rhs)}; }
  static Gci fixdef(Concept defined, Concept body, FixSemantics sem);

  const std::string &defined() const { return lhs.label(); }

  friend bool operator==(const Gci &a, const Gci &b) {
    return a.kind == b.kind && a.lhs == b.lhs && a.rhs == b.rhs &&
           (a.kind != Kind::FixDef || a.semantics == b.semantics);
  }
};

using Theory = std::vector<Gci>;

Concept parse_concept(std::string_view text, const Signature &sig);
/// Parses one `gci` or `fixdef` line.
Gci parse_gci(std::string_view text, const Signature &sig);
/// One gci or fixdef per line; blank lines and `#` comments skipped. Errors
/// carry the 1-based line number.
Theory parse_theory(std::string_view text, const Signature &sig);

/// Builds a signature from the identifiers used in theory or GCI text:
/// identifiers right after `exists`/`forall` are roles, the rest concepts.
/// Order is first occurrence.
Signature infer_signature(std::string_view text);
Signature merge_signatures(const Signature &a, const Signature &b);

std::string render(const Concept &c);
std::string render(const Gci &g);
std::string render(const Theory &t);

Concept nnf(const Concept &c);

enum class Parity { Absent, Even, Odd, Mixed };

Parity negation_parity(std::string_view concept_name, const Concept &c);

/// Substitutes every free occurrence of `concept_name` by `replacement`.
Concept substitute(const Concept &c, std::string_view concept_name, const Concept &replacement);

/// Collapses mutually recursive definitions to simple self-cycles by
/// substituting the other definitions into each body.
std::vector<Gci> unfold_cycles(const std::vector<Gci> &defs);

} // namespace alc
