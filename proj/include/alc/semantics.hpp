#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alc/syntax.hpp"

namespace alc {

/// Subset of a carrier; bit i stands for the i-th individual in declaration
/// order.
using Subset = boost::dynamic_bitset<>;

/// Finite Σ-model. Individuals are interned to dense indices in carrier
/// order; roles are stored as successor sets.
class Interpretation {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Validates every invariant: nonempty carrier, distinct individual names,
  /// one extension per signature name, extensions inside the carrier.
  Interpretation(Signature sig, std::vector<std::string> individuals, std::vector<Subset> concept_ext,
                 std::vector<std::vector<Edge>> role_ext);

  const Signature &signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return individuals_.size(); }
  const std::vector<std::string> &individuals() const noexcept { return individuals_; }
  const std::string &individual(std::size_t i) const { return individuals_.at(i); }
  std::optional<std::size_t> individual_index(std::string_view name) const;

  const Subset &concept_extension(std::size_t concept_idx) const { return concept_ext_.at(concept_idx); }
  const Subset &concept_extension(std::string_view name) const;
  /// r-successors of individual `a`.
  const Subset &successors(std::size_t role_idx, std::size_t a) const { return succ_.at(role_idx).at(a); }
  std::vector<Edge> role_edges(std::size_t role_idx) const;
  bool has_edge(std::size_t role_idx, std::size_t a, std::size_t b) const { return succ_[role_idx][a].test(b); }

  /// r^I_1: individuals with at least one r-successor.
  Subset role_domain(std::size_t role_idx) const;
  /// N_C^I(a) as a bitset over concept indices.
  Subset color(std::size_t a) const;

  Subset empty_set() const { return Subset(size()); }
  Subset full_set() const { return Subset(size()).set(); }

  /// Copy with the extension of one concept name replaced.
  Interpretation with_concept_extension(std::size_t concept_idx, Subset ext) const;

private:
  Signature sig_;
  std::vector<std::string> individuals_;
  std::vector<Subset> concept_ext_;
  std::vector<std::vector<Subset>> succ_;
};

/// λ of the fixpoint semantics: a finite domain with name assignments. It
/// shares the representation of Interpretation.
using Valuation = Interpretation;

/// λ built from a model, with λ(fixname) = ∅.
Valuation make_valuation(const Interpretation &i, std::string_view fixname);

Subset eval_concept(const Concept &c, const Interpretation &i);

/// Satisfaction of a Subsumes or Equiv axiom; FixDef throws WrongGciKind.
bool satisfies(const Interpretation &i, const Gci &g);
/// Dispatches FixDef to satisfies_fixpoint.
bool satisfies_any(const Interpretation &i, const Gci &g);
bool satisfies_all(const Interpretation &i, const Theory &t);

/// f^λ_body(x): evaluates `body` with `fixname` bound to `x`.
Subset f_step(const Concept &body, std::string_view fixname, const Valuation &v, const Subset &x);

struct FixpointRun {
  Subset value;
  /// Number of f_step applications that changed the iterate.
  std::size_t steps = 0;
};

/// Kleene iteration from ∅ (least) or from the domain (greatest). Bodies in
/// which `fixname` occurs under an odd number of negations throw
/// NonMonotoneBody.
FixpointRun least_fixpoint(const Concept &body, std::string_view fixname, const Valuation &v);
FixpointRun greatest_fixpoint(const Concept &body, std::string_view fixname, const Valuation &v);
Subset lfp(const Concept &body, std::string_view fixname, const Valuation &v);
Subset gfp(const Concept &body, std::string_view fixname, const Valuation &v);

/// The fixpoint of a definition over the model (λ(c) = ∅ for the defined name).
Subset fixpoint_extension(const Interpretation &i, const Gci &def);
bool satisfies_fixpoint(const Interpretation &i, const Gci &def);

/// "{a, b}" in carrier order; "{}" when empty.
std::string format_set(const Interpretation &i, const Subset &s);

// .alcm model files ---------------------------------------------------------

/// Parses the line-oriented model format. Errors are InvalidModel carrying
/// the 1-based line.
Interpretation parse_model(std::string_view text);
std::string write_model(const Interpretation &i);

/// True for identifiers accepted as individual names in model files.
bool is_individual_name(std::string_view name);

} // namespace alc
