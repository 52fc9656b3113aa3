#pragma once

#include <cstddef>
#include <optional>

#include "alc/semantics.hpp"

namespace alc {

enum class Verdict { Entailed, NotEntailed, Sat, Unsat, Timeout };

const char *to_string(Verdict v);

/// Outcome of a tableau query. A witness, when present, satisfies every
/// TBox axiom; its first individual realizes the query concept (Sat) or
/// violates the queried GCI (NotEntailed).
struct QueryResult {
  Verdict verdict = Verdict::Timeout;
  std::optional<Interpretation> witness;
  /// Tableau node expansions consumed.
  std::size_t expansions = 0;
};

struct ReasonerOptions {
  /// Node-expansion budget per query.
  std::size_t budget = 100'000;
  bool extract_witness = true;
};

/// Satisfiability of `c` w.r.t. the general TBox `t`: tableau on nnf(c) with
/// the internalized constraint ⊓(¬C ⊔ D) at every node and subset blocking.
/// FixDef axioms throw UnsupportedAxiom.
QueryResult is_satisfiable(const Concept &c, const Theory &t, const Signature &sig, ReasonerOptions opts = {});

/// T ⊨ g, decided as unsatisfiability of lhs ⊓ ¬rhs (both directions for
/// Equiv).
QueryResult entails(const Theory &t, const Gci &g, const Signature &sig, ReasonerOptions opts = {});

struct CountermodelOptions {
  std::size_t max_size = 4;
  /// Number of candidate interpretations examined before giving up.
  std::size_t budget = 200'000'000;
};

/// Exhaustive search over interpretations with at most `max_size`
/// individuals for a model of `t` violating `g` at individual 0. Throws
/// SearchBudgetExceeded when the budget runs out.
std::optional<Interpretation> bounded_countermodel(const Theory &t, const Gci &g, const Signature &sig,
                                                   CountermodelOptions opts = {});

} // namespace alc
