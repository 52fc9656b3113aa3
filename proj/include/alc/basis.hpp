#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alc/reasoner.hpp"
#include "alc/semantics.hpp"

namespace alc {

enum class FamilyMode { Closure, Separating };

const char *to_string(FamilyMode m);

struct FamilyEntry {
  Subset set;
  Concept witness;
  /// Construction depth of the witness (closure mode); syntax depth otherwise.
  std::size_t depth = 0;
};

/// Strict order on equal-width subsets reading them as binary numbers with
/// the first individual as least significant bit: ∅ first, the carrier last.
bool subset_less(const Subset &a, const Subset &b);

/// Representatives Q: one witness concept per class of extensionally
/// equivalent concepts, i.e. per definable subset. Entries are kept in
/// subset_less order.
class DefinableFamily {
public:
  DefinableFamily(FamilyMode mode, std::vector<FamilyEntry> entries);

  FamilyMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<FamilyEntry> &entries() const noexcept { return entries_; }
  const FamilyEntry *find(const Subset &s) const;
  /// Witness of `s`; throws Error when `s` has no representative.
  const Concept &representative_of(const Subset &s) const;

private:
  FamilyMode mode_;
  std::vector<FamilyEntry> entries_;
  std::unordered_map<Subset, std::size_t> index_;
};

struct FamilyOptions {
  /// Largest carrier accepted before DomainTooLarge.
  std::size_t max_domain = 20;
};

/// Least family holding ∅, Δ and every c^I, closed under union,
/// intersection, complement, ∃r and ∀r; witnesses have minimal depth.
DefinableFamily definable_closure(const Interpretation &i, FamilyOptions opts = {});

struct SeparationCheck {
  bool separable = true;
  /// First pair (a, b) with equal colors and equal membership in every r^I_1.
  std::optional<std::pair<std::size_t, std::size_t>> witness;

  explicit operator bool() const noexcept { return separable; }
};

/// Distinct individuals with the same concept names must be told apart by
/// the domain of some role.
SeparationCheck check_separation(const Interpretation &i);

/// C_S with C_S^I = S, built from singleton representatives. Throws
/// NotSeparable when check_separation fails.
Concept representative(const Interpretation &i, const Subset &s);

/// All 2^|Δ| subsets with their representatives. Throws NotSeparable or
/// DomainTooLarge.
DefinableFamily separating_family(const Interpretation &i, FamilyOptions opts = {});

/// Separating when the model passes check_separation, closure otherwise.
FamilyMode default_mode(const Interpretation &i);
DefinableFamily build_family(const Interpretation &i, FamilyMode mode, FamilyOptions opts = {});

struct BasisStats {
  std::size_t classes = 0;
  std::size_t name_definitions = 0; // first kind (a)
  std::size_t boolean_pairs = 0;    // first kind (b)
  std::size_t complements = 0;      // first kind (c)
  std::size_t quantifiers = 0;      // first kind (d)
  std::size_t inclusions = 0;       // second kind
  std::size_t eliminated = 0;
  std::size_t kept_on_timeout = 0;

  std::size_t raw_count() const {
    return name_definitions + boolean_pairs + complements + quantifiers + inclusions;
  }
};

struct BasisReport {
  FamilyMode mode = FamilyMode::Closure;
  Theory raw;
  std::optional<Theory> minimized;
  BasisStats stats;
};

/// The two kinds of GCIs over the family's representatives. Syntactic
/// tautologies (identical sides) are omitted.
BasisReport generate_basis(const Interpretation &i, const DefinableFamily &fam);

struct MinimizeResult {
  Theory theory;
  std::size_t eliminated = 0;
  /// Axioms whose redundancy check timed out; they are kept.
  Theory kept_on_timeout;
};

/// Greedy single pass in reverse order: drops φ when the remaining axioms
/// entail it.
MinimizeResult minimize(const Theory &t, const Signature &sig, ReasonerOptions opts = {});

struct BasisOptions {
  std::optional<FamilyMode> mode; // default_mode when empty
  bool minimize = false;
  ReasonerOptions reasoner{};
  FamilyOptions family{};
};

BasisReport compute_basis(const Interpretation &i, const BasisOptions &opts = {});

/// Basis of the complete covariety generated by `models`: the basis of
/// their coproduct.
BasisReport covariety_basis(const std::vector<Interpretation> &models, const BasisOptions &opts = {});

} // namespace alc
