#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alc/semantics.hpp"

namespace alc {

/// Total map from the carrier of a source model to the carrier of a target.
class IndividualMap {
public:
  IndividualMap() = default;
  explicit IndividualMap(std::vector<std::size_t> table) : table_(std::move(table)) {}

  static IndividualMap identity(std::size_t n);

  std::size_t operator()(std::size_t a) const { return table_.at(a); }
  std::size_t size() const noexcept { return table_.size(); }
  const std::vector<std::size_t> &table() const noexcept { return table_; }

  bool injective() const;
  bool surjective(std::size_t target_size) const;

private:
  std::vector<std::size_t> table_;
};

/// Reads "src -> dst" lines (one per source individual; '#' comments).
IndividualMap parse_individual_map(std::string_view text, const Interpretation &src, const Interpretation &dst);

/// Which morphism condition failed and where.
struct MorphismWitness {
  enum class Condition {
    ConceptForward,  // a ∈ c^src but μ(a) ∉ c^dst
    ConceptBackward, // μ(a) ∈ c^dst but a ∉ c^src
    RoleForward,     // (a, b) ∈ r^src but (μa, μb) ∉ r^dst
    RoleBackward,    // (μa, a') ∈ r^dst with no r-successor b of a mapped to a'
  };

  Condition condition;
  std::string name;
  std::size_t source;                      // a
  std::optional<std::size_t> other;        // b (RoleForward) or a' in the target (RoleBackward)

  std::string describe(const Interpretation &src, const Interpretation &dst) const;
};

struct MorphismCheck {
  bool is_morphism = false;
  bool mono = false;
  bool epi = false;
  bool iso = false;
  std::optional<MorphismWitness> witness;

  explicit operator bool() const noexcept { return is_morphism; }
  /// "iso", "mono", "epi", "mono, epi" style summary of the flags.
  std::string flags() const;
};

/// Throws SignatureMismatch when the models do not share a signature and
/// InvalidModel when the table does not fit the carriers.
MorphismCheck check_morphism(const IndividualMap &m, const Interpretation &src, const Interpretation &dst);

/// Tagged disjoint union; individual (k, a) is named "k#a".
Interpretation coproduct(const std::vector<Interpretation> &models);
/// The fold map (k, a) ↦ a from coproduct(models) onto models[0], valid when
/// every component is identical to the first.
IndividualMap fold_map(const std::vector<Interpretation> &models);

/// Blocks ordered by smallest member; members ascending.
class Partition {
public:
  /// Validates disjointness, coverage and nonempty blocks over [0, n).
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  static Partition singletons(std::size_t n);

  std::size_t universe() const noexcept { return block_of_.size(); }
  const std::vector<std::vector<std::size_t>> &blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t a) const { return block_of_.at(a); }
  /// Every block of this partition is contained in a block of `other`.
  bool refines(const Partition &other) const;

  friend bool operator==(const Partition &a, const Partition &b) { return a.blocks_ == b.blocks_; }

private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

Partition coarsest_bisimulation(const Interpretation &i);

struct Quotient {
  Interpretation model;
  IndividualMap projection;
};

/// Block model: c^Q holds blocks whose members are in c^I, r^Q links blocks
/// holding an r-edge. Blocks are named after their first member. Throws
/// NotABisimulationPartition when the projection is not a morphism.
Quotient quotient(const Interpretation &i, const Partition &p);

/// Role words of length ≤ depth realizable from an individual, each with the
/// set of colors (N_C^I) reached by that word. Colors are collected setwise
/// per word, not per path.
struct BehaviorSignature {
  std::size_t individual = 0;
  std::size_t depth = 0;
  std::map<std::vector<std::size_t>, std::set<Subset>> words;

  /// Compares the behaviour only, not the individual it was taken from.
  friend bool operator==(const BehaviorSignature &a, const BehaviorSignature &b) {
    return a.depth == b.depth && a.words == b.words;
  }
};

BehaviorSignature behavior_signature(const Interpretation &i, std::size_t a, std::size_t k);

struct PreservationEntry {
  Gci gci;
  bool source_satisfies = false;
  bool target_satisfies = false;
  bool violation = false;
};

struct PreservationReport {
  MorphismCheck morphism;
  std::vector<PreservationEntry> entries;

  std::size_t violations() const;
};

/// Checks dst ⊨ φ ⟹ src ⊨ φ for each φ, and the converse when m is onto.
/// Throws NotMorphism if m fails check_morphism.
PreservationReport preservation_report(const Interpretation &src, const Interpretation &dst, const IndividualMap &m,
                                       const Theory &gcis);

} // namespace alc
