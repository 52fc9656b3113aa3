#pragma once

// Shared test fixtures: the Homer/Marge model, random generators, and
// reference oracles that do not go through the code they check.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alc/basis.hpp"
#include "alc/models.hpp"
#include "alc/reasoner.hpp"
#include "alc/semantics.hpp"
#include "alc/syntax.hpp"

namespace alc::testing {

inline std::string data_path(const std::string &name) { return std::string(ALC_TEST_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Interpretation simpsons() { return parse_model(read_file(data_path("simpsons.alcm"))); }

/// The nine axioms of the minimized basis for the Homer/Marge model.
inline Theory simpsons_minimized(const Signature &sig) {
  return parse_theory(read_file(data_path("simpsons.min.theory")), sig);
}

/// The representatives ⊥, Male, Wife, Male ⊔ Wife chosen in the worked
/// example for ∅, {Homer}, {Marge}, Δ.
inline DefinableFamily worked_example_family(const Interpretation &i) {
  const auto &sig = i.signature();
  auto male = sig.atom("Male");
  auto wife = sig.atom("Wife");
  auto set = [&](std::initializer_list<std::size_t> members) {
    Subset s(i.size());
    for (auto m : members) s.set(m);
    return s;
  };
  return DefinableFamily(FamilyMode::Separating, {{set({}), Concept::bot(), 0},
                                                  {set({0}), male, 0},
                                                  {set({1}), wife, 0},
                                                  {set({0, 1}), male | wife, 1}});
}

inline Signature small_signature(std::size_t concepts, std::size_t roles) {
  static const char *kConcepts[] = {"A", "B", "C", "D", "E", "F"};
  static const char *kRoles[] = {"r", "s", "t"};
  std::vector<std::string> cs(kConcepts, kConcepts + concepts);
  std::vector<std::string> rs(kRoles, kRoles + roles);
  return Signature(cs, rs);
}

inline Interpretation random_model(std::mt19937 &rng, const Signature &sig, std::size_t n, double concept_p = 0.5,
                                   double edge_p = 0.35) {
  std::bernoulli_distribution in_concept(concept_p);
  std::bernoulli_distribution edge(edge_p);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back("d" + std::to_string(a));
  std::vector<Subset> ext(sig.concept_names().size(), Subset(n));
  for (auto &e : ext)
    for (std::size_t a = 0; a < n; ++a)
      if (in_concept(rng)) e.set(a);
  std::vector<std::vector<Interpretation::Edge>> roles(sig.role_names().size());
  for (auto &r : roles)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (edge(rng)) r.emplace_back(a, b);
  return Interpretation(sig, names, ext, roles);
}

/// Random concept whose syntax tree has height at most `max_depth`.
inline Concept random_concept(std::mt19937 &rng, const Signature &sig, std::size_t max_depth) {
  const auto &cs = sig.concept_names();
  const auto &rs = sig.role_names();
  std::uniform_int_distribution<int> leaf_kind(0, 9);
  auto leaf = [&]() -> Concept {
    int k = leaf_kind(rng);
    if (k == 0 || cs.empty()) return Concept::top();
    if (k == 1) return Concept::bot();
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    auto c = pick(rng);
    return Concept::name(cs[c], c);
  };
  if (max_depth == 0) return leaf();
  std::uniform_int_distribution<int> kind(0, rs.empty() ? 4 : 6);
  switch (kind(rng)) {
  case 0:
  case 1:
    return leaf();
  case 2:
    return Concept::conj(random_concept(rng, sig, max_depth - 1), random_concept(rng, sig, max_depth - 1));
  case 3:
    return Concept::disj(random_concept(rng, sig, max_depth - 1), random_concept(rng, sig, max_depth - 1));
  case 4:
    return Concept::negation(random_concept(rng, sig, max_depth - 1));
  default: {
    std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
    auto r = pick(rng);
    auto f = random_concept(rng, sig, max_depth - 1);
    return kind(rng) % 2 ? Concept::exists(rs[r], r, f) : Concept::forall(rs[r], r, f);
  }
  }
}

inline Gci random_subsumption(std::mt19937 &rng, const Signature &sig, std::size_t max_depth) {
  return Gci::subsumes(random_concept(rng, sig, max_depth), random_concept(rng, sig, max_depth));
}

/// Random total map between carriers.
inline IndividualMap random_map(std::mt19937 &rng, std::size_t from, std::size_t to) {
  std::uniform_int_distribution<std::size_t> pick(0, to - 1);
  std::vector<std::size_t> t(from);
  for (auto &x : t) x = pick(rng);
  return IndividualMap(std::move(t));
}

/// Brute-force definable subsets: enumerate concept trees level by level,
/// keeping one tree per extension, evaluating every tree with eval_concept,
/// until a whole level adds nothing new.
inline std::vector<Subset> brute_force_definable(const Interpretation &i, std::size_t max_levels = 16) {
  const auto &sig = i.signature();
  std::vector<std::pair<Subset, Concept>> known;
  auto add = [&](const Concept &c) {
    Subset s = eval_concept(c, i);
    for (const auto &k : known)
      if (k.first == s) return false;
    known.emplace_back(std::move(s), c);
    return true;
  };
  add(Concept::top());
  add(Concept::bot());
  for (std::size_t c = 0; c < sig.concept_names().size(); ++c) add(Concept::name(sig.concept_names()[c], c));
  for (std::size_t level = 0; level < max_levels; ++level) {
    const auto snapshot = known;
    bool grew = false;
    for (const auto &[s1, c1] : snapshot) {
      grew |= add(Concept::negation(c1));
      for (std::size_t r = 0; r < sig.role_names().size(); ++r) {
        grew |= add(Concept::exists(sig.role_names()[r], r, c1));
        grew |= add(Concept::forall(sig.role_names()[r], r, c1));
      }
      for (const auto &[s2, c2] : snapshot) {
        grew |= add(Concept::conj(c1, c2));
        grew |= add(Concept::disj(c1, c2));
      }
    }
    if (!grew) break;
  }
  std::vector<Subset> out;
  for (auto &k : known) out.push_back(k.first);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

/// Randomly generated model passing check_separation (rejection sampling).
inline Interpretation random_separable_model(std::mt19937 &rng, const Signature &sig, std::size_t n) {
  for (;;) {
    auto m = random_model(rng, sig, n);
    if (check_separation(m)) return m;
  }
}

} // namespace alc::testing
