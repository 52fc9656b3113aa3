#include "alc/basis.hpp"

#include <algorithm>

#include "alc/models.hpp"

namespace alc {

const char *to_string(FamilyMode m) { return m == FamilyMode::Closure ? "closure" : "separating"; }

bool subset_less(const Subset &a, const Subset &b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a.test(k) != b.test(k)) return b.test(k);
  }
  return false;
}

DefinableFamily::DefinableFamily(FamilyMode mode, std::vector<FamilyEntry> entries)
    : mode_(mode), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const FamilyEntry &x, const FamilyEntry &y) { return subset_less(x.set, y.set); });
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!index_.emplace(entries_[k].set, k).second) throw Error("family lists the same subset twice");
}

const FamilyEntry *DefinableFamily::find(const Subset &s) const {
  auto it = index_.find(s);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const Concept &DefinableFamily::representative_of(const Subset &s) const {
  const auto *e = find(s);
  if (!e) throw Error("family has no representative for a required subset");
  return e->witness;
}

namespace {

void require_domain(const Interpretation &i, const FamilyOptions &opts) {
  if (i.size() > opts.max_domain)
    throw DomainTooLarge("carrier of " + std::to_string(i.size()) + " individuals exceeds the bound of " +
                         std::to_string(opts.max_domain));
}

std::vector<std::size_t> lexicographic(const std::vector<std::string> &names) {
  std::vector<std::size_t> order(names.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return names[x] < names[y]; });
  return order;
}

Subset quantified(const Interpretation &i, std::size_t role, const Subset &filler, bool exists) {
  Subset out(i.size());
  for (std::size_t a = 0; a < i.size(); ++a) {
    const Subset &succ = i.successors(role, a);
    if (exists ? succ.intersects(filler) : succ.is_subset_of(filler)) out.set(a);
  }
  return out;
}

} // namespace

DefinableFamily definable_closure(const Interpretation &i, FamilyOptions opts) {
  require_domain(i, opts);
  const auto &sig = i.signature();
  std::vector<FamilyEntry> found;
  std::unordered_map<Subset, std::size_t> seen;
  auto offer = [&](Subset s, const Concept &witness, std::size_t d) {
    if (seen.count(s)) return;
    seen.emplace(s, found.size());
    found.push_back({std::move(s), witness, d});
  };

  offer(i.empty_set(), Concept::bot(), 0);
  offer(i.full_set(), Concept::top(), 0);
  for (auto c : lexicographic(sig.concept_names()))
    offer(i.concept_extension(c), Concept::name(sig.concept_names()[c], c), 0);
  const auto roles = lexicographic(sig.role_names());

  // Round d combines entries of depth < d with at least one of depth d - 1.
  std::size_t frontier = 0;
  for (std::size_t d = 1; frontier < found.size(); ++d) {
    const std::size_t end = found.size();
    for (std::size_t k = frontier; k < end; ++k) {
      const Subset s = found[k].set;
      const Concept w = found[k].witness;
      offer(~s, Concept::negation(w), d);
      for (auto r : roles) {
        const auto &rn = sig.role_names()[r];
        offer(quantified(i, r, s, true), Concept::exists(rn, r, w), d);
        offer(quantified(i, r, s, false), Concept::forall(rn, r, w), d);
      }
    }
    for (std::size_t k = frontier; k < end; ++k) {
      for (std::size_t j = 0; j < end; ++j) {
        if (j >= frontier && j >= k) continue; // each unordered pair once
        const auto &[lo, hi] = j < k ? std::pair{j, k} : std::pair{k, j};
        const Subset a = found[lo].set;
        const Subset b = found[hi].set;
        const Concept wa = found[lo].witness;
        const Concept wb = found[hi].witness;
        offer(a & b, Concept::conj(wa, wb), d);
        offer(a | b, Concept::disj(wa, wb), d);
      }
    }
    frontier = end;
  }
  return DefinableFamily(FamilyMode::Closure, std::move(found));
}

SeparationCheck check_separation(const Interpretation &i) {
  const std::size_t nr = i.signature().role_names().size();
  std::vector<Subset> domains;
  for (std::size_t r = 0; r < nr; ++r) domains.push_back(i.role_domain(r));
  for (std::size_t a = 0; a < i.size(); ++a) {
    const Subset ca = i.color(a);
    for (std::size_t b = a + 1; b < i.size(); ++b) {
      if (i.color(b) != ca) continue;
      bool told_apart = false;
      for (const auto &dom : domains) told_apart = told_apart || dom.test(a) != dom.test(b);
      if (!told_apart) return {false, std::pair{a, b}};
    }
  }
  return {};
}

namespace {

// C_{{a}} = C_a ⊓ ⊓_{b ≠ a ∈ C_a^I} C_{b/a}^c
Concept singleton_representative(const Interpretation &i, std::size_t a, const std::vector<std::size_t> &concept_order,
                                 const std::vector<std::size_t> &role_order) {
  const auto &sig = i.signature();
  auto name = [&](std::size_t c) { return Concept::name(sig.concept_names()[c], c); };
  const Subset ca = i.color(a);

  Concept result = Concept::top();
  Subset covered = i.full_set();
  bool have_concept_name = false;
  for (auto c : concept_order) {
    if (ca.test(c)) {
      result = name(c);
      covered = i.concept_extension(c);
      have_concept_name = true;
      break;
    }
  }
  if (!have_concept_name && !concept_order.empty()) {
    const auto c = concept_order.front();
    result = Concept::negation(name(c));
    covered = ~i.concept_extension(c);
  }

  for (std::size_t b = 0; b < i.size(); ++b) {
    if (b == a || !covered.test(b)) continue;
    const Subset cb = i.color(b);
    // `excluder` holds at a and fails at b; it is the complement C_{b/a}^c.
    std::optional<Concept> excluder;
    if (cb != ca) {
      for (auto c : concept_order)
        if (cb.test(c) && !ca.test(c)) {
          excluder = Concept::negation(name(c));
          break;
        }
      if (!excluder)
        for (auto c : concept_order)
          if (ca.test(c) && !cb.test(c)) {
            excluder = name(c);
            break;
          }
    } else {
      for (auto r : role_order) {
        const Subset dom = i.role_domain(r);
        if (dom.test(b) && !dom.test(a)) {
          excluder = Concept::negation(Concept::exists(sig.role_names()[r], r, Concept::top()));
          break;
        }
      }
      if (!excluder)
        for (auto r : role_order) {
          const Subset dom = i.role_domain(r);
          if (dom.test(a) && !dom.test(b)) {
            excluder = Concept::exists(sig.role_names()[r], r, Concept::top());
            break;
          }
        }
    }
    if (!excluder) throw NotSeparable(i.individual(a) + " and " + i.individual(b) + " cannot be separated");
    result = Concept::conj(std::move(result), std::move(*excluder));
  }
  return result;
}

} // namespace

Concept representative(const Interpretation &i, const Subset &s) {
  if (s.size() != i.size()) throw InvalidModel("subset does not match the carrier size");
  if (auto sep = check_separation(i); !sep)
    throw NotSeparable(i.individual(sep.witness->first) + " and " + i.individual(sep.witness->second) +
                       " share all concept names and role domains");
  if (s.none()) return Concept::bot();
  const auto concept_order = lexicographic(i.signature().concept_names());
  const auto role_order = lexicographic(i.signature().role_names());
  std::optional<Concept> out;
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a)) {
    Concept single = singleton_representative(i, a, concept_order, role_order);
    out = out ? Concept::disj(std::move(*out), std::move(single)) : std::move(single);
  }
  return *out;
}

DefinableFamily separating_family(const Interpretation &i, FamilyOptions opts) {
  require_domain(i, opts);
  if (auto sep = check_separation(i); !sep)
    throw NotSeparable(i.individual(sep.witness->first) + " and " + i.individual(sep.witness->second) +
                       " share all concept names and role domains");
  const auto concept_order = lexicographic(i.signature().concept_names());
  const auto role_order = lexicographic(i.signature().role_names());
  const std::size_t n = i.size();
  std::vector<Concept> singles;
  for (std::size_t a = 0; a < n; ++a) singles.push_back(singleton_representative(i, a, concept_order, role_order));

  std::vector<FamilyEntry> entries;
  entries.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n, static_cast<unsigned long>(mask));
    std::optional<Concept> c;
    for (std::size_t a = 0; a < n; ++a)
      if ((mask >> a) & 1U) c = c ? Concept::disj(std::move(*c), singles[a]) : singles[a];
    Concept w = c ? std::move(*c) : Concept::bot();
    const auto d = depth(w);
    entries.push_back({std::move(s), std::move(w), d});
  }
  return DefinableFamily(FamilyMode::Separating, std::move(entries));
}

FamilyMode default_mode(const Interpretation &i) {
  return check_separation(i) ? FamilyMode::Separating : FamilyMode::Closure;
}

DefinableFamily build_family(const Interpretation &i, FamilyMode mode, FamilyOptions opts) {
  return mode == FamilyMode::Separating ? separating_family(i, opts) : definable_closure(i, opts);
}

BasisReport generate_basis(const Interpretation &i, const DefinableFamily &fam) {
  BasisReport report;
  report.mode = fam.mode();
  report.stats.classes = fam.size();
  const auto &sig = i.signature();
  const auto &reps = fam.entries();
  auto emit_equiv = [&](Concept lhs, const Concept &rhs, std::size_t &counter) {
    if (lhs == rhs) return;
    report.raw.push_back(Gci::equiv(std::move(lhs), rhs));
    ++counter;
  };

  for (std::size_t c = 0; c < sig.concept_names().size(); ++c)
    emit_equiv(Concept::name(sig.concept_names()[c], c), fam.representative_of(i.concept_extension(c)),
               report.stats.name_definitions);

  for (int op = 0; op < 2; ++op) {
    for (std::size_t x = 0; x < reps.size(); ++x) {
      for (std::size_t y = x + 1; y < reps.size(); ++y) {
        const Subset s = op == 0 ? (reps[x].set & reps[y].set) : (reps[x].set | reps[y].set);
        Concept lhs = op == 0 ? Concept::conj(reps[x].witness, reps[y].witness)
                              : Concept::disj(reps[x].witness, reps[y].witness);
        emit_equiv(std::move(lhs), fam.representative_of(s), report.stats.boolean_pairs);
      }
    }
  }

  for (const auto &e : reps)
    emit_equiv(Concept::negation(e.witness), fam.representative_of(~e.set), report.stats.complements);

  for (const auto &e : reps) {
    for (std::size_t r = 0; r < sig.role_names().size(); ++r) {
      const auto &rn = sig.role_names()[r];
      emit_equiv(Concept::exists(rn, r, e.witness), fam.representative_of(quantified(i, r, e.set, true)),
                 report.stats.quantifiers);
      emit_equiv(Concept::forall(rn, r, e.witness), fam.representative_of(quantified(i, r, e.set, false)),
                 report.stats.quantifiers);
    }
  }

  for (const auto &lo : reps) {
    for (const auto &hi : reps) {
      if (&lo == &hi || lo.set == hi.set || !lo.set.is_subset_of(hi.set)) continue;
      report.raw.push_back(Gci::subsumes(lo.witness, hi.witness));
      ++report.stats.inclusions;
    }
  }
  return report;
}

MinimizeResult minimize(const Theory &t, const Signature &sig, ReasonerOptions opts) {
  opts.extract_witness = false;
  std::vector<bool> keep(t.size(), true);
  MinimizeResult out;
  for (std::size_t k = t.size(); k-- > 0;) {
    Theory rest;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != k && keep[j]) rest.push_back(t[j]);
    const auto r = entails(rest, t[k], sig, opts);
    if (r.verdict == Verdict::Entailed) {
      keep[k] = false;
      ++out.eliminated;
    } else if (r.verdict == Verdict::Timeout) {
      out.kept_on_timeout.push_back(t[k]);
    }
  }
  for (std::size_t j = 0; j < t.size(); ++j)
    if (keep[j]) out.theory.push_back(t[j]);
  return out;
}

BasisReport compute_basis(const Interpretation &i, const BasisOptions &opts) {
  const FamilyMode mode = opts.mode.value_or(default_mode(i));
  BasisReport report = generate_basis(i, build_family(i, mode, opts.family));
  if (opts.minimize) {
    auto m = minimize(report.raw, i.signature(), opts.reasoner);
    report.stats.eliminated = m.eliminated;
    report.stats.kept_on_timeout = m.kept_on_timeout.size();
    report.minimized = std::move(m.theory);
  }
  return report;
}

BasisReport covariety_basis(const std::vector<Interpretation> &models, const BasisOptions &opts) {
  return compute_basis(coproduct(models), opts);
}

} // namespace alc
