// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/fixtures.hpp"

using namespace alc;
using namespace alc::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int number, const char *title, double limit_s, const std::function<Outcome()> &body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool ok = o.pass && in_time;
  std::printf("criterion %d [%s]: %s (%s; %.2f s", number, title, ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
  if (limit_s > 0) std::printf(" of %.0f s allowed", limit_s);
  std::printf(")\n");
  std::fflush(stdout);
  return ok;
}

bool mutually_entailed(const Theory &a, const Theory &b, const Signature &sig) {
  for (const auto &g : a)
    if (entails(b, g, sig).verdict != Verdict::Entailed) return false;
  for (const auto &g : b)
    if (entails(a, g, sig).verdict != Verdict::Entailed) return false;
  return true;
}

// Largest carrier size that can still be separated.
std::size_t separable_size(std::mt19937 &rng, std::size_t nc, std::size_t nr) {
  std::uniform_int_distribution<std::size_t> pick(1, 5);
  return std::min<std::size_t>(pick(rng), std::size_t{1} << (nc + nr));
}

struct Tally {
  std::size_t queries = 0, timeouts = 0, mismatches = 0, valid = 0;

  void record(bool holds, Verdict v) {
    ++queries;
    if (v == Verdict::Timeout) {
      ++timeouts;
      return;
    }
    if (holds) ++valid;
    if (holds != (v == Verdict::Entailed)) ++mismatches;
  }
  std::string str() const {
    std::ostringstream s;
    s << queries << " queries, " << valid << " valid, " << mismatches << " mismatches, " << timeouts << " timeouts";
    return s.str();
  }
  bool ok() const { return mismatches == 0 && timeouts * 100 <= queries; }
};

Outcome criterion1() {
  auto i = simpsons();
  const auto &sig = i.signature();
  BasisOptions opts;
  opts.mode = FamilyMode::Separating;
  opts.minimize = true;
  auto report = compute_basis(i, opts);
  const bool sat = satisfies_all(i, report.raw);
  const bool equiv = report.minimized && mutually_entailed(*report.minimized, simpsons_minimized(sig), sig);
  std::ostringstream d;
  d << "raw " << report.raw.size() << " satisfied=" << sat << ", minimized "
    << (report.minimized ? report.minimized->size() : 0) << " equivalent to the 9 axioms=" << equiv;
  return {sat && equiv, d.str()};
}

Outcome criterion2() {
  auto i = simpsons();
  const auto &sig = i.signature();
  const std::string body = "Male & exists marriedTo . (Female & exists marriedTo . Husband)";
  auto g = parse_gci("gfp Husband = " + body, sig);
  auto l = parse_gci("lfp Husband = " + body, sig);
  auto homer = i.empty_set();
  homer.set(0);
  const auto gv = fixpoint_extension(i, g);
  const auto lv = fixpoint_extension(i, l);
  const bool ok = gv == homer && lv.none() && satisfies_fixpoint(i, g) && !satisfies_fixpoint(i, l);
  return {ok, "gfp " + format_set(i, gv) + ", lfp " + format_set(i, lv)};
}

Outcome criterion3() {
  std::mt19937 rng(1001);
  std::size_t models = 0, subsets = 0, wrong = 0;
  std::uniform_int_distribution<std::size_t> nc_pick(1, 4), nr_pick(1, 2);
  while (models < 120) {
    const auto nc = nc_pick(rng), nr = nr_pick(rng);
    const auto sig = small_signature(nc, nr);
    auto m = random_separable_model(rng, sig, separable_size(rng, nc, nr));
    ++models;
    for (unsigned long mask = 0; mask < (1UL << m.size()); ++mask) {
      Subset s(m.size(), mask);
      ++subsets;
      if (eval_concept(representative(m, s), m) != s) ++wrong;
    }
  }
  std::ostringstream d;
  d << models << " models, " << subsets << " subsets, " << wrong << " wrong";
  return {wrong == 0, d.str()};
}

Outcome criterion4() {
  std::mt19937 rng(2002);
  std::vector<Interpretation> models{simpsons()};
  std::uniform_int_distribution<std::size_t> size(1, 3), nc(1, 3), nr(1, 2);
  while (models.size() < 11) models.push_back(random_model(rng, small_signature(nc(rng), nr(rng)), size(rng)));
  Tally tally;
  std::size_t raw_total = 0;
  for (const auto &m : models) {
    const auto &sig = m.signature();
    auto basis = compute_basis(m).raw;
    raw_total += basis.size();
    for (int k = 0; k < 200; ++k) {
      auto g = random_subsumption(rng, sig, 3);
      tally.record(satisfies(m, g), entails(basis, g, sig, ReasonerOptions{100'000, false}).verdict);
    }
  }
  return {tally.ok(), std::to_string(models.size()) + " models, " + std::to_string(raw_total) + " basis axioms, " +
                          tally.str()};
}

Outcome criterion5() {
  std::mt19937 rng(3003);
  std::uniform_int_distribution<std::size_t> size(1, 5), nc(1, 3), nr(1, 2);
  std::size_t morph_pairs = 0, morph_bad = 0, quot_pairs = 0, quot_bad = 0, co_pairs = 0, co_bad = 0;

  // (a) concept membership along morphisms
  while (morph_pairs < 500) {
    const auto sig = small_signature(nc(rng), nr(rng));
    auto m = random_model(rng, sig, size(rng), 0.4, 0.3);
    auto q = quotient(m, coarsest_bisimulation(m));
    std::vector<std::pair<IndividualMap, const Interpretation *>> maps{{q.projection, &q.model}};
    auto cand = random_map(rng, m.size(), q.model.size());
    if (check_morphism(cand, m, q.model)) maps.emplace_back(cand, &q.model);
    for (const auto &[h, dst] : maps) {
      auto c = random_concept(rng, sig, 4);
      auto src_ext = eval_concept(c, m);
      auto dst_ext = eval_concept(c, *dst);
      ++morph_pairs;
      for (std::size_t a = 0; a < m.size(); ++a)
        if (src_ext.test(a) != dst_ext.test(h(a))) {
          ++morph_bad;
          break;
        }
    }
  }

  // (b) GCIs across bisimulation quotients and fold epimorphisms
  while (quot_pairs < 500) {
    const auto sig = small_signature(nc(rng), nr(rng));
    auto m = random_model(rng, sig, size(rng), 0.4, 0.3);
    auto q = quotient(m, coarsest_bisimulation(m));
    auto doubled = coproduct({m, m});
    auto g = random_subsumption(rng, sig, 3);
    auto report = preservation_report(doubled, m, fold_map({m, m}), {g});
    quot_pairs += 2;
    if (satisfies(m, g) != satisfies(q.model, g)) ++quot_bad;
    if (report.violations() != 0) ++quot_bad;
  }

  // (c) coproducts satisfy exactly what every component satisfies
  while (co_pairs < 500) {
    const auto sig = small_signature(nc(rng), nr(rng));
    std::vector<Interpretation> parts;
    for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k) parts.push_back(random_model(rng, sig, size(rng), 0.4, 0.3));
    auto sum = coproduct(parts);
    auto g = random_subsumption(rng, sig, 3);
    bool all = true;
    for (const auto &p : parts) all = all && satisfies(p, g);
    ++co_pairs;
    if (satisfies(sum, g) != all) ++co_bad;
  }
  std::ostringstream d;
  d << "morphism pairs " << morph_pairs << "/" << morph_bad << " bad, quotient/fold " << quot_pairs << "/" << quot_bad
    << " bad, coproduct " << co_pairs << "/" << co_bad << " bad";
  return {morph_bad == 0 && quot_bad == 0 && co_bad == 0, d.str()};
}

Outcome criterion6() {
  std::mt19937 rng(4004);
  const auto sig = small_signature(2, 1);
  auto a = random_model(rng, sig, 2);
  auto b = random_model(rng, sig, 2);
  auto report = covariety_basis({a, b});
  Tally tally;
  for (int k = 0; k < 200; ++k) {
    auto g = random_subsumption(rng, sig, 3);
    tally.record(satisfies(a, g) && satisfies(b, g),
                 entails(report.raw, g, sig, ReasonerOptions{100'000, false}).verdict);
  }
  return {tally.ok(), std::string("mode ") + to_string(report.mode) + ", " + std::to_string(report.raw.size()) +
                          " basis axioms, " + tally.str()};
}

Outcome criterion7() {
  std::mt19937 rng(5005);
  const auto sig = small_signature(2, 1);
  std::size_t queries = 0, agree = 0, timeouts = 0, entailed = 0;
  for (int k = 0; k < 200; ++k) {
    Theory t;
    if (k % 2) // small theories on odd queries
      for (std::size_t j = 0, n = 1 + rng() % 2; j < n; ++j) t.push_back(random_subsumption(rng, sig, 1));
    auto g = random_subsumption(rng, sig, 2);
    auto v = entails(t, g, sig, ReasonerOptions{100'000, false}).verdict;
    ++queries;
    if (v == Verdict::Timeout) {
      ++timeouts;
      continue;
    }
    if (v == Verdict::Entailed) ++entailed;
    auto cm = bounded_countermodel(t, g, sig, CountermodelOptions{4});
    if ((v == Verdict::Entailed) == !cm) ++agree;
  }
  std::ostringstream d;
  d << queries << " queries, " << entailed << " entailed, " << agree << " agree, " << timeouts << " timeouts";
  return {agree + timeouts == queries, d.str()};
}

} // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "worked-example basis", 5, criterion1);
  all &= run_criterion(2, "worked fixpoint", 1, criterion2);
  all &= run_criterion(3, "representative correctness", 30, criterion3);
  all &= run_criterion(4, "basis completeness", 300, criterion4);
  all &= run_criterion(5, "preservation", 60, criterion5);
  all &= run_criterion(6, "covariety basis", 0, criterion6);
  all &= run_criterion(7, "oracle agreement", 0, criterion7);
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
