#include <doctest.h>

#include "support/fixtures.hpp"

using namespace alc;
using namespace alc::testing;

namespace {

Verdict sat(const char *c, const char *theory, const Signature &sig) {
  return is_satisfiable(parse_concept(c, sig), parse_theory(theory, sig), sig).verdict;
}

Verdict ent(const char *theory, const char *g, const Signature &sig) {
  return entails(parse_theory(theory, sig), parse_gci(g, sig), sig).verdict;
}

} // namespace

TEST_CASE("is_satisfiable basics") {
  const Signature sig({"A", "B", "C"}, {"r", "s"});
  CHECK(sat("A & ~A", "", sig) == Verdict::Unsat);
  CHECK(sat("top", "", sig) == Verdict::Sat);
  CHECK(sat("bot", "", sig) == Verdict::Unsat);
  CHECK(sat("exists r . A & forall r . ~A", "", sig) == Verdict::Unsat);
  CHECK(sat("exists r . A & forall s . ~A", "", sig) == Verdict::Sat);
  CHECK(sat("(A | B) & ~A & ~B", "", sig) == Verdict::Unsat);
  CHECK(sat("A", "A <= B\nB <= C\nC <= ~A\n", sig) == Verdict::Unsat);
  // cyclic TBox needs blocking
  CHECK(sat("A", "A <= exists r . A\n", sig) == Verdict::Sat);
  CHECK(sat("A", "top <= exists r . top\nA <= forall r . B\nB <= exists r . ~A\n", sig) == Verdict::Sat);
  CHECK(sat("exists r . A", "A <= exists r . A\nA <= B\nexists r . B <= bot\n", sig) == Verdict::Unsat);
  CHECK_THROWS_AS(sat("A", "gfp A = exists r . A\n", sig), UnsupportedAxiom);
}

TEST_CASE("witnesses are models") {
  std::mt19937 rng(31);
  const auto sig = small_signature(3, 2);
  int sats = 0;
  for (int k = 0; k < 300; ++k) {
    Theory t;
    for (int j = 0; j < k % 4; ++j) t.push_back(random_subsumption(rng, sig, 2));
    auto c = random_concept(rng, sig, 3);
    auto r = is_satisfiable(c, t, sig);
    REQUIRE(r.verdict != Verdict::Timeout);
    if (r.verdict != Verdict::Sat) continue;
    ++sats;
    REQUIRE(r.witness);
    CHECK(satisfies_all(*r.witness, t));
    CHECK(eval_concept(c, *r.witness).test(0));
    CHECK(r.witness->individual(0) == "x0");
  }
  CHECK(sats > 50);
}

TEST_CASE("entails") {
  auto i = simpsons();
  const auto &sig = i.signature();
  CHECK(ent("Husband <= Male\n", "Husband & Wife <= Male", sig) == Verdict::Entailed);
  CHECK(ent("", "Husband <= Male", sig) == Verdict::NotEntailed);
  CHECK(ent("Husband == Male\nMale <= Wife\n", "Husband <= Wife", sig) == Verdict::Entailed);
  CHECK(ent("Husband <= Male\n", "Husband == Male", sig) == Verdict::NotEntailed);
  CHECK(ent("", "forall marriedTo . Male <= ~exists marriedTo . ~Male", sig) == Verdict::Entailed);
  CHECK(ent("top <= bot\n", "Male <= Wife", sig) == Verdict::Entailed);

  auto r = entails({}, parse_gci("Husband <= Male", sig), sig);
  REQUIRE(r.witness);
  CHECK_FALSE(satisfies(*r.witness, parse_gci("Husband <= Male", sig)));

  auto min = simpsons_minimized(sig);
  CHECK(entails(min, parse_gci("Husband <= exists marriedTo . Female", sig), sig).verdict == Verdict::Entailed);
  CHECK(entails(min, parse_gci("Husband <= exists marriedTo . Husband", sig), sig).verdict ==
        Verdict::NotEntailed);
  CHECK_THROWS_AS(entails(min, parse_gci("gfp Husband = Male", sig), sig), UnsupportedAxiom);
}

TEST_CASE("tiny budget gives a timeout") {
  const Signature sig({"A", "B"}, {"r"});
  auto t = parse_theory("top <= exists r . A | exists r . B\nA <= exists r . ~A\n", sig);
  auto r = is_satisfiable(parse_concept("A & B", sig), t, sig, ReasonerOptions{1, true});
  CHECK(r.verdict == Verdict::Timeout);
  CHECK(to_string(Verdict::Timeout) == std::string("timeout"));
}

TEST_CASE("bounded_countermodel") {
  const Signature sig({"A", "B"}, {"r"});
  auto t = parse_theory("A <= B\n", sig);
  CHECK_FALSE(bounded_countermodel(t, parse_gci("A & C <= B", Signature({"A", "B", "C"}, {"r"})),
                                   Signature({"A", "B", "C"}, {"r"})));
  auto cm = bounded_countermodel(t, parse_gci("B <= A", sig), sig);
  REQUIRE(cm);
  CHECK(cm->size() == 1);
  CHECK(cm->individual(0) == "m0");
  CHECK(satisfies_all(*cm, t));
  CHECK_FALSE(satisfies(*cm, parse_gci("B <= A", sig)));

  // needs two individuals
  auto two = bounded_countermodel({}, parse_gci("exists r . A <= A", sig), sig);
  REQUIRE(two);
  CHECK(two->size() == 2);

  CHECK_FALSE(bounded_countermodel(t, parse_gci("A <= B", sig), sig));
  CHECK_THROWS_AS(bounded_countermodel({}, parse_gci("exists r . exists r . exists r . A <= A", sig), sig,
                                       CountermodelOptions{4, 3}),
                  SearchBudgetExceeded);
}

TEST_CASE("tableau agrees with bounded countermodel search") {
  std::mt19937 rng(37);
  const auto sig = small_signature(2, 1);
  for (int k = 0; k < 150; ++k) {
    Theory t;
    for (int j = 0; j < k % 3; ++j) t.push_back(random_subsumption(rng, sig, 1));
    auto g = random_subsumption(rng, sig, 2);
    auto r = entails(t, g, sig);
    REQUIRE(r.verdict != Verdict::Timeout);
    auto cm = bounded_countermodel(t, g, sig, CountermodelOptions{3});
    if (cm) CHECK(r.verdict == Verdict::NotEntailed);
    if (r.verdict == Verdict::Entailed) CHECK_FALSE(cm);
  }
}

TEST_CASE("entailment is monotone in the theory") {
  std::mt19937 rng(43);
  const auto sig = small_signature(3, 1);
  for (int k = 0; k < 150; ++k) {
    Theory t;
    for (int j = 0; j < 2; ++j) t.push_back(random_subsumption(rng, sig, 2));
    auto g = random_subsumption(rng, sig, 2);
    auto small = entails(t, g, sig).verdict;
    t.push_back(random_subsumption(rng, sig, 2));
    auto large = entails(t, g, sig).verdict;
    if (small == Verdict::Entailed) CHECK(large == Verdict::Entailed);
    // every axiom entails itself
    CHECK(entails(t, t.front(), sig).verdict == Verdict::Entailed);
  }
}
