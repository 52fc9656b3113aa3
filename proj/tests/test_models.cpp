#include <doctest.h>

#include "support/fixtures.hpp"

using namespace alc;
using namespace alc::testing;

TEST_CASE("check_morphism") {
  auto i = simpsons();

  SUBCASE("identity is an isomorphism") {
    auto r = check_morphism(IndividualMap::identity(2), i, i);
    CHECK(r.is_morphism);
    CHECK(r.mono);
    CHECK(r.epi);
    CHECK(r.iso);
    CHECK(r.flags() == "iso");
  }
  SUBCASE("swapping Homer and Marge breaks concept membership") {
    auto r = check_morphism(IndividualMap({1, 0}), i, i);
    REQUIRE_FALSE(r.is_morphism);
    REQUIRE(r.witness);
    CHECK(r.witness->condition == MorphismWitness::Condition::ConceptForward);
    CHECK(r.witness->source == 0);
    // the witness really separates Homer from his image
    CHECK(i.concept_extension(r.witness->name).test(0));
    CHECK_FALSE(i.concept_extension(r.witness->name).test(1));
  }
  SUBCASE("fold map from the self-coproduct is an epimorphism") {
    auto two = coproduct({i, i});
    auto r = check_morphism(fold_map({i, i}), two, i);
    CHECK(r.is_morphism);
    CHECK(r.epi);
    CHECK_FALSE(r.mono);
  }
  SUBCASE("role conditions") {
    const Signature sig({"A"}, {"r"});
    // a -> b, b without successors; target has a single reflexive point
    Interpretation src(sig, {"a", "b"}, {Subset(2)}, {{{0, 1}}});
    Interpretation dst(sig, {"x"}, {Subset(1)}, {{{0, 0}}});
    auto r = check_morphism(IndividualMap({0, 0}), src, dst);
    REQUIRE_FALSE(r.is_morphism);
    CHECK(r.witness->condition == MorphismWitness::Condition::RoleBackward);
    CHECK(r.witness->source == 1);

    Interpretation dst_empty(sig, {"x"}, {Subset(1)}, {{}});
    auto f = check_morphism(IndividualMap({0, 0}), src, dst_empty);
    REQUIRE_FALSE(f.is_morphism);
    CHECK(f.witness->condition == MorphismWitness::Condition::RoleForward);
  }
  SUBCASE("signature mismatch") {
    const Signature other({"A"}, {});
    Interpretation m(other, {"a"}, {Subset(1)}, {});
    CHECK_THROWS_AS(check_morphism(IndividualMap({0}), m, i), SignatureMismatch);
  }
}

TEST_CASE("individual map files") {
  auto i = simpsons();
  auto m = parse_individual_map("# swap\nHomer -> Marge\nMarge -> Homer\n", i, i);
  CHECK(m.table() == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(parse_individual_map("Homer -> Marge\n", i, i), InvalidModel);
  CHECK_THROWS_AS(parse_individual_map("Homer -> Bart\nMarge -> Homer\n", i, i), InvalidModel);
  CHECK_THROWS_AS(parse_individual_map("Homer Marge\n", i, i), InvalidModel);
}

TEST_CASE("coproduct") {
  auto i = simpsons();
  auto two = coproduct({i, i});
  CHECK(two.individuals() == std::vector<std::string>{"0#Homer", "0#Marge", "1#Homer", "1#Marge"});
  CHECK(format_set(two, two.concept_extension("Male")) == "{0#Homer, 1#Homer}");
  CHECK(two.role_edges(0).size() == 4);
  CHECK(parse_model(write_model(two)).individuals() == two.individuals());

  auto one = coproduct({i});
  std::vector<std::size_t> strip{0, 1};
  CHECK(check_morphism(IndividualMap(strip), one, i).iso);

  CHECK_THROWS_AS(coproduct({}), EmptyFamily);
  Interpretation other(Signature({"A"}, {}), {"a"}, {Subset(1)}, {});
  CHECK_THROWS_AS(coproduct({i, other}), SignatureMismatch);
}

TEST_CASE("coarsest_bisimulation and quotient") {
  auto i = simpsons();

  SUBCASE("Homer and Marge are distinguished by color") {
    auto p = coarsest_bisimulation(i);
    CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0}, {1}});
  }
  SUBCASE("self-coproduct collapses copies") {
    auto two = coproduct({i, i});
    auto p = coarsest_bisimulation(two);
    CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
    auto q = quotient(two, p);
    CHECK(q.model.size() == 2);
    CHECK(check_morphism(q.projection, two, q.model).epi);
    // quotient ≅ original via block name "0#Homer" ↦ Homer
    CHECK(check_morphism(IndividualMap({0, 1}), q.model, i).iso);
  }
  SUBCASE("uniform model is one block") {
    const Signature sig({"A"}, {"r"});
    Subset all(3);
    all.set();
    Interpretation m(sig, {"a", "b", "c"}, {all}, {{}});
    CHECK(coarsest_bisimulation(m).blocks().size() == 1);
  }
  SUBCASE("successor structure splits equal colors") {
    const Signature sig({"A"}, {"r"});
    // a -> b -> c; all uncolored: a, b, c are pairwise distinguishable by depth
    Interpretation m(sig, {"a", "b", "c"}, {Subset(3)}, {{{0, 1}, {1, 2}}});
    CHECK(coarsest_bisimulation(m).blocks().size() == 3);
    Interpretation loop(sig, {"a", "b", "c"}, {Subset(3)}, {{{0, 1}, {1, 2}, {2, 0}}});
    CHECK(coarsest_bisimulation(loop).blocks().size() == 1);
  }
  SUBCASE("singletons give an isomorphic copy") {
    auto q = quotient(i, Partition::singletons(2));
    CHECK(check_morphism(q.projection, i, q.model).iso);
  }
  SUBCASE("mixing colors is rejected") {
    CHECK_THROWS_AS(quotient(i, Partition(2, {{0, 1}})), NotABisimulationPartition);
  }
  SUBCASE("malformed partitions") {
    CHECK_THROWS_AS(Partition(2, {{0}}), InvalidPartition);
    CHECK_THROWS_AS(Partition(2, {{0, 1}, {1}}), InvalidPartition);
    CHECK_THROWS_AS(Partition(2, {{0, 1}, {}}), InvalidPartition);
  }
}

TEST_CASE("behavior signatures") {
  auto i = simpsons();
  auto homer = behavior_signature(i, 0, 2);
  REQUIRE(homer.words.size() == 3);
  CHECK(homer.words.count({}));
  CHECK(homer.words.count({0}));
  CHECK(homer.words.count({0, 0}));
  CHECK(homer.words.at({}) == std::set<Subset>{i.color(0)});
  CHECK(homer.words.at({0}) == std::set<Subset>{i.color(1)});

  auto zero = behavior_signature(i, 1, 0);
  CHECK(zero.words.size() == 1);
  CHECK(zero.words.at({}) == std::set<Subset>{i.color(1)});

  SUBCASE("bisimilar individuals share signatures") {
    std::mt19937 rng(3);
    const auto sig = small_signature(2, 2);
    for (int k = 0; k < 100; ++k) {
      auto m = random_model(rng, sig, 2 + k % 5, 0.3, 0.3);
      auto p = coarsest_bisimulation(m);
      for (const auto &block : p.blocks())
        for (auto a : block)
          for (std::size_t depth = 0; depth <= 3; ++depth)
            CHECK(behavior_signature(m, a, depth) == behavior_signature(m, block.front(), depth));
    }
  }
}

TEST_CASE("preservation_report") {
  auto i = simpsons();
  const auto &sig = i.signature();
  auto two = coproduct({i, i});
  auto gcis = parse_theory(read_file(data_path("simpsons.min.theory")), sig);
  gcis.push_back(parse_gci("Male <= Wife", sig));

  auto report = preservation_report(two, i, fold_map({i, i}), gcis);
  CHECK(report.morphism.epi);
  CHECK(report.violations() == 0);
  for (const auto &e : report.entries) CHECK(e.source_satisfies == e.target_satisfies);
  CHECK_FALSE(report.entries.back().source_satisfies);

  auto identity = preservation_report(i, i, IndividualMap::identity(2), gcis);
  CHECK(identity.violations() == 0);

  CHECK_THROWS_AS(preservation_report(i, i, IndividualMap({1, 0}), gcis), NotMorphism);
}

TEST_CASE("morphism and quotient properties on random models") {
  std::mt19937 rng(17);
  const auto sig = small_signature(2, 1);
  std::size_t morphisms = 0;
  for (int k = 0; k < 400; ++k) {
    auto m = random_model(rng, sig, 2 + k % 4, 0.4, 0.3);
    auto p = coarsest_bisimulation(m);
    auto q = quotient(m, p);
    CHECK(check_morphism(q.projection, m, q.model).epi);
    // coarsest: the singleton partition refines it, and so does every accepted partition
    CHECK(Partition::singletons(m.size()).refines(p));

    // random maps into the quotient that happen to be morphisms
    auto cand = random_map(rng, m.size(), q.model.size());
    if (auto check = check_morphism(cand, m, q.model); check) {
      ++morphisms;
      for (int t = 0; t < 5; ++t) {
        auto c = random_concept(rng, sig, 3);
        auto src = eval_concept(c, m);
        auto dst = eval_concept(c, q.model);
        for (std::size_t a = 0; a < m.size(); ++a) CHECK(src.test(a) == dst.test(cand(a)));
      }
    }
    for (int t = 0; t < 5; ++t) {
      auto g = random_subsumption(rng, sig, 3);
      CHECK(satisfies(m, g) == satisfies(q.model, g));
    }
  }
  CHECK(morphisms > 0);
}

TEST_CASE("coproduct preserves evaluation componentwise") {
  std::mt19937 rng(29);
  const auto sig = small_signature(2, 2);
  for (int k = 0; k < 100; ++k) {
    std::vector<Interpretation> parts;
    for (int j = 0; j < 1 + k % 3; ++j) parts.push_back(random_model(rng, sig, 1 + (k + j) % 3));
    auto sum = coproduct(parts);
    auto c = random_concept(rng, sig, 4);
    auto ext = eval_concept(c, sum);
    std::size_t offset = 0;
    bool all_sat = true;
    auto g = random_subsumption(rng, sig, 3);
    for (const auto &part : parts) {
      auto local = eval_concept(c, part);
      for (std::size_t a = 0; a < part.size(); ++a) CHECK(ext.test(offset + a) == local.test(a));
      offset += part.size();
      all_sat = all_sat && satisfies(part, g);
    }
    CHECK(satisfies(sum, g) == all_sat);
  }
}
