#include <catch_amalgamated.hpp>

#include "conceptkit/conceptkit.hpp"
#include "support/fixtures.hpp"

using namespace conceptkit;
using namespace fixtures;

TEST_CASE("mapping lattice concepts to completion quadruples") {
  ClassicContext ctx = planet_context();

  SECTION("'large size' maps to its expected quadruple") {
    Concept large = named_concept(planet_concepts()[8]);
    CHECK(cl_to_dm(large, ctx) == named_quad(planet_quads()[8]));
  }

  SECTION("'everything' maps to the top quadruple") {
    Concept everything = named_concept(planet_concepts()[0]);
    CHECK(cl_to_dm(everything, ctx) == named_quad(planet_quads()[0]));
  }

  SECTION("the toy top concept maps as computed") {
    Concept top{t2_entities().subset({"a", "b"}), t2_attributes().subset({"q"})};
    CHECK(cl_to_dm(top, t2_context()) ==
          QuadConcept{t2_entities().subset({"a", "b"}), t2_attributes().subset({"p", "q"}),
                      t2_entities().subset({"b"}), t2_attributes().subset({"q"})});
  }

  SECTION("non-concepts are rejected") {
    CHECK_THROWS_AS(cl_to_dm(Concept{planet_entities().subset({"Me"}), Bitset(7)}, ctx),
                    ValidationError);
  }

  SECTION("the proof's closure identities hold for every planetary concept") {
    Preorder P0(planet_source_order());
    Preorder P1(planet_target_order());
    for (const auto& row : planet_concepts()) {
      Concept c = named_concept(row);
      Bitset nu_phi = ideal_relation_as_subset(residuate_source(
          planet_incidence(), subset_as_ideal_relation(c.extent, planet_entities())));
      Bitset psi_nu = filter_relation_as_subset(residuate_target(
          subset_as_filter_relation(c.intent, planet_attributes()), planet_incidence()));
      REQUIRE(c.extent == derive_extent(c.intent, ctx));
      REQUIRE(c.intent == derive_intent(c.extent, ctx));
      REQUIRE(nu_phi == lower_bounds_set(c.intent, P1));
      REQUIRE(psi_nu == upper_bounds_set(c.extent, P0));
    }
  }
}

TEST_CASE("equivalence of the lattice and the completion") {
  SECTION("the planetary relationship is isomorphic both ways") {
    EquivalenceResult r = verify_equivalence(planet_incidence());
    REQUIRE(r.ok());
    CHECK(r.lattice.size() == 12);
    CHECK(r.completion.size() == 12);
    // the witness maps are mutually inverse
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(r.witness->backward[r.witness->forward[i]] == i);
      CHECK(r.witness->forward[r.witness->backward[i]] == i);
    }
  }

  SECTION("the top relation gives a one-to-one correspondence") {
    Carrier a("a", {"x", "y", "z"}), b("b", {"u", "v"});
    EquivalenceResult r = verify_equivalence(Relation::top(a, b));
    REQUIRE(r.ok());
    CHECK(r.lattice.size() == 1);
  }

  SECTION("randomized contexts never falsify the equivalence") {
    Rng rng(71);
    for (int it = 0; it < 500; ++it) {
      Carrier e = random_carrier(rng, rng.between(1, 6), "e");
      Carrier a = random_carrier(rng, rng.between(1, 6), "a");
      Relation mu = random_relation(rng, e, a, rng.density());
      EquivalenceResult r = verify_equivalence(mu);
      if (!r.ok()) {
        UNSCOPED_INFO("counterexample relation: " << lawdetail::show(mu));
        for (const auto& c : r.counterexamples) UNSCOPED_INFO(c);
      }
      REQUIRE(r.ok());
    }
  }
}
