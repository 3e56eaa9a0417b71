#include <catch_amalgamated.hpp>

#include "conceptkit/conceptkit.hpp"
#include "support/fixtures.hpp"

using namespace conceptkit;
using namespace fixtures;

namespace {

EnrichedContext planet_closure() { return contextual_closure(planet_incidence()); }

}  // namespace

TEST_CASE("completion by cuts") {
  SECTION("a 2-chain completes to its two principal cuts") {
    Preorder chain = Preorder::chain(Carrier("two", {"0", "1"}));
    CutLattice dm = dm_complete(chain);
    auto oracle = dm_cuts_bruteforce(chain);
    REQUIRE(dm.size() == 2);
    REQUIRE(dm.cuts() == oracle);
    CHECK(dm.at(0).ideal == Bitset::full(2));
    CHECK(dm.at(0).filter == Bitset::single(2, 1));
    CHECK(dm.at(1).ideal == Bitset::single(2, 0));
    CHECK(dm.at(1).filter == Bitset::full(2));
  }

  SECTION("a 2-antichain completes to a diamond") {
    Preorder discrete = Preorder::discrete(Carrier("two", {"a", "b"}));
    CutLattice dm = dm_complete(discrete);
    REQUIRE(dm.size() == 4);
    CHECK(dm.cuts() == dm_cuts_bruteforce(discrete));
  }

  SECTION("the planetary sum completes to twelve cuts") {
    CHECK(dm_complete(sum(planet_closure()).order()).size() == 12);
  }

  SECTION("the enumeration agrees with the all-pairs cut oracle") {
    Rng rng(61);
    for (int it = 0; it < 150; ++it) {
      Preorder p = random_preorder(rng, random_carrier(rng, rng.between(1, 6), "c"));
      REQUIRE(dm_complete(p).cuts() == dm_cuts_bruteforce(p));
    }
  }

  SECTION("completing a finite lattice changes nothing") {
    // chains
    for (std::size_t n : {1u, 2u, 5u, 16u}) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
      Preorder chain = Preorder::chain(Carrier("chain", names));
      CutLattice dm = dm_complete(chain);
      REQUIRE(dm.size() == n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          REQUIRE(chain.leq(x, y) == dm.leq(dm.embed(x), dm.embed(y)));
    }
    // the Boolean lattice on four atoms, as the ideal lattice of a 4-antichain
    Preorder four = Preorder::discrete(Carrier("four", {"w", "x", "y", "z"}));
    auto ideals = enumerate_ideal_sets(four);  // 16 subsets
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ideals.size(); ++i) names.push_back("s" + std::to_string(i));
    Carrier bc("b4", names);
    std::vector<Bitset> rows(16, Bitset(16));
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        if (ideals[i].is_subset_of(ideals[j])) rows[i].set(j);
    Preorder boolean4(Relation(bc, bc, std::move(rows)));
    CutLattice dm = dm_complete(boolean4);
    REQUIRE(dm.size() == 16);
    for (std::size_t x = 0; x < 16; ++x)
      for (std::size_t y = 0; y < 16; ++y)
        REQUIRE(boolean4.leq(x, y) == dm.leq(dm.embed(x), dm.embed(y)));
  }

  SECTION("the cut oracle refuses large carriers") {
    std::vector<std::string> names;
    for (int i = 0; i < 9; ++i) names.push_back("e" + std::to_string(i));
    CHECK_THROWS_AS(dm_cuts_bruteforce(Preorder::discrete(Carrier("big", names))),
                    CapacityError);
  }
}

TEST_CASE("completion of a sum as quadruples") {
  SECTION("the planetary completion lists the twelve expected quadruples") {
    QuadLattice dm = dm_of_sum(planet_closure());
    REQUIRE(dm.size() == 12);
    for (const auto& row : planet_quads())
      CHECK(dm.find(named_quad(row)).has_value());
  }

  SECTION("the toy completion has the two expected quadruples") {
    QuadLattice dm = dm_of_sum(contextual_closure(t2_incidence()));
    REQUIRE(dm.size() == 2);
    CHECK(dm.find(QuadConcept{t2_entities().subset({"a"}), t2_attributes().subset({"p"}),
                              t2_entities().subset({"a", "b"}),
                              t2_attributes().subset({"p", "q"})}));
    CHECK(dm.find(QuadConcept{t2_entities().subset({"a", "b"}),
                              t2_attributes().subset({"p", "q"}),
                              t2_entities().subset({"b"}), t2_attributes().subset({"q"})}));
  }

  SECTION("every quadruple satisfies the eight assertions and constraints") {
    // dm_of_sum validates each quadruple at construction; exercise it broadly
    Rng rng(62);
    for (int it = 0; it < 100; ++it) {
      EnrichedContext ctx = random_context(rng, rng.between(1, 8));
      REQUIRE_NOTHROW(dm_of_sum(ctx));
    }
  }

  SECTION("lattice order is componentwise extent inclusion") {
    QuadLattice dm = dm_of_sum(planet_closure());
    auto everything = dm.find(named_quad(planet_quads()[0]));
    auto nothing = dm.find(named_quad(planet_quads()[11]));
    REQUIRE(everything);
    REQUIRE(nothing);
    CHECK(dm.leq(*nothing, *everything));
    CHECK_FALSE(dm.leq(*everything, *nothing));
  }
}

TEST_CASE("embedding generators of the completion") {
  EnrichedContext closure = planet_closure();
  QuadLattice dm = dm_of_sum(closure);
  QuadGenerators gen = quad_generators(closure, dm);

  CHECK(dm.at(gen.entity_concept[planet_entities().index_of("P")]) ==
        named_quad(planet_quads()[6]));  // Plutoness
  CHECK(dm.at(gen.attribute_concept[planet_attributes().index_of("my")]) ==
        named_quad(planet_quads()[1]));  // with moon
  CHECK(dm.at(gen.attribute_concept[planet_attributes().index_of("mn")]) ==
        named_quad(planet_quads()[10]));  // moonless

  SECTION("generator images are always members, for random closures") {
    Rng rng(63);
    for (int it = 0; it < 60; ++it) {
      Carrier e = random_carrier(rng, rng.between(1, 5), "e");
      Carrier a = random_carrier(rng, rng.between(1, 5), "a");
      EnrichedContext ctx = contextual_closure(random_relation(rng, e, a, rng.density()));
      QuadLattice lattice = dm_of_sum(ctx);
      REQUIRE_NOTHROW(quad_generators(ctx, lattice));
    }
  }

  SECTION("generators arise as cuts of principal filters of the sum") {
    SumOrder s = dm.sum_order();
    CutLattice cuts = dm_complete(s.order());
    for (std::size_t x = 0; x < 9; ++x) {
      std::size_t via_cut = cuts.embed(s.injection0().apply(x));
      QuadConcept split = split_cut(cuts.at(via_cut), s);
      REQUIRE(split == dm.at(gen.entity_concept[x]));
    }
  }
}

TEST_CASE("special derivation inequalities over all ideals and filters") {
  Rng rng(64);
  for (int it = 0; it < 25; ++it) {
    Carrier e = random_carrier(rng, rng.between(1, 5), "e");
    Carrier a = random_carrier(rng, rng.between(1, 5), "a");
    Relation mu = random_relation(rng, e, a, rng.density());
    ClassicContext cc(mu);
    Preorder P0(residuate_target(mu, mu));
    Preorder P1(residuate_source(mu, mu));
    Relation neg = negation(mu);
    ClassicContext negcc(neg);

    for (const auto& phi : enumerate_ideal_sets(P0)) {
      Bitset nu_phi = ideal_relation_as_subset(
          residuate_source(mu, subset_as_ideal_relation(phi, e)));
      REQUIRE(derive_intent(phi, cc).is_subset_of(upper_bounds_set(nu_phi, P1)));
      REQUIRE(upper_bounds_set(phi, P0).is_subset_of(derive_intent(nu_phi, negcc)));
    }
    for (const auto& psi : enumerate_filter_sets(P1)) {
      Bitset psi_nu = filter_relation_as_subset(
          residuate_target(subset_as_filter_relation(psi, a), mu));
      REQUIRE(derive_extent(psi, cc).is_subset_of(lower_bounds_set(psi_nu, P0)));
      REQUIRE(lower_bounds_set(psi, P1).is_subset_of(derive_extent(psi_nu, negcc)));
    }
  }
}
