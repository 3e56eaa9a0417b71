#include <catch_amalgamated.hpp>

#include "conceptkit/conceptkit.hpp"
#include "support/fixtures.hpp"

using namespace conceptkit;
using namespace fixtures;

namespace {

EnrichedContext planet_closure() { return contextual_closure(planet_incidence()); }

/// The expected 16x16 matrix, assembled from its four blocks.
Relation expected_planet_sum_matrix(const Carrier& carrier) {
  std::vector<Bitset> rows(16, Bitset(16));
  auto blit = [&](const Relation& block, std::size_t ro, std::size_t co) {
    for (std::size_t i = 0; i < block.source().size(); ++i)
      block.row(i).for_each([&](std::size_t j) { rows[ro + i].set(co + j); });
  };
  blit(planet_source_order(), 0, 0);
  blit(planet_incidence(), 0, 9);
  blit(planet_negation(), 9, 0);
  blit(planet_target_order(), 9, 9);
  return Relation(carrier, carrier, std::move(rows));
}

}  // namespace

TEST_CASE("sum of a context") {
  SECTION("the planetary sum reproduces the expected 16x16 matrix") {
    SumOrder s = sum(planet_closure());
    REQUIRE(s.order().size() == 16);
    CHECK(s.order().relation() == expected_planet_sum_matrix(s.order().carrier()));
    CHECK(s.order().carrier().element(0) == "0:Me");
    CHECK(s.order().carrier().element(9) == "1:ss");
    for (std::size_t i = 0; i < 16; ++i) CHECK(s.tag(i) == (i >= 9 ? 1 : 0));
  }

  SECTION("the sum of the terminal context is the binary order") {
    SumOrder s = sum(terminal_context());
    REQUIRE(s.order().size() == 2);
    CHECK(s.order().relation().pair_count() == 4);  // both elements equivalent
    CHECK(s.tag(0) == 0);
    CHECK(s.tag(1) == 1);
  }

  SECTION("the toy sum collapses into a two-class chain") {
    SumOrder s = sum(contextual_closure(t2_incidence()));
    const Preorder& o = s.order();
    auto i = [&](const char* n) { return o.carrier().index_of(n); };
    CHECK(o.leq(i("0:a"), i("1:p")));
    CHECK(o.leq(i("1:p"), i("0:a")));
    CHECK(o.leq(i("0:b"), i("1:q")));
    CHECK(o.leq(i("1:q"), i("0:b")));
    CHECK(o.leq(i("0:a"), i("0:b")));
    CHECK_FALSE(o.leq(i("0:b"), i("0:a")));
  }
}

TEST_CASE("fibration") {
  SECTION("fibrate is a two-sided inverse of sum on the planets") {
    EnrichedContext closure = planet_closure();
    SumOrder s = sum(closure);
    CHECK(fibrate(s) == closure);
    CHECK(sum(fibrate(s)) == s);
  }

  SECTION("the binary order with the identity tag fibrates to a terminal shape") {
    SumOrder s = SumOrder::from_tagged(binary_order(),
                                       MonotoneMap::identity(binary_order()));
    EnrichedContext ctx = fibrate(s);
    CHECK(ctx.source_order().size() == 1);
    CHECK(ctx.target_order().size() == 1);
    CHECK(ctx.forward().pair_count() == 1);
    CHECK(ctx.backward().pair_count() == 1);
  }

  SECTION("round trips on random contexts") {
    Rng rng(51);
    for (int it = 0; it < 200; ++it) {
      EnrichedContext ctx = random_context(rng, rng.between(1, 10));
      SumOrder s = sum(ctx);
      REQUIRE(fibrate(s) == ctx);
      REQUIRE(sum(fibrate(s)) == s);
    }
  }
}

TEST_CASE("relative copairing") {
  EnrichedContext closure = planet_closure();
  SumOrder s = sum(closure);

  SECTION("a concept extent copaired with its collective part is an ideal of the sum") {
    Bitset phi = planet_entities().subset({"J", "S"});
    Bitset phi1 = ideal_relation_as_subset(residuate_source(
        planet_incidence(), subset_as_ideal_relation(phi, planet_entities())));
    CHECK(phi1 == planet_attributes().subset({"sl"}));
    Bitset combined = relative_copair_of_ideals(phi, phi1, s);
    Bitset expected(16);
    expected.set(s.order().carrier().index_of("0:J"));
    expected.set(s.order().carrier().index_of("0:S"));
    expected.set(s.order().carrier().index_of("1:sl"));
    CHECK(combined == expected);
    CHECK(is_down_closed(combined, s.order()));
  }

  SECTION("copairing bottoms gives bottom") {
    Carrier y("y", {"*"});
    Relation bot0 = Relation::bottom(planet_entities(), y);
    Relation bot1 = Relation::bottom(planet_attributes(), y);
    CHECK(relative_copair(bot0, bot1, s) ==
          Relation::bottom(s.order().carrier(), y));
  }

  SECTION("violated source constraints are named") {
    Carrier y("y", {"*"});
    Relation rho0 = Relation::bottom(planet_entities(), y);
    Relation rho1 = Relation::top(planet_attributes(), y);
    CHECK_THROWS_MATCHES(relative_copair(rho0, rho1, s), ConstraintError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "mu01 o rho1 <= rho0")));
  }

  SECTION("copairing laws") {
    Rng rng(52);
    for (int it = 0; it < 60; ++it) {
      EnrichedContext ctx = random_context(rng, rng.between(2, 7));
      SumOrder so = sum(ctx);
      Preorder Y = random_preorder(rng, random_carrier(rng, rng.between(1, 4), "y"));
      Preorder Z = random_preorder(rng, random_carrier(rng, rng.between(1, 4), "z"));
      Relation r0 = random_closed_relation(rng, ctx.source_order(), Y);
      Relation r1 = random_closed_relation(rng, ctx.target_order(), Y);
      lawdetail::repair_copair(r0, r1, ctx);
      Relation r0b = random_closed_relation(rng, ctx.source_order(), Y);
      Relation r1b = random_closed_relation(rng, ctx.target_order(), Y);
      lawdetail::repair_copair(r0b, r1b, ctx);

      Relation cop = relative_copair(r0, r1, so);
      // the defining rules: restriction along the injections recovers the parts
      REQUIRE(compose(direct_graph(so.injection0()), cop) == r0);
      REQUIRE(compose(direct_graph(so.injection1()), cop) == r1);
      // copairing is an order isomorphism onto its image
      Relation cop_b = relative_copair(r0b, r1b, so);
      REQUIRE(leq(cop, cop_b) == (leq(r0, r0b) && leq(r1, r1b)));
      // meet distribution
      REQUIRE(meet(cop, cop_b) == relative_copair(meet(r0, r0b), meet(r1, r1b), so));
      // composition law
      Relation sigma = random_closed_relation(rng, Y, Z);
      REQUIRE(compose(cop, sigma) ==
              relative_copair(compose(r0, sigma), compose(r1, sigma), so));
      // the implication form agrees with the join form
      REQUIRE(cop == meet(residuate_source(direct_graph(so.injection0()), r0),
                          residuate_source(direct_graph(so.injection1()), r1)));
    }
  }
}

TEST_CASE("relative pairing") {
  EnrichedContext closure = planet_closure();
  SumOrder s = sum(closure);

  SECTION("a concept intent paired with its collective part is a filter of the sum") {
    Bitset psi = planet_attributes().subset({"my"});
    Bitset psi0 = filter_relation_as_subset(residuate_target(
        subset_as_filter_relation(psi, planet_attributes()), planet_incidence()));
    CHECK(psi0 == Bitset(9));  // no planet has only-moon attributes
    Bitset combined = relative_pair_of_filters(psi0, psi, s);
    Bitset expected(16);
    expected.set(s.order().carrier().index_of("1:my"));
    CHECK(combined == expected);
    CHECK(is_up_closed(combined, s.order()));
  }

  SECTION("violated target constraints are named") {
    Carrier w("w", {"*"});
    Relation sigma0 = Relation::top(w, planet_entities());
    Relation sigma1 = Relation::bottom(w, planet_attributes());
    CHECK_THROWS_MATCHES(relative_pair(sigma0, sigma1, s), ConstraintError,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                             "sigma0 o mu01 <= sigma1")));
  }

  SECTION("pairing laws") {
    Rng rng(53);
    for (int it = 0; it < 60; ++it) {
      EnrichedContext ctx = random_context(rng, rng.between(2, 7));
      SumOrder so = sum(ctx);
      Preorder W = random_preorder(rng, random_carrier(rng, rng.between(1, 4), "w"));
      Preorder V = random_preorder(rng, random_carrier(rng, rng.between(1, 4), "v"));
      Relation s0 = random_closed_relation(rng, W, ctx.source_order());
      Relation s1 = random_closed_relation(rng, W, ctx.target_order());
      lawdetail::repair_pair(s0, s1, ctx);

      Relation pr = relative_pair(s0, s1, so);
      REQUIRE(compose(pr, inverse_graph(so.injection0())) == s0);
      REQUIRE(compose(pr, inverse_graph(so.injection1())) == s1);
      Relation rho = random_closed_relation(rng, V, W);
      REQUIRE(compose(rho, pr) ==
              relative_pair(compose(rho, s0), compose(rho, s1), so));
      REQUIRE(pr == meet(residuate_target(s0, inverse_graph(so.injection0())),
                         residuate_target(s1, inverse_graph(so.injection1()))));
    }
  }
}

TEST_CASE("sum equations") {
  SECTION("the planetary sum satisfies all five displayed equations") {
    CHECK(verify_sum_equations(sum(planet_closure())).ok());
  }

  SECTION("the binary order satisfies them") {
    CHECK(verify_sum_equations(
              SumOrder::from_tagged(binary_order(), MonotoneMap::identity(binary_order())))
              .ok());
  }

  SECTION("deleting one forward pair breaks a disjointness equation") {
    SumOrder s = sum(planet_closure());
    const Carrier& c = s.order().carrier();
    Relation damaged =
        s.order().relation().with(c.index_of("0:E"), c.index_of("1:my"), false);
    SumEquationReport report = verify_sum_equations(damaged, s.tags());
    REQUIRE_FALSE(report.ok());
    CHECK(report.failures.front() == "i0> o i1< != mu01");
  }
}

TEST_CASE("ideal pairs and the sum") {
  SECTION("constrained ideal pairs biject with ideals of the sum") {
    Rng rng(54);
    for (int it = 0; it < 40; ++it) {
      EnrichedContext ctx = random_context(rng, rng.between(1, 8));
      SumOrder so = sum(ctx);
      // enumerate constrained ideal pairs
      std::size_t matched = 0;
      auto ideals0 = enumerate_ideal_sets(ctx.source_order());
      auto ideals1 = enumerate_ideal_sets(ctx.target_order());
      std::vector<Bitset> images;
      for (const auto& p0 : ideals0)
        for (const auto& p1 : ideals1) {
          bool ok01 = lawdetail::pre_image(ctx.forward(), p1).is_subset_of(p0);
          bool ok10 = lawdetail::pre_image(ctx.backward(), p0).is_subset_of(p1);
          if (ok01 && ok10) {
            ++matched;
            images.push_back(relative_copair_of_ideals(p0, p1, so));
          }
        }
      auto sum_ideals = enumerate_ideal_sets(so.order());
      REQUIRE(matched == sum_ideals.size());
      images = lawdetail::sorted_unique(std::move(images));
      REQUIRE(images.size() == matched);  // injective
      for (const auto& img : images)
        REQUIRE(is_down_closed(img, so.order()));
    }
  }
}

TEST_CASE("summation is functorial") {
  EnrichedContext closure = planet_closure();

  SECTION("the injection pair is a context map into the identity context of the sum") {
    SumOrder s = sum(closure);
    EnrichedContext inc(s.order(), s.order(), s.order().relation(),
                        s.order().relation());
    CHECK(is_context_map(s.injection0(), s.injection1(), closure, inc));
  }

  SECTION("context maps sum to monotone functions preserving the tags") {
    Rng rng(55);
    for (int it = 0; it < 40; ++it) {
      EnrichedContext target = random_context(rng, rng.between(2, 6));
      MonotoneMap f0 = random_subinclusion(rng, target.source_order(), "y0");
      MonotoneMap f1 = random_subinclusion(rng, target.target_order(), "y1");
      EnrichedContext source = inverse_image_context(f0, f1, target);
      SumOrder ssum = sum(source);
      SumOrder tsum = sum(target);
      // assemble +f and check monotonicity via the MonotoneMap constructor
      std::vector<std::size_t> assignment(ssum.order().size());
      for (std::size_t i = 0; i < f0.source().size(); ++i)
        assignment[ssum.injection0().apply(i)] = tsum.injection0().apply(f0.apply(i));
      for (std::size_t i = 0; i < f1.source().size(); ++i)
        assignment[ssum.injection1().apply(i)] = tsum.injection1().apply(f1.apply(i));
      MonotoneMap sum_f(ssum.order(), tsum.order(), assignment);
      for (std::size_t i = 0; i < ssum.order().size(); ++i)
        REQUIRE(ssum.tag(i) == tsum.tag(sum_f.apply(i)));
    }
  }
}
