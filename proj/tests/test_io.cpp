#include <catch_amalgamated.hpp>

#include "conceptkit/conceptkit.hpp"
#include "support/fixtures.hpp"

using namespace conceptkit;
using namespace fixtures;

namespace {

const std::string kDataDir = CONCEPTKIT_DATA_DIR;

}  // namespace

TEST_CASE("cxt parsing and writing") {
  std::string bytes = read_file(kDataDir + "/planets.cxt");
  ContextDocument doc = parse_cxt(bytes);

  SECTION("the shipped planets file parses to the expected relationship") {
    CHECK(doc.name == "planets");
    CHECK(doc.classic().incidence.pair_count() == 27);
    CHECK(doc.classic().entities.elements() == planet_entities().elements());
    CHECK(doc.classic().attributes.elements() == planet_attributes().elements());
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        REQUIRE(doc.classic().incidence.contains(i, j) ==
                planet_incidence().contains(i, j));
  }

  SECTION("writing reproduces the canonical bytes exactly") {
    CHECK(write_cxt(doc.classic(), doc.name) == bytes);
  }

  SECTION("structural round trip through arbitrary contexts") {
    Rng rng(81);
    for (int it = 0; it < 100; ++it) {
      Carrier e = random_carrier(rng, rng.between(0, 6), "e");
      Carrier a = random_carrier(rng, rng.between(0, 6), "a");
      ClassicContext ctx(random_relation(rng, e, a, rng.density()));
      ContextDocument back = parse_cxt(write_cxt(ctx, "roundtrip"));
      REQUIRE(back.classic().incidence.pairs() == ctx.incidence.pairs());
    }
  }

  SECTION("an empty context is legal and has one concept") {
    ContextDocument empty = parse_cxt("B\nempty\n0\n0\n\n");
    ConceptLattice l = enumerate_concepts(empty.classic());
    CHECK(l.size() == 1);
  }
}

TEST_CASE("cxt parse errors carry line numbers") {
  auto line_of = [](const std::string& bytes) -> std::size_t {
    try {
      parse_cxt(bytes);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };

  CHECK(line_of("A\nx\n1\n1\n\no\na\nX\n") == 1);        // malformed header
  CHECK(line_of("B\nx\nfoo\n1\n\no\na\nX\n") == 3);      // bad object count
  CHECK(line_of("B\nx\n1\n1\nnoblank\no\na\nX\n") == 5); // missing blank line
  CHECK(line_of("B\nx\n1\n1\n\no\na\nXX\n") == 8);       // row too long
  CHECK(line_of("B\nx\n1\n1\n\no\na\n?\n") == 8);        // illegal character
  CHECK(line_of("B\nx\n2\n1\n\no\no\na\nX\nX\n") == 8);  // duplicate names
  CHECK(line_of("B\nx\n1\n1\n\no\na\nX\njunk\n") == 9);  // trailing content
  CHECK(line_of("B\r\nx\n1\n1\n\no\na\nX\n") == 1);      // CR line ending
  CHECK(line_of("B\nx\n2\n1\n\no\n") == 7);              // unexpected end of file
}

TEST_CASE("csv cross-table import") {
  SECTION("the shipped csv matches the cxt context") {
    ContextDocument doc = load_context(kDataDir + "/planets.csv");
    CHECK(doc.format == "csv");
    CHECK(doc.classic().incidence.pairs() == planet_incidence().pairs());
  }

  SECTION("cell and shape errors carry line numbers") {
    CHECK_THROWS_AS(parse_csv_context("h,a\ne,X,X\n"), ParseError);
    CHECK_THROWS_AS(parse_csv_context("h,a\ne,banana\n"), ParseError);
    CHECK_THROWS_AS(parse_csv_context(""), ParseError);
  }
}

TEST_CASE("json outputs are deterministic") {
  ConceptLattice lattice = enumerate_concepts(planet_context());
  EnumerationOptions oracle;
  oracle.use_oracle = true;
  ConceptLattice via_oracle = enumerate_concepts(planet_context(), oracle);

  CHECK(concepts_json(lattice).dump() == concepts_json(via_oracle).dump());

  QuadLattice dm = dm_of_sum(contextual_closure(planet_incidence()));
  std::string once = quad_json(dm).dump();
  std::string twice = quad_json(dm_of_sum(contextual_closure(planet_incidence()))).dump();
  CHECK(once == twice);

  SECTION("oracle and default enumerators emit identical json") {
    EnrichedContext t2c = contextual_closure(t2_incidence());
    CHECK(quad_json(dm_of_sum(t2c)).dump() == quad_json(dm_of_sum(t2c, oracle)).dump());
    Rng rng(82);
    for (int it = 0; it < 40; ++it) {
      Carrier e = random_carrier(rng, rng.between(1, 6), "e");
      Carrier a = random_carrier(rng, rng.between(1, 6), "a");
      ClassicContext ctx(random_relation(rng, e, a, rng.density()));
      REQUIRE(concepts_json(enumerate_concepts(ctx)).dump() ==
              concepts_json(enumerate_concepts(ctx, oracle)).dump());
    }
  }

  SECTION("concept rows serialize extents and intents by name") {
    ordered_json j = concepts_json(lattice);
    REQUIRE(j["concepts"].size() == 12);
    CHECK(j["concepts"][0]["extent"].size() == 9);
    CHECK(j["concepts"][0]["intent"].size() == 0);
  }
}

TEST_CASE("hasse covers and dot output") {
  ConceptLattice lattice = enumerate_concepts(planet_context());
  auto covers = hasse_covers(lattice);

  SECTION("covers agree with an independent reduction over the expected rows") {
    // order the twelve expected rows by extent inclusion and reduce
    std::vector<Bitset> extents;
    for (const auto& row : planet_concepts())
      extents.push_back(planet_entities().subset(row.extent));
    std::vector<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t i = 0; i < extents.size(); ++i)
      for (std::size_t j = 0; j < extents.size(); ++j) {
        if (i == j || !extents[i].is_subset_of(extents[j])) continue;
        bool direct = true;
        for (std::size_t k = 0; k < extents.size() && direct; ++k)
          if (k != i && k != j && extents[i].is_subset_of(extents[k]) &&
              extents[k].is_subset_of(extents[j]))
            direct = false;
        if (direct) expected.emplace_back(i, j);
      }
    // translate into lattice indices
    std::vector<std::pair<std::size_t, std::size_t>> translated;
    for (auto [i, j] : expected)
      translated.emplace_back(*lattice.find_by_extent(extents[i]),
                              *lattice.find_by_extent(extents[j]));
    std::sort(translated.begin(), translated.end());
    auto sorted_covers = covers;
    std::sort(sorted_covers.begin(), sorted_covers.end());
    CHECK(sorted_covers == translated);
  }

  SECTION("dot output lists every concept once, top first") {
    std::string dot = emit_dot(lattice);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("c0 [") != std::string::npos);
    CHECK(dot.find("c11 [") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = dot.find(" -> "); at != std::string::npos;
         at = dot.find(" -> ", at + 1))
      ++edges;
    CHECK(edges == covers.size());
  }

  SECTION("degenerate lattices") {
    Carrier a("a", {"x"}), b("b", {"y"});
    ConceptLattice one = enumerate_concepts(ClassicContext(Relation::top(a, b)));
    CHECK(hasse_covers(one).empty());
    ConceptLattice two = enumerate_concepts(t2_context());
    CHECK(hasse_covers(two).size() == 1);
    std::string dot = emit_dot(two);
    CHECK(dot.find("c0 ->") == std::string::npos);  // edges point upward
    CHECK(dot.find("c1 -> c0") != std::string::npos);
  }
}
