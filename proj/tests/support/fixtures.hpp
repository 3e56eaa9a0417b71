#pragma once

// Shared golden fixtures for the test suites: the planetary context, its
// induced orders, negation, sum matrix, concept lattice and completion, plus
// the small two-by-two context used throughout.

#include <utility>
#include <vector>

#include "conceptkit/conceptkit.hpp"

namespace fixtures {

using namespace conceptkit;

inline const Carrier& planet_entities() {
  static const Carrier c("planets", {"Me", "V", "E", "Ma", "J", "S", "U", "N", "P"});
  return c;
}

inline const Carrier& planet_attributes() {
  static const Carrier c("properties", {"ss", "sm", "sl", "dn", "df", "my", "mn"});
  return c;
}

/// The has-relation: sizes, distance from the sun, moons. 27 pairs.
inline const Relation& planet_incidence() {
  static const Relation mu = Relation::from_pairs(
      planet_entities(), planet_attributes(),
      {{"Me", "ss"}, {"Me", "dn"}, {"Me", "mn"}, {"V", "ss"},  {"V", "dn"},
       {"V", "mn"},  {"E", "ss"},  {"E", "dn"},  {"E", "my"},  {"Ma", "ss"},
       {"Ma", "dn"}, {"Ma", "my"}, {"J", "sl"},  {"J", "df"},  {"J", "my"},
       {"S", "sl"},  {"S", "df"},  {"S", "my"},  {"U", "sm"},  {"U", "df"},
       {"U", "my"},  {"N", "sm"},  {"N", "df"},  {"N", "my"},  {"P", "ss"},
       {"P", "df"},  {"P", "my"}});
  return mu;
}

inline ClassicContext planet_context() { return ClassicContext(planet_incidence()); }

/// Induced source order: the four equivalent pairs plus the isolated P.
inline const Relation& planet_source_order() {
  static const Relation r = Relation::from_pairs(
      planet_entities(), planet_entities(),
      {{"Me", "Me"}, {"Me", "V"}, {"V", "Me"}, {"V", "V"}, {"E", "E"}, {"E", "Ma"},
       {"Ma", "E"}, {"Ma", "Ma"}, {"J", "J"}, {"J", "S"}, {"S", "J"}, {"S", "S"},
       {"U", "U"}, {"U", "N"}, {"N", "U"}, {"N", "N"}, {"P", "P"}});
  return r;
}

/// Induced target order on the seven properties.
inline const Relation& planet_target_order() {
  static const Relation r = Relation::from_pairs(
      planet_attributes(), planet_attributes(),
      {{"ss", "ss"},
       {"sm", "sm"}, {"sm", "df"}, {"sm", "my"},
       {"sl", "sl"}, {"sl", "df"}, {"sl", "my"},
       {"dn", "ss"}, {"dn", "dn"},
       {"df", "df"}, {"df", "my"},
       {"my", "my"},
       {"mn", "ss"}, {"mn", "dn"}, {"mn", "mn"}});
  return r;
}

/// The negation of the planetary relationship: exactly six pairs.
inline const Relation& planet_negation() {
  static const Relation r = Relation::from_pairs(
      planet_attributes(), planet_entities(),
      {{"sm", "U"}, {"sm", "N"}, {"sl", "J"}, {"sl", "S"}, {"mn", "Me"}, {"mn", "V"}});
  return r;
}

struct NamedConcept {
  const char* name;
  std::vector<std::string> extent;
  std::vector<std::string> intent;
};

/// The twelve concepts of the planetary lattice, in display order.
inline const std::vector<NamedConcept>& planet_concepts() {
  static const std::vector<NamedConcept> rows = {
      {"everything", {"Me", "V", "E", "Ma", "J", "S", "U", "N", "P"}, {}},
      {"with moon", {"E", "Ma", "J", "S", "U", "N", "P"}, {"my"}},
      {"small size", {"Me", "V", "E", "Ma", "P"}, {"ss"}},
      {"small with moon", {"E", "Ma", "P"}, {"ss", "my"}},
      {"far", {"J", "S", "U", "N", "P"}, {"df", "my"}},
      {"near", {"Me", "V", "E", "Ma"}, {"ss", "dn"}},
      {"Plutoness", {"P"}, {"ss", "df", "my"}},
      {"medium size", {"U", "N"}, {"sm", "df", "my"}},
      {"large size", {"J", "S"}, {"sl", "df", "my"}},
      {"near with moon", {"E", "Ma"}, {"ss", "dn", "my"}},
      {"moonless", {"Me", "V"}, {"ss", "dn", "mn"}},
      {"nothing", {}, {"ss", "sm", "sl", "dn", "df", "my", "mn"}}};
  return rows;
}

struct NamedQuad {
  const char* name;
  std::vector<std::string> phi0, phi1, psi0, psi1;
};

/// The twelve quadruple concepts of the completion of the planetary sum.
inline const std::vector<NamedQuad>& planet_quads() {
  static const std::vector<NamedQuad> rows = {
      {"everything",
       {"Me", "V", "E", "Ma", "J", "S", "U", "N", "P"},
       {"ss", "sm", "sl", "dn", "df", "my", "mn"},
       {},
       {}},
      {"with moon", {"E", "Ma", "J", "S", "U", "N", "P"}, {"sm", "sl", "df", "my"}, {}, {"my"}},
      {"small size", {"Me", "V", "E", "Ma", "P"}, {"ss", "dn", "mn"}, {}, {"ss"}},
      {"small with moon", {"E", "Ma", "P"}, {}, {}, {"ss", "my"}},
      {"far", {"J", "S", "U", "N", "P"}, {"sm", "sl", "df"}, {}, {"df", "my"}},
      {"near", {"Me", "V", "E", "Ma"}, {"dn", "mn"}, {}, {"ss", "dn"}},
      {"Plutoness", {"P"}, {}, {"P"}, {"ss", "df", "my"}},
      {"medium size", {"U", "N"}, {"sm"}, {"U", "N"}, {"sm", "df", "my"}},
      {"large size", {"J", "S"}, {"sl"}, {"J", "S"}, {"sl", "df", "my"}},
      {"near with moon", {"E", "Ma"}, {}, {"E", "Ma"}, {"ss", "dn", "my"}},
      {"moonless", {"Me", "V"}, {"mn"}, {"Me", "V"}, {"ss", "dn", "mn"}},
      {"nothing", {}, {}, {"Me", "V", "E", "Ma", "J", "S", "U", "N", "P"},
       {"ss", "sm", "sl", "dn", "df", "my", "mn"}}};
  return rows;
}

inline Concept named_concept(const NamedConcept& row) {
  return Concept{planet_entities().subset(row.extent),
                 planet_attributes().subset(row.intent)};
}

inline QuadConcept named_quad(const NamedQuad& row) {
  return QuadConcept{planet_entities().subset(row.phi0),
                     planet_attributes().subset(row.phi1),
                     planet_entities().subset(row.psi0),
                     planet_attributes().subset(row.psi1)};
}

// --- the toy two-by-two context --------------------------------------------

inline const Carrier& t2_entities() {
  static const Carrier c("t2objs", {"a", "b"});
  return c;
}

inline const Carrier& t2_attributes() {
  static const Carrier c("t2atts", {"p", "q"});
  return c;
}

inline const Relation& t2_incidence() {
  static const Relation mu = Relation::from_pairs(
      t2_entities(), t2_attributes(), {{"a", "p"}, {"a", "q"}, {"b", "q"}});
  return mu;
}

inline ClassicContext t2_context() { return ClassicContext(t2_incidence()); }

}  // namespace fixtures
