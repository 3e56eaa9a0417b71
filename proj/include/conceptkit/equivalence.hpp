#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conceptkit/classic.hpp"
#include "conceptkit/dm.hpp"
#include "conceptkit/enriched.hpp"

namespace conceptkit {

/// The isomorphism between a relation's concept lattice and the completion of
/// the sum of its contextual closure: a quadruple is attached to each concept
/// by taking the extent together with the attributes whose entities it covers,
/// and the intent together with the entities whose attributes it covers.
inline QuadConcept cl_to_dm(const Concept& c, const ClassicContext& ctx) {
  if (!(extent_closure(c.extent, ctx) == c.extent &&
        derive_intent(c.extent, ctx) == c.intent))
    throw ValidationError("cl_to_dm requires a concept of the given context");
  const Relation& mu = ctx.incidence;
  // phi1 = attributes whose extent lies inside the concept extent;
  // psi0 = entities whose intent lies inside the concept intent.
  Bitset phi1(ctx.attributes.size());
  for (std::size_t y = 0; y < ctx.attributes.size(); ++y)
    if (mu.column(y).is_subset_of(c.extent)) phi1.set(y);
  Bitset psi0(ctx.entities.size());
  for (std::size_t x = 0; x < ctx.entities.size(); ++x)
    if (mu.row(x).is_subset_of(c.intent)) psi0.set(x);
  return QuadConcept{c.extent, phi1, psi0, c.intent};
}

struct IsoWitness {
  std::vector<std::size_t> forward;   // concept index -> quad concept index
  std::vector<std::size_t> backward;  // quad concept index -> concept index
};

struct EquivalenceResult {
  ConceptLattice lattice;
  QuadLattice completion;
  std::optional<IsoWitness> witness;      // present iff the isomorphism holds
  std::vector<std::string> counterexamples;
  bool ok() const { return witness.has_value(); }
};

/// Build both lattices for a bare relation, map concepts across, and verify a
/// bijective order-isomorphism in both directions.
inline EquivalenceResult verify_equivalence(const Relation& mu,
                                            const EnumerationOptions& opt = {}) {
  ClassicContext ctx(mu);
  ConceptLattice cl = enumerate_concepts(ctx, opt);
  QuadLattice dm = dm_of_sum(contextual_closure(mu), opt);

  std::vector<std::string> problems;
  std::vector<std::size_t> forward(cl.size());
  std::vector<std::size_t> backward(dm.size(), dm.size());

  if (cl.size() != dm.size())
    problems.push_back("concept counts differ: " + std::to_string(cl.size()) + " vs " +
                       std::to_string(dm.size()));

  for (std::size_t i = 0; i < cl.size() && problems.empty(); ++i) {
    auto j = dm.find(cl_to_dm(cl.at(i), ctx));
    if (!j) {
      problems.push_back("image of concept " + std::to_string(i) +
                         " is missing from the completion");
      break;
    }
    if (backward[*j] != dm.size()) {
      problems.push_back("concepts " + std::to_string(backward[*j]) + " and " +
                         std::to_string(i) + " collide in the completion");
      break;
    }
    forward[i] = *j;
    backward[*j] = i;
  }

  if (problems.empty())
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = 0; j < cl.size(); ++j)
        if (cl.leq(i, j) != dm.leq(forward[i], forward[j])) {
          problems.push_back("order disagrees at concepts " + std::to_string(i) + "," +
                             std::to_string(j));
          i = cl.size();
          break;
        }

  EquivalenceResult result{std::move(cl), std::move(dm), std::nullopt, std::move(problems)};
  if (result.counterexamples.empty())
    result.witness = IsoWitness{std::move(forward), std::move(backward)};
  return result;
}

}  // namespace conceptkit
