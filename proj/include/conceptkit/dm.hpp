#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conceptkit/classic.hpp"
#include "conceptkit/enriched.hpp"
#include "conceptkit/preorder.hpp"
#include "conceptkit/summation.hpp"

namespace conceptkit {

/// A cut of a preorder: an ideal and a filter that are each other's bounds.
struct Cut {
  Bitset ideal;
  Bitset filter;
  bool operator==(const Cut&) const = default;
};

/// The completion by cuts, ordered by ideal inclusion.
class CutLattice {
public:
  CutLattice(Preorder base, std::vector<Cut> cuts)
      : base_(std::move(base)), cuts_(std::move(cuts)) {
    std::sort(cuts_.begin(), cuts_.end(), [](const Cut& a, const Cut& b) {
      if (a.ideal.count() != b.ideal.count()) return a.ideal.count() > b.ideal.count();
      return lex_less(a.ideal, b.ideal);
    });
  }

  const Preorder& base() const { return base_; }
  std::size_t size() const { return cuts_.size(); }
  const Cut& at(std::size_t i) const { return cuts_[i]; }
  const std::vector<Cut>& cuts() const { return cuts_; }

  bool leq(std::size_t i, std::size_t j) const {
    return cuts_[i].ideal.is_subset_of(cuts_[j].ideal);
  }

  std::optional<std::size_t> find_by_ideal(const Bitset& ideal) const {
    for (std::size_t i = 0; i < cuts_.size(); ++i)
      if (cuts_[i].ideal == ideal) return i;
    return std::nullopt;
  }

  /// The order embedding x -> (down x, up x) composed with cut closure.
  std::size_t embed(std::size_t x) const {
    Bitset filter = base_.up_set(x);
    auto i = find_by_ideal(lower_bounds_set(filter, base_));
    if (!i) throw ValidationError("embedding image missing from the completion");
    return *i;
  }

private:
  Preorder base_;
  std::vector<Cut> cuts_;
};

/// Completion by cuts, computed as the concept lattice of the identity
/// context (X, X, <=): extents are lower bound sets of intents and vice
/// versa, which is exactly the cut condition.
inline CutLattice dm_complete(const Preorder& p, const EnumerationOptions& opt = {}) {
  ClassicContext identity(p.carrier(), p.carrier(), p.relation());
  ConceptLattice lattice = enumerate_concepts(identity, opt);
  std::vector<Cut> cuts;
  cuts.reserve(lattice.size());
  for (const auto& c : lattice.concepts()) cuts.push_back(Cut{c.extent, c.intent});
  return CutLattice(p, std::move(cuts));
}

/// Independent cut oracle: scan all (ideal candidate, filter candidate)
/// subset pairs and keep those satisfying both bound equations.
inline std::vector<Cut> dm_cuts_bruteforce(const Preorder& p, std::size_t bound = 8) {
  std::size_t n = p.size();
  if (n > bound)
    throw CapacityError("cut oracle over " + std::to_string(n) +
                        " elements exceeds bound " + std::to_string(bound));
  std::vector<Cut> out;
  for (std::uint64_t ma = 0; ma < (std::uint64_t{1} << n); ++ma) {
    Bitset a(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((ma >> i) & 1) a.set(i);
    for (std::uint64_t mb = 0; mb < (std::uint64_t{1} << n); ++mb) {
      Bitset b(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((mb >> i) & 1) b.set(i);
      if (upper_bounds_set(a, p) == b && lower_bounds_set(b, p) == a)
        out.push_back(Cut{a, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const Cut& x, const Cut& y) {
    if (x.ideal.count() != y.ideal.count()) return x.ideal.count() > y.ideal.count();
    return lex_less(x.ideal, y.ideal);
  });
  return out;
}

/// A concept of the completion of a sum: the cut split by tag into a pair of
/// ideals (individual/collective extent) and a pair of filters
/// (collective/individual intent).
struct QuadConcept {
  Bitset phi0;  // ideal of entities
  Bitset phi1;  // ideal of attributes-as-collective-entities
  Bitset psi0;  // filter of entities-as-collective-attributes
  Bitset psi1;  // filter of attributes
  bool operator==(const QuadConcept&) const = default;
};

namespace detail {

inline void check_quad_invariants(const QuadConcept& q, const EnrichedContext& ctx) {
  const Preorder& x0 = ctx.source_order();
  const Preorder& x1 = ctx.target_order();
  auto image = [](const Relation& r, const Bitset& s) {
    Bitset out(r.source().size());
    for (std::size_t i = 0; i < r.source().size(); ++i)
      if (r.row(i).intersects(s)) out.set(i);
    return out;
  };
  // Ideal and filter assertions: images of the collective components stay
  // inside the individual components.
  if (!image(ctx.forward(), q.phi1).is_subset_of(q.phi0))
    throw ValidationError("quad concept violates ideal assertion mu01 o phi1 <= phi0");
  if (!image(ctx.backward(), q.phi0).is_subset_of(q.phi1))
    throw ValidationError("quad concept violates ideal assertion mu10 o phi0 <= phi1");
  if (!image(conceptkit::opposite(ctx.forward()), q.psi0).is_subset_of(q.psi1))
    throw ValidationError("quad concept violates filter assertion psi0 o mu01 <= psi1");
  if (!image(conceptkit::opposite(ctx.backward()), q.psi1).is_subset_of(q.psi0))
    throw ValidationError("quad concept violates filter assertion psi1 o mu10 <= psi0");
  // Extent and intent constraints: each component is determined by the
  // opposite pair.
  ClassicContext fwd(ctx.forward());
  ClassicContext bwd(ctx.backward());
  if (!(q.phi0 == (lower_bounds_set(q.psi0, x0) & derive_extent(q.psi1, fwd))))
    throw ValidationError("quad concept violates extent constraint for phi0");
  if (!(q.phi1 == (derive_extent(q.psi0, bwd) & lower_bounds_set(q.psi1, x1))))
    throw ValidationError("quad concept violates extent constraint for phi1");
  if (!(q.psi0 == (upper_bounds_set(q.phi0, x0) & derive_intent(q.phi1, bwd))))
    throw ValidationError("quad concept violates intent constraint for psi0");
  if (!(q.psi1 == (derive_intent(q.phi0, fwd) & upper_bounds_set(q.phi1, x1))))
    throw ValidationError("quad concept violates intent constraint for psi1");
}

}  // namespace detail

/// The completion of the sum of a context, presented as quadruples.
class QuadLattice {
public:
  QuadLattice(EnrichedContext ctx, SumOrder sum_order, std::vector<QuadConcept> concepts)
      : ctx_(std::move(ctx)), sum_(std::move(sum_order)), concepts_(std::move(concepts)) {}

  const EnrichedContext& context() const { return ctx_; }
  const SumOrder& sum_order() const { return sum_; }
  std::size_t size() const { return concepts_.size(); }
  const QuadConcept& at(std::size_t i) const { return concepts_[i]; }
  const std::vector<QuadConcept>& concepts() const { return concepts_; }

  /// Componentwise extent inclusion.
  bool leq(std::size_t i, std::size_t j) const {
    return concepts_[i].phi0.is_subset_of(concepts_[j].phi0) &&
           concepts_[i].phi1.is_subset_of(concepts_[j].phi1);
  }

  std::optional<std::size_t> find(const QuadConcept& q) const {
    for (std::size_t i = 0; i < concepts_.size(); ++i)
      if (concepts_[i] == q) return i;
    return std::nullopt;
  }

private:
  EnrichedContext ctx_;
  SumOrder sum_;
  std::vector<QuadConcept> concepts_;
};

/// Split a cut of a sum order by the tag function.
inline QuadConcept split_cut(const Cut& cut, const SumOrder& s) {
  const std::size_t n0 = s.injection0().source().size();
  const std::size_t n1 = s.injection1().source().size();
  QuadConcept q{Bitset(n0), Bitset(n1), Bitset(n0), Bitset(n1)};
  for (std::size_t i = 0; i < n0; ++i) {
    std::size_t z = s.injection0().apply(i);
    if (cut.ideal.test(z)) q.phi0.set(i);
    if (cut.filter.test(z)) q.psi0.set(i);
  }
  for (std::size_t i = 0; i < n1; ++i) {
    std::size_t z = s.injection1().apply(i);
    if (cut.ideal.test(z)) q.phi1.set(i);
    if (cut.filter.test(z)) q.psi1.set(i);
  }
  return q;
}

/// Dedekind-MacNeille completion of the sum of a context. Every quadruple is
/// checked against the ideal/filter assertions and extent/intent constraints.
inline QuadLattice dm_of_sum(const EnrichedContext& ctx, const EnumerationOptions& opt = {}) {
  SumOrder s = sum(ctx);
  CutLattice cuts = dm_complete(s.order(), opt);
  std::vector<QuadConcept> concepts;
  concepts.reserve(cuts.size());
  for (const auto& cut : cuts.cuts()) {
    QuadConcept q = split_cut(cut, s);
    detail::check_quad_invariants(q, ctx);
    concepts.push_back(std::move(q));
  }
  return QuadLattice(ctx, std::move(s), std::move(concepts));
}

/// Embedding generator concepts, by the closed-form quadruples. Intended for
/// contexts in contextual-closure form, whose orders are the induced orders.
inline QuadConcept quad_generator_entity(const EnrichedContext& ctx, std::size_t x0) {
  ClassicContext fwd(ctx.forward());
  Bitset single = Bitset::single(ctx.source_order().size(), x0);
  Bitset row = derive_intent(single, fwd);  // x0 mu
  return QuadConcept{ctx.source_order().down_set(x0) & extent_closure(single, fwd),
                     lower_bounds_set(row, ctx.target_order()),
                     ctx.source_order().up_set(x0), row};
}

inline QuadConcept quad_generator_attribute(const EnrichedContext& ctx, std::size_t x1) {
  ClassicContext fwd(ctx.forward());
  Bitset single = Bitset::single(ctx.target_order().size(), x1);
  Bitset col = derive_extent(single, fwd);  // mu x1
  return QuadConcept{col, ctx.target_order().down_set(x1),
                     upper_bounds_set(col, ctx.source_order()),
                     ctx.target_order().up_set(x1) & intent_closure(single, fwd)};
}

struct QuadGenerators {
  std::vector<std::size_t> entity_concept;
  std::vector<std::size_t> attribute_concept;
};

inline QuadGenerators quad_generators(const EnrichedContext& ctx, const QuadLattice& dm) {
  QuadGenerators out;
  out.entity_concept.resize(ctx.source_order().size());
  out.attribute_concept.resize(ctx.target_order().size());
  for (std::size_t x = 0; x < ctx.source_order().size(); ++x) {
    auto i = dm.find(quad_generator_entity(ctx, x));
    if (!i)
      throw ValidationError("entity generator image is not a concept of the completion");
    out.entity_concept[x] = *i;
  }
  for (std::size_t y = 0; y < ctx.target_order().size(); ++y) {
    auto i = dm.find(quad_generator_attribute(ctx, y));
    if (!i)
      throw ValidationError("attribute generator image is not a concept of the completion");
    out.attribute_concept[y] = *i;
  }
  return out;
}

}  // namespace conceptkit
