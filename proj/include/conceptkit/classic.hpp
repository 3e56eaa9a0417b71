#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conceptkit/bitset.hpp"
#include "conceptkit/carrier.hpp"
#include "conceptkit/errors.hpp"
#include "conceptkit/preorder.hpp"
#include "conceptkit/relation.hpp"

namespace conceptkit {

/// A classical formal context: entities, attributes and a has-relation.
struct ClassicContext {
  Carrier entities;
  Carrier attributes;
  Relation incidence;

  ClassicContext(Carrier entities_, Carrier attributes_, Relation incidence_)
      : entities(std::move(entities_)),
        attributes(std::move(attributes_)),
        incidence(std::move(incidence_)) {
    detail::require_same(incidence.source(), entities, "ClassicContext");
    detail::require_same(incidence.target(), attributes, "ClassicContext");
  }

  explicit ClassicContext(Relation incidence_)
      : ClassicContext(incidence_.source(), incidence_.target(), incidence_) {}

  friend bool operator==(const ClassicContext& a, const ClassicContext& b) {
    return a.incidence == b.incidence;
  }
};

/// Attributes shared by every entity in the subset. derive_intent({}) is the
/// full attribute set.
inline Bitset derive_intent(const Bitset& extent, const ClassicContext& c) {
  detail::require_subset_fits(extent, c.entities, "derive_intent");
  Bitset out = Bitset::full(c.attributes.size());
  extent.for_each([&](std::size_t x) { out &= c.incidence.row(x); });
  return out;
}

/// Entities sharing every attribute in the subset.
inline Bitset derive_extent(const Bitset& intent, const ClassicContext& c) {
  detail::require_subset_fits(intent, c.attributes, "derive_extent");
  Bitset out = Bitset::full(c.entities.size());
  intent.for_each([&](std::size_t y) { out &= c.incidence.column(y); });
  return out;
}

enum class DeriveDirection { intent, extent };

inline Bitset derive(DeriveDirection dir, const Bitset& s, const ClassicContext& c) {
  return dir == DeriveDirection::intent ? derive_intent(s, c) : derive_extent(s, c);
}

inline Bitset extent_closure(const Bitset& s, const ClassicContext& c) {
  return derive_extent(derive_intent(s, c), c);
}

inline Bitset intent_closure(const Bitset& s, const ClassicContext& c) {
  return derive_intent(derive_extent(s, c), c);
}

/// The largest source and target orders for which the incidence is closed:
/// x' <=0 x iff x' has every attribute of x, and y <=1 y' iff every entity
/// with y also has y'.
inline std::pair<Preorder, Preorder> induced_orders(const ClassicContext& c) {
  return {Preorder(residuate_target(c.incidence, c.incidence)),
          Preorder(residuate_source(c.incidence, c.incidence))};
}

struct Concept {
  Bitset extent;
  Bitset intent;
  bool operator==(const Concept&) const = default;
};

/// Canonical concept order for all outputs: descending extent cardinality,
/// ties by lexicographic extent bitvector.
inline bool canonical_concept_less(const Concept& a, const Concept& b) {
  if (a.extent.count() != b.extent.count()) return a.extent.count() > b.extent.count();
  return lex_less(a.extent, b.extent);
}

struct EnumerationOptions {
  std::size_t max_dimension = 64;  // per-side capacity of the default enumerator
  bool use_oracle = false;         // force the power-set enumerator
  std::size_t oracle_bound = kDefaultOracleBound;
};

namespace detail {

/// NextClosure: enumerate all closed attribute sets in lectic order.
inline std::vector<Concept> next_closure_concepts(const ClassicContext& c) {
  const std::size_t m = c.attributes.size();
  auto close = [&](const Bitset& b) { return intent_closure(b, c); };
  std::vector<Concept> out;
  Bitset intent = close(Bitset(m));
  for (;;) {
    out.push_back(Concept{derive_extent(intent, c), intent});
    bool advanced = false;
    for (std::size_t ii = m; ii-- > 0;) {
      if (intent.test(ii)) continue;
      Bitset candidate(m);
      for (std::size_t j = 0; j < ii; ++j)
        if (intent.test(j)) candidate.set(j);
      candidate.set(ii);
      Bitset closed = close(candidate);
      // Lectic condition: the closure may not add attributes below ii.
      bool ok = true;
      for (std::size_t j = 0; j < ii && ok; ++j)
        if (closed.test(j) && !intent.test(j)) ok = false;
      if (ok) {
        intent = std::move(closed);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

/// Independent oracle: fixpoints of the intent closure over the full power
/// set of attributes.
inline std::vector<Concept> powerset_concepts(const ClassicContext& c,
                                              std::size_t bound) {
  const std::size_t m = c.attributes.size();
  if (m > bound)
    throw CapacityError("power-set enumeration over " + std::to_string(m) +
                        " attributes exceeds oracle bound " + std::to_string(bound));
  std::vector<Concept> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Bitset s(m);
    for (std::size_t j = 0; j < m; ++j)
      if ((mask >> j) & 1) s.set(j);
    if (intent_closure(s, c) == s) out.push_back(Concept{derive_extent(s, c), s});
  }
  return out;
}

}  // namespace detail

class ConceptLattice {
public:
  ConceptLattice(ClassicContext context, std::vector<Concept> concepts)
      : context_(std::move(context)), concepts_(std::move(concepts)) {
    std::sort(concepts_.begin(), concepts_.end(), canonical_concept_less);
    std::vector<std::string> names(concepts_.size());
    for (std::size_t i = 0; i < names.size(); ++i) names[i] = std::to_string(i);
    Carrier carrier("concepts", std::move(names));
    std::vector<Bitset> rows(concepts_.size(), Bitset(concepts_.size()));
    for (std::size_t i = 0; i < concepts_.size(); ++i)
      for (std::size_t j = 0; j < concepts_.size(); ++j)
        if (concepts_[i].extent.is_subset_of(concepts_[j].extent)) rows[i].set(j);
    order_ = Relation(carrier, carrier, std::move(rows));
  }

  const ClassicContext& context() const { return context_; }
  std::size_t size() const { return concepts_.size(); }
  const Concept& at(std::size_t i) const { return concepts_[i]; }
  const std::vector<Concept>& concepts() const { return concepts_; }

  /// Generalization/specialization order as a relation on concept indices.
  const Relation& order() const { return order_; }

  bool leq(std::size_t i, std::size_t j) const { return order_.contains(i, j); }

  std::optional<std::size_t> find_by_extent(const Bitset& extent) const {
    for (std::size_t i = 0; i < concepts_.size(); ++i)
      if (concepts_[i].extent == extent) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> find(const Concept& c) const {
    auto i = find_by_extent(c.extent);
    if (i && concepts_[*i].intent == c.intent) return i;
    return std::nullopt;
  }

  std::size_t index_of(const Concept& c) const {
    auto i = find(c);
    if (!i)
      throw ValidationError("concept is not a member of this lattice");
    return *i;
  }

  /// Meet by the closure formula: (intersection of extents, closure of the
  /// union of intents). The empty family yields the top concept.
  Concept meet(const std::vector<std::size_t>& family) const {
    Bitset extent = Bitset::full(context_.entities.size());
    Bitset intents(context_.attributes.size());
    for (std::size_t i : family) {
      extent &= concepts_[i].extent;
      intents |= concepts_[i].intent;
    }
    return Concept{extent, intent_closure(intents, context_)};
  }

  Concept join(const std::vector<std::size_t>& family) const {
    Bitset extents(context_.entities.size());
    Bitset intent = Bitset::full(context_.attributes.size());
    for (std::size_t i : family) {
      extents |= concepts_[i].extent;
      intent &= concepts_[i].intent;
    }
    return Concept{extent_closure(extents, context_), intent};
  }

  /// Value-level overloads; every member must belong to this lattice.
  Concept meet(const std::vector<Concept>& family) const {
    return meet(indices_of(family));
  }
  Concept join(const std::vector<Concept>& family) const {
    return join(indices_of(family));
  }

  std::size_t top() const { return 0; }  // canonical order puts the largest extent first
  std::size_t bottom() const { return concepts_.size() - 1; }

private:
  std::vector<std::size_t> indices_of(const std::vector<Concept>& family) const {
    std::vector<std::size_t> idx;
    idx.reserve(family.size());
    for (const auto& c : family) idx.push_back(index_of(c));
    return idx;
  }

  ClassicContext context_;
  std::vector<Concept> concepts_;
  Relation order_;
};

/// All and only the closed extent/intent pairs, in canonical order.
/// NextClosure by default; the power-set oracle behind the flag.
inline ConceptLattice enumerate_concepts(const ClassicContext& c,
                                         const EnumerationOptions& opt = {}) {
  if (!opt.use_oracle &&
      (c.entities.size() > opt.max_dimension || c.attributes.size() > opt.max_dimension))
    throw CapacityError("context " + std::to_string(c.entities.size()) + "x" +
                        std::to_string(c.attributes.size()) +
                        " exceeds enumerator capacity " +
                        std::to_string(opt.max_dimension));
  auto concepts = opt.use_oracle ? detail::powerset_concepts(c, opt.oracle_bound)
                                 : detail::next_closure_concepts(c);
  return ConceptLattice(c, std::move(concepts));
}

struct GeneratorMaps {
  std::vector<std::size_t> entity_concept;     // index into the lattice, per entity
  std::vector<std::size_t> attribute_concept;  // per attribute
};

/// The generator functions: each entity maps to (closure of itself, its
/// attributes), each attribute to (its entities, closure of itself).
inline GeneratorMaps generators(const ConceptLattice& lattice) {
  const auto& c = lattice.context();
  GeneratorMaps maps;
  maps.entity_concept.resize(c.entities.size());
  maps.attribute_concept.resize(c.attributes.size());
  for (std::size_t x = 0; x < c.entities.size(); ++x) {
    Bitset single = Bitset::single(c.entities.size(), x);
    maps.entity_concept[x] =
        lattice.index_of(Concept{extent_closure(single, c), derive_intent(single, c)});
  }
  for (std::size_t y = 0; y < c.attributes.size(); ++y) {
    Bitset single = Bitset::single(c.attributes.size(), y);
    maps.attribute_concept[y] =
        lattice.index_of(Concept{derive_extent(single, c), intent_closure(single, c)});
  }
  return maps;
}

struct BasicTheoremReport {
  std::vector<std::string> completeness;    // missing meets/joins
  std::vector<std::string> join_density;    // entities failing join-density
  std::vector<std::string> meet_density;    // attributes failing meet-density
  std::vector<std::string> recovery;        // incidence recovery mismatches
  bool ok() const {
    return completeness.empty() && join_density.empty() && meet_density.empty() &&
           recovery.empty();
  }
};

/// Check the four clauses of the basic theorem on a (possibly corrupted)
/// concept list: lattice completeness, join-density of the entity generators,
/// meet-density of the attribute generators, and recovery of the incidence
/// from generators plus order.
inline BasicTheoremReport verify_basic_theorem(const ConceptLattice& lattice) {
  BasicTheoremReport report;
  const auto& c = lattice.context();
  const std::size_t n = lattice.size();

  auto member = [&](const Concept& cand) { return lattice.find(cand).has_value(); };

  // Completeness: closure under pairwise meet/join plus greatest and least
  // elements (sufficient for finite orders).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!member(lattice.meet({i, j})))
        report.completeness.push_back("meet of concepts " + std::to_string(i) + "," +
                                      std::to_string(j) + " missing");
      if (!member(lattice.join({i, j})))
        report.completeness.push_back("join of concepts " + std::to_string(i) + "," +
                                      std::to_string(j) + " missing");
    }
  if (!member(lattice.meet(std::vector<std::size_t>{})))
    report.completeness.push_back("top concept missing");
  if (!member(lattice.join(std::vector<std::size_t>{})))
    report.completeness.push_back("bottom concept missing");

  if (!report.completeness.empty())
    return report;  // density checks assume the generator images exist

  GeneratorMaps gen = generators(lattice);

  // Join-density: every concept is the join of entity generators below it.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> below;
    lattice.at(i).extent.for_each(
        [&](std::size_t x) { below.push_back(gen.entity_concept[x]); });
    if (!(lattice.join(below) == lattice.at(i)))
      report.join_density.push_back("concept " + std::to_string(i) +
                                    " is not a join of entity generators");
  }
  // Meet-density dually.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> above;
    lattice.at(i).intent.for_each(
        [&](std::size_t y) { above.push_back(gen.attribute_concept[y]); });
    if (!(lattice.meet(above) == lattice.at(i)))
      report.meet_density.push_back("concept " + std::to_string(i) +
                                    " is not a meet of attribute generators");
  }

  // x0 mu x1 iff i0(x0) <= i1(x1).
  for (std::size_t x = 0; x < c.entities.size(); ++x)
    for (std::size_t y = 0; y < c.attributes.size(); ++y) {
      bool has = c.incidence.contains(x, y);
      bool ordered = lattice.leq(gen.entity_concept[x], gen.attribute_concept[y]);
      if (has != ordered)
        report.recovery.push_back(c.entities.element(x) + " / " +
                                  c.attributes.element(y) + ": incidence " +
                                  (has ? "present" : "absent") + " but generators " +
                                  (ordered ? "ordered" : "unordered"));
    }
  return report;
}

/// Output annotation: a concept is labeled by the entities and attributes
/// whose generator concept it is.
struct ConceptLabels {
  std::vector<std::vector<std::string>> entity_labels;
  std::vector<std::vector<std::string>> attribute_labels;
};

inline ConceptLabels concept_labels(const ConceptLattice& lattice) {
  const auto& c = lattice.context();
  GeneratorMaps gen = generators(lattice);
  ConceptLabels labels;
  labels.entity_labels.resize(lattice.size());
  labels.attribute_labels.resize(lattice.size());
  for (std::size_t x = 0; x < c.entities.size(); ++x)
    labels.entity_labels[gen.entity_concept[x]].push_back(c.entities.element(x));
  for (std::size_t y = 0; y < c.attributes.size(); ++y)
    labels.attribute_labels[gen.attribute_concept[y]].push_back(c.attributes.element(y));
  return labels;
}

}  // namespace conceptkit
