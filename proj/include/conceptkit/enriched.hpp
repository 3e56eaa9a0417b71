#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conceptkit/classic.hpp"
#include "conceptkit/monotone_map.hpp"
#include "conceptkit/preorder.hpp"
#include "conceptkit/relation.hpp"

namespace conceptkit {

struct ContextReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Closedness of a relation w.r.t. a source order on the left and a target
/// order on the right.
inline bool is_closed_relation(const Relation& r, const Preorder& source,
                               const Preorder& target) {
  detail::require_same(r.source(), source.carrier(), "is_closed_relation");
  detail::require_same(r.target(), target.carrier(), "is_closed_relation");
  return leq(compose(source.relation(), r), r) && leq(compose(r, target.relation()), r);
}

/// Smallest closed relation containing r between the given orders.
inline Relation close_relation(const Relation& r, const Preorder& source,
                               const Preorder& target) {
  return compose(source.relation(), compose(r, target.relation()));
}

inline ContextReport validate_context(const Preorder& source_order,
                                      const Preorder& target_order,
                                      const Relation& forward, const Relation& backward) {
  ContextReport report;
  if (!leq(compose(source_order.relation(), forward), forward))
    report.problems.push_back("forward relation is not closed on the left");
  if (!leq(compose(forward, target_order.relation()), forward))
    report.problems.push_back("forward relation is not closed on the right");
  if (!leq(compose(target_order.relation(), backward), backward))
    report.problems.push_back("backward relation is not closed on the left");
  if (!leq(compose(backward, source_order.relation()), backward))
    report.problems.push_back("backward relation is not closed on the right");
  if (!leq(compose(forward, backward), source_order.relation()))
    report.problems.push_back("orthogonality fails: forward o backward exceeds the source order");
  if (!leq(compose(backward, forward), target_order.relation()))
    report.problems.push_back("orthogonality fails: backward o forward exceeds the target order");
  return report;
}

/// The four-quadrant formal context: two preorders and two oppositely
/// directed closed relations satisfying the orthogonality constraints.
class EnrichedContext {
public:
  EnrichedContext(Preorder source_order, Preorder target_order, Relation forward,
                  Relation backward)
      : source_order_(std::move(source_order)),
        target_order_(std::move(target_order)),
        forward_(std::move(forward)),
        backward_(std::move(backward)) {
    detail::require_same(forward_.source(), source_order_.carrier(), "EnrichedContext");
    detail::require_same(forward_.target(), target_order_.carrier(), "EnrichedContext");
    detail::require_same(backward_.source(), target_order_.carrier(), "EnrichedContext");
    detail::require_same(backward_.target(), source_order_.carrier(), "EnrichedContext");
    auto report = validate_context(source_order_, target_order_, forward_, backward_);
    if (!report.ok()) {
      std::string what = "invalid formal context:";
      for (const auto& p : report.problems) what += " " + p + ";";
      throw ValidationError(what);
    }
  }

  const Preorder& source_order() const { return source_order_; }
  const Preorder& target_order() const { return target_order_; }
  const Relation& forward() const { return forward_; }
  const Relation& backward() const { return backward_; }

  friend bool operator==(const EnrichedContext& a, const EnrichedContext& b) {
    return a.source_order_ == b.source_order_ && a.target_order_ == b.target_order_ &&
           a.forward_ == b.forward_ && a.backward_ == b.backward_;
  }

private:
  Preorder source_order_;
  Preorder target_order_;
  Relation forward_;
  Relation backward_;
};

inline ContextReport validate_context(const EnrichedContext& ctx) {
  return validate_context(ctx.source_order(), ctx.target_order(), ctx.forward(),
                          ctx.backward());
}

// --- negation ---------------------------------------------------------------

/// Largest relation opposite to mu with mu o nu inside the source order.
inline Relation source_negation(const Relation& mu, const Preorder& source_order) {
  return residuate_source(mu, source_order.relation());
}

/// Largest relation opposite to mu with nu o mu inside the target order.
inline Relation target_negation(const Relation& mu, const Preorder& target_order) {
  return residuate_target(target_order.relation(), mu);
}

/// The negation of mu relative to the given orders: the largest relation
/// opposite to mu satisfying both orthogonality constraints. Pointwise, the
/// (y,x) entry holds iff the extent of y lies below x and the intent of x
/// lies above y. Requires mu closed w.r.t. the orders.
inline Relation negation(const Relation& mu, const Preorder& source_order,
                         const Preorder& target_order) {
  if (!is_closed_relation(mu, source_order, target_order))
    throw ValidationError("negation requires a relation closed w.r.t. the given orders");
  return meet(source_negation(mu, source_order), target_negation(mu, target_order));
}

/// Negation relative to the orders induced by mu itself.
inline Relation negation(const Relation& mu) {
  Preorder source(residuate_target(mu, mu));
  Preorder target(residuate_source(mu, mu));
  return negation(mu, source, target);
}

/// The largest formal context containing a bare relation: its induced orders,
/// the relation, and its negation.
inline EnrichedContext contextual_closure(const Relation& mu) {
  Preorder source(residuate_target(mu, mu));
  Preorder target(residuate_source(mu, mu));
  return EnrichedContext(source, target, mu, negation(mu, source, target));
}

/// True iff candidate quadrants with the closure's forward relation sit below
/// the contextual closure: orders below the induced orders and backward
/// relation below the negation. Raw form, so oversized candidates (which can
/// never validate as contexts) are still comparable.
inline bool maximality_check(const EnrichedContext& closure, const Relation& source_order,
                             const Relation& target_order, const Relation& backward) {
  return leq(source_order, closure.source_order().relation()) &&
         leq(target_order, closure.target_order().relation()) &&
         leq(backward, closure.backward());
}

inline bool maximality_check(const EnrichedContext& closure,
                             const EnrichedContext& candidate) {
  if (!(candidate.forward() == closure.forward()))
    throw CarrierMismatchError("maximality_check: candidates must share the forward relation");
  return maximality_check(closure, candidate.source_order().relation(),
                          candidate.target_order().relation(), candidate.backward());
}

// --- category constructions -------------------------------------------------

/// Interchanges entities with attributes: the opposite of the sum order with
/// the tags swapped, i.e. transposed quadrants over the opposite orders.
inline EnrichedContext opposite(const EnrichedContext& ctx) {
  return EnrichedContext(ctx.target_order().opposite(), ctx.source_order().opposite(),
                         opposite(ctx.forward()), opposite(ctx.backward()));
}

/// One entity, one related attribute; the terminal object.
inline const EnrichedContext& terminal_context() {
  static const EnrichedContext ctx = [] {
    Preorder src = Preorder::discrete(Carrier("unit0", {"0"}));
    Preorder tgt = Preorder::discrete(Carrier("unit1", {"1"}));
    return EnrichedContext(src, tgt, Relation::top(src.carrier(), tgt.carrier()),
                           Relation::top(tgt.carrier(), src.carrier()));
  }();
  return ctx;
}

/// Inverse image of a context along a pair of monotone maps into its orders.
inline EnrichedContext inverse_image_context(const MonotoneMap& f0, const MonotoneMap& f1,
                                             const EnrichedContext& ctx) {
  detail::require_same(f0.target().carrier(), ctx.source_order().carrier(),
                       "inverse_image_context");
  detail::require_same(f1.target().carrier(), ctx.target_order().carrier(),
                       "inverse_image_context");
  Relation fwd = compose(direct_graph(f0), compose(ctx.forward(), inverse_graph(f1)));
  Relation bwd = compose(direct_graph(f1), compose(ctx.backward(), inverse_graph(f0)));
  return EnrichedContext(f0.source(), f1.source(), fwd, bwd);
}

inline Carrier product_carrier(const Carrier& a, const Carrier& b) {
  std::vector<std::string> names;
  names.reserve(a.size() * b.size());
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) names.push_back("(" + x + "," + y + ")");
  return Carrier("(" + a.name() + "x" + b.name() + ")", std::move(names));
}

inline Relation product_relation(const Relation& a, const Relation& b) {
  Carrier src = product_carrier(a.source(), b.source());
  Carrier tgt = product_carrier(a.target(), b.target());
  std::size_t bn = b.source().size(), bm = b.target().size();
  std::vector<Bitset> rows(src.size(), Bitset(tgt.size()));
  for (std::size_t i = 0; i < a.source().size(); ++i)
    for (std::size_t k = 0; k < bn; ++k)
      a.row(i).for_each([&](std::size_t j) {
        b.row(k).for_each(
            [&](std::size_t l) { rows[i * bn + k].set(j * bm + l); });
      });
  return Relation(std::move(src), std::move(tgt), std::move(rows));
}

inline Preorder product_preorder(const Preorder& a, const Preorder& b) {
  return Preorder(product_relation(a.relation(), b.relation()));
}

inline EnrichedContext product_context(const EnrichedContext& a, const EnrichedContext& b) {
  return EnrichedContext(product_preorder(a.source_order(), b.source_order()),
                         product_preorder(a.target_order(), b.target_order()),
                         product_relation(a.forward(), b.forward()),
                         product_relation(a.backward(), b.backward()));
}

/// Componentwise meet of two contexts over the same carriers.
inline EnrichedContext meet_context(const EnrichedContext& a, const EnrichedContext& b) {
  return EnrichedContext(Preorder(meet(a.source_order().relation(), b.source_order().relation())),
                         Preorder(meet(a.target_order().relation(), b.target_order().relation())),
                         meet(a.forward(), b.forward()), meet(a.backward(), b.backward()));
}

// --- context maps -----------------------------------------------------------

/// The canonical decision form: nu01 <= f0> o mu01 o f1< and dually.
inline bool is_context_map(const MonotoneMap& f0, const MonotoneMap& f1,
                           const EnrichedContext& from, const EnrichedContext& to) {
  detail::require_same(f0.source().carrier(), from.source_order().carrier(),
                       "is_context_map");
  detail::require_same(f1.source().carrier(), from.target_order().carrier(),
                       "is_context_map");
  detail::require_same(f0.target().carrier(), to.source_order().carrier(),
                       "is_context_map");
  detail::require_same(f1.target().carrier(), to.target_order().carrier(),
                       "is_context_map");
  Relation fwd_bound = compose(direct_graph(f0), compose(to.forward(), inverse_graph(f1)));
  Relation bwd_bound = compose(direct_graph(f1), compose(to.backward(), inverse_graph(f0)));
  return leq(from.forward(), fwd_bound) && leq(from.backward(), bwd_bound);
}

/// Consequence of the map conditions, reported separately: has-relationships
/// are preserved elementwise.
inline bool context_map_preserves_has(const MonotoneMap& f0, const MonotoneMap& f1,
                                      const EnrichedContext& from,
                                      const EnrichedContext& to) {
  for (std::size_t y0 = 0; y0 < from.source_order().size(); ++y0)
    for (std::size_t y1 = 0; y1 < from.target_order().size(); ++y1) {
      if (from.forward().contains(y0, y1) &&
          !to.forward().contains(f0.apply(y0), f1.apply(y1)))
        return false;
      if (from.backward().contains(y1, y0) &&
          !to.backward().contains(f1.apply(y1), f0.apply(y0)))
        return false;
    }
  return true;
}

/// A validated map of formal contexts.
class ContextMap {
public:
  ContextMap(EnrichedContext from, EnrichedContext to, MonotoneMap f0, MonotoneMap f1)
      : from_(std::move(from)), to_(std::move(to)), f0_(std::move(f0)), f1_(std::move(f1)) {
    if (!is_context_map(f0_, f1_, from_, to_))
      throw ValidationError("the pair of monotone maps is not a map of formal contexts");
  }
  const EnrichedContext& from() const { return from_; }
  const EnrichedContext& to() const { return to_; }
  const MonotoneMap& f0() const { return f0_; }
  const MonotoneMap& f1() const { return f1_; }

private:
  EnrichedContext from_, to_;
  MonotoneMap f0_, f1_;
};

/// The unique map into the terminal context.
inline ContextMap terminal_map(const EnrichedContext& ctx) {
  const EnrichedContext& unit = terminal_context();
  return ContextMap(ctx, unit, MonotoneMap::constant(ctx.source_order(), unit.source_order(), 0),
                    MonotoneMap::constant(ctx.target_order(), unit.target_order(), 0));
}

// --- t-partition -------------------------------------------------------------

/// Split a preorder along a tag into the binary order: the four preimage
/// quadrants form a formal context.
inline EnrichedContext t_partition(const Preorder& order, const MonotoneMap& tag) {
  detail::require_same(tag.source().carrier(), order.carrier(), "t_partition");
  detail::require_same(tag.target().carrier(), binary_order().carrier(), "t_partition");

  std::vector<std::string> names0, names1;
  std::vector<std::size_t> idx0, idx1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (tag.apply(i) == 0) {
      idx0.push_back(i);
      names0.push_back(order.carrier().element(i));
    } else {
      idx1.push_back(i);
      names1.push_back(order.carrier().element(i));
    }
  }
  Carrier c0(order.carrier().name() + "_0", std::move(names0));
  Carrier c1(order.carrier().name() + "_1", std::move(names1));

  auto restrict_block = [&](const std::vector<std::size_t>& from,
                            const std::vector<std::size_t>& to, const Carrier& cf,
                            const Carrier& ct) {
    std::vector<Bitset> rows(from.size(), Bitset(to.size()));
    for (std::size_t i = 0; i < from.size(); ++i)
      for (std::size_t j = 0; j < to.size(); ++j)
        if (order.leq(from[i], to[j])) rows[i].set(j);
    return Relation(cf, ct, std::move(rows));
  };

  return EnrichedContext(Preorder(restrict_block(idx0, idx0, c0, c0)),
                         Preorder(restrict_block(idx1, idx1, c1, c1)),
                         restrict_block(idx0, idx1, c0, c1),
                         restrict_block(idx1, idx0, c1, c0));
}

}  // namespace conceptkit
