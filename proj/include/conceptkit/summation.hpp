#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conceptkit/enriched.hpp"
#include "conceptkit/monotone_map.hpp"
#include "conceptkit/preorder.hpp"
#include "conceptkit/relation.hpp"

namespace conceptkit {

/// A context centralized as a single tagged preorder on the disjoint union of
/// its carriers, together with the two injections. Sum carrier element names
/// are prefixed with their tag ("0:Me", "1:my") so entity/attribute name
/// collisions cannot break disjointness; the injections retain the original
/// carriers, so fibration recovers them exactly.
class SumOrder {
public:
  SumOrder(Preorder order, std::vector<unsigned char> tags, MonotoneMap i0, MonotoneMap i1)
      : order_(std::move(order)),
        tags_(std::move(tags)),
        i0_(std::move(i0)),
        i1_(std::move(i1)) {
    if (tags_.size() != order_.size())
      throw ValidationError("sum order tag vector does not match the carrier");
  }

  /// View a raw tagged preorder as a sum order; fibers keep their element
  /// names and become the injected carriers.
  static SumOrder from_tagged(const Preorder& order, const MonotoneMap& tag) {
    detail::require_same(tag.source().carrier(), order.carrier(), "SumOrder::from_tagged");
    detail::require_same(tag.target().carrier(), binary_order().carrier(),
                         "SumOrder::from_tagged");
    EnrichedContext ctx = t_partition(order, tag);
    std::vector<unsigned char> tags(order.size());
    std::vector<std::size_t> into0, into1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      tags[i] = static_cast<unsigned char>(tag.apply(i));
      (tags[i] == 0 ? into0 : into1).push_back(i);
    }
    return SumOrder(order, std::move(tags),
                    MonotoneMap(ctx.source_order(), order, std::move(into0)),
                    MonotoneMap(ctx.target_order(), order, std::move(into1)));
  }

  const Preorder& order() const { return order_; }
  unsigned char tag(std::size_t i) const { return tags_[i]; }
  const std::vector<unsigned char>& tags() const { return tags_; }
  const MonotoneMap& injection0() const { return i0_; }
  const MonotoneMap& injection1() const { return i1_; }

  /// The tag as a monotone function into the binary order.
  MonotoneMap tag_map() const {
    std::vector<std::size_t> idx(tags_.begin(), tags_.end());
    return MonotoneMap(order_, binary_order(), std::move(idx));
  }

  friend bool operator==(const SumOrder& a, const SumOrder& b) {
    return a.order_ == b.order_ && a.tags_ == b.tags_ && a.i0_ == b.i0_ && a.i1_ == b.i1_;
  }

private:
  Preorder order_;
  std::vector<unsigned char> tags_;
  MonotoneMap i0_, i1_;
};

/// Centralize a context as its sum order. Transitivity of the assembled
/// matrix follows from closedness plus orthogonality and is asserted, never
/// repaired: a non-transitive result means the input was not a valid context.
inline SumOrder sum(const EnrichedContext& ctx) {
  const Carrier& c0 = ctx.source_order().carrier();
  const Carrier& c1 = ctx.target_order().carrier();
  const std::size_t n0 = c0.size(), n1 = c1.size();

  std::vector<std::string> names;
  names.reserve(n0 + n1);
  for (const auto& e : c0.elements()) names.push_back("0:" + e);
  for (const auto& a : c1.elements()) names.push_back("1:" + a);
  Carrier carrier("sum(" + c0.name() + "+" + c1.name() + ")", std::move(names));

  std::vector<Bitset> rows(n0 + n1, Bitset(n0 + n1));
  auto blit = [&](const Relation& block, std::size_t row_off, std::size_t col_off) {
    for (std::size_t i = 0; i < block.source().size(); ++i)
      block.row(i).for_each([&](std::size_t j) { rows[row_off + i].set(col_off + j); });
  };
  blit(ctx.source_order().relation(), 0, 0);
  blit(ctx.forward(), 0, n0);
  blit(ctx.backward(), n0, 0);
  blit(ctx.target_order().relation(), n0, n0);

  Preorder order{Relation(carrier, carrier, std::move(rows))};

  std::vector<unsigned char> tags(n0 + n1, 0);
  for (std::size_t i = 0; i < n1; ++i) tags[n0 + i] = 1;
  std::vector<std::size_t> into0(n0), into1(n1);
  for (std::size_t i = 0; i < n0; ++i) into0[i] = i;
  for (std::size_t i = 0; i < n1; ++i) into1[i] = n0 + i;
  MonotoneMap i0(ctx.source_order(), order, std::move(into0));
  MonotoneMap i1(ctx.target_order(), order, std::move(into1));
  return SumOrder(std::move(order), std::move(tags), std::move(i0), std::move(i1));
}

/// Recover the four quadrants of a sum order through its injections.
/// Total inverse to sum: fibrate(sum(ctx)) == ctx.
inline EnrichedContext fibrate(const SumOrder& s) {
  const MonotoneMap& i0 = s.injection0();
  const MonotoneMap& i1 = s.injection1();
  auto block = [&](const MonotoneMap& from, const MonotoneMap& to) {
    std::vector<Bitset> rows(from.source().size(), Bitset(to.source().size()));
    for (std::size_t i = 0; i < from.source().size(); ++i)
      for (std::size_t j = 0; j < to.source().size(); ++j)
        if (s.order().leq(from.apply(i), to.apply(j))) rows[i].set(j);
    return Relation(from.source().carrier(), to.source().carrier(), std::move(rows));
  };
  return EnrichedContext(i0.source(), i1.source(), block(i0, i1), block(i1, i0));
}

namespace detail {

inline void require_copair_constraints(const Relation& rho0, const Relation& rho1,
                                       const EnrichedContext& ctx) {
  if (!leq(compose(ctx.forward(), rho1), rho0))
    throw ConstraintError("external source constraint fails: mu01 o rho1 <= rho0");
  if (!leq(compose(ctx.backward(), rho0), rho1))
    throw ConstraintError("external source constraint fails: mu10 o rho0 <= rho1");
}

inline void require_pair_constraints(const Relation& sigma0, const Relation& sigma1,
                                     const EnrichedContext& ctx) {
  if (!leq(compose(sigma0, ctx.forward()), sigma1))
    throw ConstraintError("external target constraint fails: sigma0 o mu01 <= sigma1");
  if (!leq(compose(sigma1, ctx.backward()), sigma0))
    throw ConstraintError("external target constraint fails: sigma1 o mu10 <= sigma0");
}

}  // namespace detail

/// The unique mediating relation from the sum: the join of the two component
/// relations pulled back along the injection inverse graphs. Requires the
/// external source constraints and satisfies i_k> o [rho0,rho1] = rho_k.
inline Relation relative_copair(const Relation& rho0, const Relation& rho1,
                                const SumOrder& s) {
  detail::require_same(rho0.source(), s.injection0().source().carrier(), "relative_copair");
  detail::require_same(rho1.source(), s.injection1().source().carrier(), "relative_copair");
  detail::require_same(rho0.target(), rho1.target(), "relative_copair");
  detail::require_copair_constraints(rho0, rho1, fibrate(s));
  return join(compose(inverse_graph(s.injection0()), rho0),
              compose(inverse_graph(s.injection1()), rho1));
}

/// Dually, the mediating relation into the sum: requires the external target
/// constraints and satisfies (sigma0,sigma1) o i_k< = sigma_k.
inline Relation relative_pair(const Relation& sigma0, const Relation& sigma1,
                              const SumOrder& s) {
  detail::require_same(sigma0.target(), s.injection0().source().carrier(), "relative_pair");
  detail::require_same(sigma1.target(), s.injection1().source().carrier(), "relative_pair");
  detail::require_same(sigma0.source(), sigma1.source(), "relative_pair");
  detail::require_pair_constraints(sigma0, sigma1, fibrate(s));
  return join(compose(sigma0, direct_graph(s.injection0())),
              compose(sigma1, direct_graph(s.injection1())));
}

/// Copairings of ideal pairs, with the unit order as the common target.
inline Bitset relative_copair_of_ideals(const Bitset& phi0, const Bitset& phi1,
                                        const SumOrder& s) {
  Relation r = relative_copair(
      subset_as_ideal_relation(phi0, s.injection0().source().carrier()),
      subset_as_ideal_relation(phi1, s.injection1().source().carrier()), s);
  return ideal_relation_as_subset(r);
}

/// Pairings of filter pairs, with the unit order as the common source.
inline Bitset relative_pair_of_filters(const Bitset& psi0, const Bitset& psi1,
                                       const SumOrder& s) {
  Relation r = relative_pair(
      subset_as_filter_relation(psi0, s.injection0().source().carrier()),
      subset_as_filter_relation(psi1, s.injection1().source().carrier()), s);
  return filter_relation_as_subset(r);
}

struct SumEquationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Evaluate the four suborder disjointness equations and the covering
/// equation on a raw tagged square matrix. Diagnostic form: the matrix need
/// not be a preorder, so post-hoc damage is detectable.
inline SumEquationReport verify_sum_equations(const Relation& order,
                                              const std::vector<unsigned char>& tags) {
  detail::require_same(order.source(), order.target(), "verify_sum_equations");
  const std::size_t n = order.source().size();
  if (tags.size() != n)
    throw ValidationError("tag vector does not match the order carrier");

  std::vector<std::size_t> side[2];
  for (std::size_t i = 0; i < n; ++i) side[tags[i] ? 1 : 0].push_back(i);
  std::vector<std::string> part_names = {"part0", "part1"};
  Carrier parts[2];
  for (int t = 0; t < 2; ++t) {
    std::vector<std::string> names;
    for (std::size_t i : side[t]) names.push_back(order.source().element(i));
    parts[t] = Carrier(part_names[t], std::move(names));
  }

  auto direct = [&](int t) {  // {(x, z) | i_t(x) <= z}
    std::vector<Bitset> rows;
    for (std::size_t i : side[t]) rows.push_back(order.row(i));
    return Relation(parts[t], order.source(), std::move(rows));
  };
  auto inverse = [&](int t) {  // {(z, x) | z <= i_t(x)}
    std::vector<Bitset> rows(n, Bitset(side[t].size()));
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t k = 0; k < side[t].size(); ++k)
        if (order.contains(z, side[t][k])) rows[z].set(k);
    return Relation(order.source(), parts[t], std::move(rows));
  };
  auto quadrant = [&](int a, int b) {  // read-off block
    std::vector<Bitset> rows(side[a].size(), Bitset(side[b].size()));
    for (std::size_t i = 0; i < side[a].size(); ++i)
      for (std::size_t j = 0; j < side[b].size(); ++j)
        if (order.contains(side[a][i], side[b][j])) rows[i].set(j);
    return Relation(parts[a], parts[b], std::move(rows));
  };

  Relation d0 = direct(0), v0 = inverse(0), d1 = direct(1), v1 = inverse(1);
  SumEquationReport report;
  if (!(compose(d0, v0) == quadrant(0, 0)))
    report.failures.push_back("i0> o i0< != X0");
  if (!(compose(d0, v1) == quadrant(0, 1)))
    report.failures.push_back("i0> o i1< != mu01");
  if (!(compose(d1, v0) == quadrant(1, 0)))
    report.failures.push_back("i1> o i0< != mu10");
  if (!(compose(d1, v1) == quadrant(1, 1)))
    report.failures.push_back("i1> o i1< != X1");
  if (!(join(compose(v0, d0), compose(v1, d1)) == order))
    report.failures.push_back("(i0< o i0>) v (i1< o i1>) != sum order");
  return report;
}

/// Evaluate the displayed equations of a sum order through its injections.
inline SumEquationReport verify_sum_equations(const SumOrder& s) {
  return verify_sum_equations(s.order().relation(), s.tags());
}

}  // namespace conceptkit
