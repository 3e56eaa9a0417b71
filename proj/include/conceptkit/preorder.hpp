#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conceptkit/bitset.hpp"
#include "conceptkit/carrier.hpp"
#include "conceptkit/errors.hpp"
#include "conceptkit/relation.hpp"

namespace conceptkit {

struct PreorderReport {
  std::vector<std::string> missing_reflexive;  // element names
  std::vector<std::string> broken_transitive;  // rendered triples
  bool ok() const { return missing_reflexive.empty() && broken_transitive.empty(); }
};

/// Check reflexivity and transitivity of a square relation; empty report iff
/// the relation is a preorder.
inline PreorderReport validate_preorder(const Relation& leq_rel) {
  detail::require_same(leq_rel.source(), leq_rel.target(), "validate_preorder");
  PreorderReport report;
  const Carrier& c = leq_rel.source();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!leq_rel.contains(i, i)) report.missing_reflexive.push_back(c.element(i));
  for (std::size_t i = 0; i < c.size(); ++i)
    leq_rel.row(i).for_each([&](std::size_t j) {
      if (!leq_rel.row(j).is_subset_of(leq_rel.row(i)))
        leq_rel.row(j).for_each([&](std::size_t k) {
          if (!leq_rel.contains(i, k))
            report.broken_transitive.push_back(c.element(i) + " <= " + c.element(j) +
                                               " <= " + c.element(k) +
                                               " but not " + c.element(i) +
                                               " <= " + c.element(k));
        });
    });
  return report;
}

/// A finite preorder: a carrier plus a reflexive-transitive relation on it.
/// Genuine preorders, not posets: distinct equivalent elements are allowed.
class Preorder {
public:
  Preorder() = default;

  explicit Preorder(Relation leq_rel) : leq_(std::move(leq_rel)) {
    auto report = validate_preorder(leq_);
    if (!report.ok()) {
      std::string what = "not a preorder on carrier '" + leq_.source().name() + "':";
      for (const auto& e : report.missing_reflexive) what += " missing " + e + "<=" + e + ";";
      for (const auto& t : report.broken_transitive) what += " " + t + ";";
      throw ValidationError(what);
    }
  }

  static Preorder discrete(const Carrier& c) { return Preorder(Relation::identity(c)); }

  static Preorder full(const Carrier& c) { return Preorder(Relation::top(c, c)); }

  /// Chain in carrier element order: element i <= element j iff i <= j.
  static Preorder chain(const Carrier& c) {
    std::vector<Bitset> rows(c.size(), Bitset(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i; j < c.size(); ++j) rows[i].set(j);
    return Preorder(Relation(c, c, std::move(rows)));
  }

  /// Reflexive-transitive closure of generating pairs.
  static Preorder from_pairs(
      const Carrier& c, const std::vector<std::pair<std::string, std::string>>& pairs) {
    return Preorder(reflexive_transitive_closure(Relation::from_pairs(c, c, pairs)));
  }

  const Carrier& carrier() const { return leq_.source(); }
  const Relation& relation() const { return leq_; }
  std::size_t size() const { return carrier().size(); }

  bool leq(std::size_t i, std::size_t j) const { return leq_.contains(i, j); }
  bool leq(std::string_view a, std::string_view b) const { return leq_.contains(a, b); }

  /// Principal up-set of element i (its row).
  const Bitset& up_set(std::size_t i) const { return leq_.row(i); }

  /// Principal down-set of element i (its column).
  Bitset down_set(std::size_t i) const { return leq_.column(i); }

  Preorder opposite() const { return Preorder(conceptkit::opposite(leq_)); }

  bool antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (leq(i, j) && leq(j, i)) return false;
    return true;
  }

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.leq_ == b.leq_;
  }

private:
  Relation leq_;
};

namespace detail {

inline void require_subset_fits(const Bitset& s, const Carrier& c, const char* where) {
  if (s.size() != c.size())
    throw CarrierMismatchError(std::string(where) + ": subset width " +
                               std::to_string(s.size()) + " does not fit carrier '" +
                               c.name() + "'");
}

}  // namespace detail

inline bool is_down_closed(const Bitset& s, const Preorder& p) {
  detail::require_subset_fits(s, p.carrier(), "is_down_closed");
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!p.down_set(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

inline bool is_up_closed(const Bitset& s, const Preorder& p) {
  detail::require_subset_fits(s, p.carrier(), "is_up_closed");
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!p.up_set(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

/// A down-closed subset of a preorder, validated at construction.
class Ideal {
public:
  Ideal(Preorder order, Bitset members)
      : order_(std::move(order)), members_(std::move(members)) {
    if (!is_down_closed(members_, order_))
      throw ValidationError("subset is not down-closed in '" +
                            order_.carrier().name() + "'");
  }
  const Preorder& order() const { return order_; }
  const Bitset& members() const { return members_; }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.order_ == b.order_ && a.members_ == b.members_;
  }

private:
  Preorder order_;
  Bitset members_;
};

/// An up-closed subset of a preorder, validated at construction.
class Filter {
public:
  Filter(Preorder order, Bitset members)
      : order_(std::move(order)), members_(std::move(members)) {
    if (!is_up_closed(members_, order_))
      throw ValidationError("subset is not up-closed in '" +
                            order_.carrier().name() + "'");
  }
  const Preorder& order() const { return order_; }
  const Bitset& members() const { return members_; }
  friend bool operator==(const Filter& a, const Filter& b) {
    return a.order_ == b.order_ && a.members_ == b.members_;
  }

private:
  Preorder order_;
  Bitset members_;
};

/// Upper bounds of a subset: the intersection of the up-sets of its members.
/// upper({}) is the whole carrier. Invariant under down-closure of the input.
inline Bitset upper_bounds_set(const Bitset& s, const Preorder& p) {
  detail::require_subset_fits(s, p.carrier(), "upper_bounds");
  Bitset out = Bitset::full(p.size());
  s.for_each([&](std::size_t x) { out &= p.up_set(x); });
  return out;
}

inline Bitset lower_bounds_set(const Bitset& s, const Preorder& p) {
  detail::require_subset_fits(s, p.carrier(), "lower_bounds");
  Bitset out = Bitset::full(p.size());
  s.for_each([&](std::size_t x) { out &= p.down_set(x); });
  return out;
}

inline Filter upper_bounds(const Bitset& s, const Preorder& p) {
  return Filter(p, upper_bounds_set(s, p));
}

inline Ideal lower_bounds(const Bitset& s, const Preorder& p) {
  return Ideal(p, lower_bounds_set(s, p));
}

enum class Direction { down, up };

/// Smallest down-/up-closed superset: the union of principal down-/up-sets.
inline Bitset order_closure_set(Direction dir, const Bitset& s, const Preorder& p) {
  detail::require_subset_fits(s, p.carrier(), "order_closure");
  Bitset out(p.size());
  s.for_each([&](std::size_t x) {
    out |= (dir == Direction::down) ? p.down_set(x) : p.up_set(x);
  });
  return out;
}

inline Ideal order_closure_down(const Bitset& s, const Preorder& p) {
  return Ideal(p, order_closure_set(Direction::down, s, p));
}

inline Filter order_closure_up(const Bitset& s, const Preorder& p) {
  return Filter(p, order_closure_set(Direction::up, s, p));
}

inline Ideal principal_ideal(std::size_t x, const Preorder& p) {
  return Ideal(p, p.down_set(x));
}

inline Filter principal_filter(std::size_t x, const Preorder& p) {
  return Filter(p, p.up_set(x));
}

inline constexpr std::size_t kDefaultOracleBound = 20;

/// All down-closed subsets, brute force. Deterministic order: ascending size,
/// ties by lexicographic membership vector. Oracle for completion and
/// enumeration tests; refuses carriers beyond the bound.
inline std::vector<Bitset> enumerate_ideal_sets(const Preorder& p,
                                                std::size_t bound = kDefaultOracleBound) {
  std::size_t n = p.size();
  if (n > bound)
    throw CapacityError("ideal enumeration over carrier '" + p.carrier().name() +
                        "' of size " + std::to_string(n) + " exceeds oracle bound " +
                        std::to_string(bound));
  std::vector<Bitset> downs(n);
  for (std::size_t i = 0; i < n; ++i) downs[i] = p.down_set(i);
  std::vector<Bitset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bitset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(i);
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if (s.test(i) && !downs[i].is_subset_of(s)) closed = false;
    if (closed) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return lex_less(a, b);
  });
  return out;
}

inline std::vector<Bitset> enumerate_filter_sets(const Preorder& p,
                                                 std::size_t bound = kDefaultOracleBound) {
  auto ideals = enumerate_ideal_sets(p.opposite(), bound);
  return ideals;
}

inline std::vector<Ideal> enumerate_ideals(const Preorder& p,
                                           std::size_t bound = kDefaultOracleBound) {
  std::vector<Ideal> out;
  for (auto& s : enumerate_ideal_sets(p, bound)) out.emplace_back(p, std::move(s));
  return out;
}

inline std::vector<Filter> enumerate_filters(const Preorder& p,
                                             std::size_t bound = kDefaultOracleBound) {
  std::vector<Filter> out;
  for (auto& s : enumerate_filter_sets(p, bound)) out.emplace_back(p, std::move(s));
  return out;
}

// --- distinguished small orders -------------------------------------------

/// The one-element order, target of ideals-as-relations.
inline const Preorder& unit_order() {
  static const Preorder p = Preorder::discrete(Carrier("1", {"*"}));
  return p;
}

/// The binary order on {0,1} where 0 and 1 are equivalent both ways.
inline const Preorder& binary_order() {
  static const Preorder p = Preorder::full(Carrier("2bar", {"0", "1"}));
  return p;
}

/// The Boolean order on {0,1} with 0 <= 1.
inline const Preorder& boolean_order() {
  static const Preorder p = Preorder::chain(Carrier("2", {"0", "1"}));
  return p;
}

/// An order ideal viewed as a relation into the unit order.
inline Relation subset_as_ideal_relation(const Bitset& s, const Carrier& c) {
  detail::require_subset_fits(s, c, "subset_as_ideal_relation");
  std::vector<Bitset> rows(c.size(), Bitset(1));
  s.for_each([&](std::size_t i) { rows[i].set(0); });
  return Relation(c, unit_order().carrier(), std::move(rows));
}

/// An order filter viewed as a relation out of the unit order.
inline Relation subset_as_filter_relation(const Bitset& s, const Carrier& c) {
  detail::require_subset_fits(s, c, "subset_as_filter_relation");
  std::vector<Bitset> rows(1, s);
  return Relation(unit_order().carrier(), c, std::move(rows));
}

inline Bitset ideal_relation_as_subset(const Relation& r) {
  return r.column(0);
}

inline Bitset filter_relation_as_subset(const Relation& r) {
  return r.row(0);
}

}  // namespace conceptkit
