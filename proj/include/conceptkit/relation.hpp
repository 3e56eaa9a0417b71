#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "conceptkit/bitset.hpp"
#include "conceptkit/carrier.hpp"
#include "conceptkit/errors.hpp"

namespace conceptkit {

/// A finite binary relation between two named carriers, held as a dense
/// row-major bit matrix. Immutable value: every operation returns a fresh
/// relation, and copies share the matrix.
class Relation {
public:
  Relation() = default;

  Relation(Carrier source, Carrier target, std::vector<Bitset> rows)
      : source_(std::move(source)), target_(std::move(target)) {
    if (rows.size() != source_.size())
      throw ValidationError("relation row count " + std::to_string(rows.size()) +
                            " does not match carrier '" + source_.name() + "' size " +
                            std::to_string(source_.size()));
    for (const auto& r : rows)
      if (r.size() != target_.size())
        throw ValidationError("relation row width does not match carrier '" +
                              target_.name() + "' size " +
                              std::to_string(target_.size()));
    rows_ = std::make_shared<const std::vector<Bitset>>(std::move(rows));
  }

  static Relation bottom(Carrier source, Carrier target) {
    std::vector<Bitset> rows(source.size(), Bitset(target.size()));
    return Relation(std::move(source), std::move(target), std::move(rows));
  }

  static Relation top(Carrier source, Carrier target) {
    std::vector<Bitset> rows(source.size(), Bitset::full(target.size()));
    return Relation(std::move(source), std::move(target), std::move(rows));
  }

  /// The diagonal relation on a carrier (equality, i.e. the discrete order).
  static Relation identity(const Carrier& carrier) {
    std::vector<Bitset> rows(carrier.size(), Bitset(carrier.size()));
    for (std::size_t i = 0; i < carrier.size(); ++i) rows[i].set(i);
    return Relation(carrier, carrier, std::move(rows));
  }

  static Relation from_pairs(
      Carrier source, Carrier target,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<Bitset> rows(source.size(), Bitset(target.size()));
    for (const auto& [s, t] : pairs) rows[source.index_of(s)].set(target.index_of(t));
    return Relation(std::move(source), std::move(target), std::move(rows));
  }

  const Carrier& source() const { return source_; }
  const Carrier& target() const { return target_; }

  bool contains(std::size_t i, std::size_t j) const { return row(i).test(j); }
  bool contains(std::string_view s, std::string_view t) const {
    return contains(source_.index_of(s), target_.index_of(t));
  }

  const Bitset& row(std::size_t i) const { return (*rows_)[i]; }

  Bitset column(std::size_t j) const {
    Bitset col(source_.size());
    for (std::size_t i = 0; i < source_.size(); ++i)
      if (row(i).test(j)) col.set(i);
    return col;
  }

  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const auto& r : *rows_) c += r.count();
    return c;
  }

  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < source_.size(); ++i)
      row(i).for_each([&](std::size_t j) {
        out.emplace_back(source_.element(i), target_.element(j));
      });
    return out;
  }

  /// Replace one matrix entry; used by sabotage-style tests and builders.
  Relation with(std::size_t i, std::size_t j, bool value) const {
    auto rows = *rows_;
    rows[i].set(j, value);
    return Relation(source_, target_, std::move(rows));
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
    return a.rows_ == b.rows_ || *a.rows_ == *b.rows_;
  }

private:
  Carrier source_;
  Carrier target_;
  std::shared_ptr<const std::vector<Bitset>> rows_;
};

namespace detail {

inline void require_same(const Carrier& a, const Carrier& b, const char* where) {
  if (!(a == b))
    throw CarrierMismatchError(std::string(where) + ": carrier '" + a.name() +
                               "' does not match carrier '" + b.name() + "'");
}

}  // namespace detail

/// Ordinary relational composition: (x,z) present iff some y has x a y and y b z.
inline Relation compose(const Relation& a, const Relation& b) {
  detail::require_same(a.target(), b.source(), "compose");
  std::vector<Bitset> rows(a.source().size(), Bitset(b.target().size()));
  for (std::size_t i = 0; i < a.source().size(); ++i)
    a.row(i).for_each([&](std::size_t y) { rows[i] |= b.row(y); });
  return Relation(a.source(), b.target(), std::move(rows));
}

/// Source residuation beta => alpha over a shared source carrier X:
/// the (z,y) entry holds iff every x with x beta z also has x alpha y.
/// This is the largest g with compose(beta, g) <= alpha.
inline Relation residuate_source(const Relation& beta, const Relation& alpha) {
  detail::require_same(beta.source(), alpha.source(), "residuate_source");
  std::vector<Bitset> rows(beta.target().size(), Bitset::full(alpha.target().size()));
  for (std::size_t x = 0; x < beta.source().size(); ++x)
    beta.row(x).for_each([&](std::size_t z) { rows[z] &= alpha.row(x); });
  return Relation(beta.target(), alpha.target(), std::move(rows));
}

/// Target residuation alpha <= gamma over a shared target carrier Y:
/// the (x,z) entry holds iff every y with z gamma y also has x alpha y,
/// i.e. row z of gamma is contained in row x of alpha.
/// This is the largest b with compose(b, gamma) <= alpha.
inline Relation residuate_target(const Relation& alpha, const Relation& gamma) {
  detail::require_same(alpha.target(), gamma.target(), "residuate_target");
  std::vector<Bitset> rows(alpha.source().size(), Bitset(gamma.source().size()));
  for (std::size_t x = 0; x < alpha.source().size(); ++x)
    for (std::size_t z = 0; z < gamma.source().size(); ++z)
      if (gamma.row(z).is_subset_of(alpha.row(x))) rows[x].set(z);
  return Relation(alpha.source(), gamma.source(), std::move(rows));
}

inline Relation meet(const Relation& a, const Relation& b) {
  detail::require_same(a.source(), b.source(), "meet");
  detail::require_same(a.target(), b.target(), "meet");
  std::vector<Bitset> rows(a.source().size(), Bitset(a.target().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = a.row(i) & b.row(i);
  return Relation(a.source(), a.target(), std::move(rows));
}

inline Relation join(const Relation& a, const Relation& b) {
  detail::require_same(a.source(), b.source(), "join");
  detail::require_same(a.target(), b.target(), "join");
  std::vector<Bitset> rows(a.source().size(), Bitset(a.target().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = a.row(i) | b.row(i);
  return Relation(a.source(), a.target(), std::move(rows));
}

/// Homset order: subset containment of pair sets. Comparing relations over
/// different carriers is a type error, not false.
inline bool leq(const Relation& a, const Relation& b) {
  detail::require_same(a.source(), b.source(), "leq");
  detail::require_same(a.target(), b.target(), "leq");
  for (std::size_t i = 0; i < a.source().size(); ++i)
    if (!a.row(i).is_subset_of(b.row(i))) return false;
  return true;
}

/// Complement within the carrier rectangle.
inline Relation complement(const Relation& a) {
  std::vector<Bitset> rows(a.source().size());
  for (std::size_t i = 0; i < a.source().size(); ++i) rows[i] = a.row(i).complemented();
  return Relation(a.source(), a.target(), std::move(rows));
}

/// Transpose. An involution that reverses composition.
inline Relation opposite(const Relation& a) {
  std::vector<Bitset> rows(a.target().size(), Bitset(a.source().size()));
  for (std::size_t i = 0; i < a.source().size(); ++i)
    a.row(i).for_each([&](std::size_t j) { rows[j].set(i); });
  return Relation(a.target(), a.source(), std::move(rows));
}

/// Smallest reflexive and transitive relation containing a square relation.
/// Plumbing for building preorders from generating pairs.
inline Relation reflexive_transitive_closure(const Relation& r) {
  detail::require_same(r.source(), r.target(), "reflexive_transitive_closure");
  std::size_t n = r.source().size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = r.row(i);
    rows[i].set(i);
  }
  // Floyd-Warshall over booleans.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  return Relation(r.source(), r.target(), std::move(rows));
}

}  // namespace conceptkit
