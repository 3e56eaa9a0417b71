#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conceptkit/errors.hpp"
#include "conceptkit/preorder.hpp"
#include "conceptkit/relation.hpp"

namespace conceptkit {

/// A monotone total function between preorders; monotonicity is checked at
/// construction.
class MonotoneMap {
public:
  MonotoneMap(Preorder source, Preorder target, std::vector<std::size_t> assignment)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(assignment)) {
    if (map_.size() != source_.size())
      throw ValidationError("map assignment size does not match carrier '" +
                            source_.carrier().name() + "'");
    for (std::size_t v : map_)
      if (v >= target_.size())
        throw ValidationError("map assignment image out of range in carrier '" +
                              target_.carrier().name() + "'");
    for (std::size_t i = 0; i < source_.size(); ++i)
      source_.up_set(i).for_each([&](std::size_t j) {
        if (!target_.leq(map_[i], map_[j]))
          throw ValidationError(
              "map is not monotone: " + source_.carrier().element(i) +
              " <= " + source_.carrier().element(j) + " but " +
              target_.carrier().element(map_[i]) + " </= " +
              target_.carrier().element(map_[j]));
      });
  }

  static MonotoneMap from_names(Preorder source, Preorder target,
                                const std::map<std::string, std::string>& assignment) {
    std::vector<std::size_t> idx(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
      auto it = assignment.find(source.carrier().element(i));
      if (it == assignment.end())
        throw UnknownElementError("map assignment missing element '" +
                                  source.carrier().element(i) + "'");
      idx[i] = target.carrier().index_of(it->second);
    }
    return MonotoneMap(std::move(source), std::move(target), std::move(idx));
  }

  static MonotoneMap identity(const Preorder& p) {
    std::vector<std::size_t> idx(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) idx[i] = i;
    return MonotoneMap(p, p, std::move(idx));
  }

  static MonotoneMap constant(const Preorder& source, const Preorder& target,
                              std::size_t value) {
    return MonotoneMap(source, target, std::vector<std::size_t>(source.size(), value));
  }

  const Preorder& source() const { return source_; }
  const Preorder& target() const { return target_; }
  std::size_t apply(std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& assignment() const { return map_; }

  /// Composite this then g, in diagrammatic order.
  MonotoneMap then(const MonotoneMap& g) const {
    detail::require_same(target_.carrier(), g.source_.carrier(), "MonotoneMap::then");
    std::vector<std::size_t> idx(source_.size());
    for (std::size_t i = 0; i < source_.size(); ++i) idx[i] = g.map_[map_[i]];
    return MonotoneMap(source_, g.target_, std::move(idx));
  }

  bool surjective() const {
    Bitset hit(target_.size());
    for (std::size_t v : map_) hit.set(v);
    return hit.count() == target_.size();
  }

  /// Image of a subset of the source carrier.
  Bitset image(const Bitset& s) const {
    detail::require_subset_fits(s, source_.carrier(), "MonotoneMap::image");
    Bitset out(target_.size());
    s.for_each([&](std::size_t i) { out.set(map_[i]); });
    return out;
  }

  /// Preimage of a subset of the target carrier.
  Bitset preimage(const Bitset& s) const {
    detail::require_subset_fits(s, target_.carrier(), "MonotoneMap::preimage");
    Bitset out(source_.size());
    for (std::size_t i = 0; i < source_.size(); ++i)
      if (s.test(map_[i])) out.set(i);
    return out;
  }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

private:
  Preorder source_;
  Preorder target_;
  std::vector<std::size_t> map_;
};

/// Direct graph of f : Y -> X, the relation {(y,x) | f(y) <= x}.
inline Relation direct_graph(const MonotoneMap& f) {
  std::vector<Bitset> rows(f.source().size());
  for (std::size_t y = 0; y < f.source().size(); ++y)
    rows[y] = f.target().up_set(f.apply(y));
  return Relation(f.source().carrier(), f.target().carrier(), std::move(rows));
}

/// Inverse graph of f : Y -> X, the relation {(x,y) | x <= f(y)}.
inline Relation inverse_graph(const MonotoneMap& f) {
  std::vector<Bitset> rows(f.target().size(), Bitset(f.source().size()));
  for (std::size_t y = 0; y < f.source().size(); ++y)
    f.target().down_set(f.apply(y)).for_each([&](std::size_t x) { rows[x].set(y); });
  return Relation(f.target().carrier(), f.source().carrier(), std::move(rows));
}

struct Graphs {
  Relation direct;
  Relation inverse;
};

/// The adjoint pair of graph relations of a monotone map.
inline Graphs graphs(const MonotoneMap& f) {
  return Graphs{direct_graph(f), inverse_graph(f)};
}

}  // namespace conceptkit
