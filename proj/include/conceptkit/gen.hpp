#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conceptkit/enriched.hpp"
#include "conceptkit/monotone_map.hpp"
#include "conceptkit/preorder.hpp"
#include "conceptkit/relation.hpp"

namespace conceptkit {

/// Seeded source of randomness for the law suites and property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }

  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

  double density() {
    return std::uniform_real_distribution<double>(0.15, 0.85)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

inline Carrier random_carrier(Rng&, std::size_t n, const std::string& prefix) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = prefix + std::to_string(i);
  return Carrier(prefix, std::move(names));
}

inline Bitset random_subset(Rng& rng, std::size_t n, double density = 0.5) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.chance(density)) b.set(i);
  return b;
}

inline Relation random_relation(Rng& rng, const Carrier& s, const Carrier& t,
                                double density = 0.5) {
  std::vector<Bitset> rows(s.size());
  for (auto& r : rows) r = random_subset(rng, t.size(), density);
  return Relation(s, t, std::move(rows));
}

inline Preorder random_preorder(Rng& rng, const Carrier& c, double density = 0.3) {
  return Preorder(reflexive_transitive_closure(random_relation(rng, c, c, density)));
}

/// Random relation closed w.r.t. the given orders (closure of a random seed).
inline Relation random_closed_relation(Rng& rng, const Preorder& s, const Preorder& t,
                                       double density = 0.4) {
  return close_relation(random_relation(rng, s.carrier(), t.carrier(), density), s, t);
}

inline Bitset random_ideal_set(Rng& rng, const Preorder& p, double density = 0.4) {
  return order_closure_set(Direction::down, random_subset(rng, p.size(), density), p);
}

inline Bitset random_filter_set(Rng& rng, const Preorder& p, double density = 0.4) {
  return order_closure_set(Direction::up, random_subset(rng, p.size(), density), p);
}

/// Rejection-sampled monotone map; falls back to a constant map.
inline MonotoneMap random_monotone_map(Rng& rng, const Preorder& from, const Preorder& to,
                                       int tries = 64) {
  for (int t = 0; t < tries; ++t) {
    std::vector<std::size_t> idx(from.size());
    for (auto& v : idx) v = rng.below(to.size());
    bool mono = true;
    for (std::size_t i = 0; i < from.size() && mono; ++i)
      from.up_set(i).for_each([&](std::size_t j) {
        if (!to.leq(idx[i], idx[j])) mono = false;
      });
    if (mono) return MonotoneMap(from, to, std::move(idx));
  }
  return MonotoneMap::constant(from, to, rng.below(to.size()));
}

/// A surjective monotone map built by construction: partition the source into
/// k nonempty blocks and order the blocks by the closure of the induced
/// relation. Returns the map; its target order is the quotient-style order.
inline MonotoneMap random_quotient_map(Rng& rng, const Preorder& from, std::size_t k,
                                       const std::string& prefix) {
  std::size_t n = from.size();
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = i < k ? i : rng.below(k);
  std::shuffle(block.begin(), block.end(), rng.engine());

  Carrier qc = random_carrier(rng, k, prefix);
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i) rows[i].set(i);
  for (std::size_t i = 0; i < n; ++i)
    from.up_set(i).for_each([&](std::size_t j) { rows[block[i]].set(block[j]); });
  Preorder to{reflexive_transitive_closure(Relation(qc, qc, std::move(rows)))};
  return MonotoneMap(from, to, std::move(block));
}

/// A suborder inclusion: the restriction of a preorder to a random subset,
/// included back into it. Inclusions are order-reflecting, which inverse
/// images of contexts require for orthogonality to survive.
inline MonotoneMap random_subinclusion(Rng& rng, const Preorder& big,
                                       const std::string& prefix, double density = 0.6) {
  Bitset pick = random_subset(rng, big.size(), density);
  std::vector<std::string> names;
  std::vector<std::size_t> into;
  pick.for_each([&](std::size_t i) {
    names.push_back(big.carrier().element(i));
    into.push_back(i);
  });
  Carrier sub(prefix, std::move(names));
  std::vector<Bitset> rows(into.size(), Bitset(into.size()));
  for (std::size_t i = 0; i < into.size(); ++i)
    for (std::size_t j = 0; j < into.size(); ++j)
      if (big.leq(into[i], into[j])) rows[i].set(j);
  return MonotoneMap(Preorder(Relation(sub, sub, std::move(rows))), big, std::move(into));
}

/// Every valid context arises as the t-partition of a tagged preorder, so a
/// random preorder plus a random tag is a complete generator for contexts
/// (including degenerate empty-sided ones).
inline EnrichedContext random_context(Rng& rng, std::size_t total, double density = 0.3) {
  Carrier c = random_carrier(rng, total, "e");
  Preorder p = random_preorder(rng, c, density);
  std::vector<std::size_t> tags(total);
  for (auto& t : tags) t = rng.below(2);
  return t_partition(p, MonotoneMap(p, binary_order(), std::move(tags)));
}

// --- exhaustive enumerations for small carriers ------------------------------

inline std::vector<Relation> all_relations(const Carrier& s, const Carrier& t) {
  std::size_t cells = s.size() * t.size();
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<Bitset> rows(s.size(), Bitset(t.size()));
    for (std::size_t cell = 0; cell < cells; ++cell)
      if ((mask >> cell) & 1) rows[cell / t.size()].set(cell % t.size());
    out.emplace_back(s, t, std::move(rows));
  }
  return out;
}

inline std::vector<Preorder> all_preorders(const Carrier& c) {
  std::vector<Preorder> out;
  for (const auto& r : all_relations(c, c))
    if (validate_preorder(r).ok()) out.emplace_back(r);
  return out;
}

inline std::vector<Bitset> all_subsets(std::size_t n) {
  std::vector<Bitset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) b.set(i);
    out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<MonotoneMap> all_monotone_maps(const Preorder& from, const Preorder& to) {
  std::vector<MonotoneMap> out;
  std::size_t n = from.size(), m = to.size();
  if (n == 0) {
    out.emplace_back(from, to, std::vector<std::size_t>{});
    return out;
  }
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    bool mono = true;
    for (std::size_t i = 0; i < n && mono; ++i)
      from.up_set(i).for_each([&](std::size_t j) {
        if (!to.leq(idx[i], idx[j])) mono = false;
      });
    if (mono) out.emplace_back(from, to, idx);
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == m) idx[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace conceptkit
