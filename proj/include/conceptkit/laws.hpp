#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conceptkit/classic.hpp"
#include "conceptkit/dm.hpp"
#include "conceptkit/enriched.hpp"
#include "conceptkit/equivalence.hpp"
#include "conceptkit/gen.hpp"
#include "conceptkit/summation.hpp"

namespace conceptkit {

struct LawResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string counterexample;  // first failing instance, rendered
};

struct LawReport {
  std::vector<LawResult> laws;  // sorted by name

  bool all_pass() const {
    for (const auto& l : laws)
      if (l.failed) return false;
    return true;
  }

  std::size_t total_failures() const {
    std::size_t n = 0;
    for (const auto& l : laws) n += l.failed;
    return n;
  }

  const LawResult* find(const std::string& name) const {
    for (const auto& l : laws)
      if (l.name == name) return &l;
    return nullptr;
  }
};

struct LawOptions {
  std::uint64_t seed = 7;
  std::size_t max_size = 5;     // random carrier sizes drawn from 1..max_size
  std::size_t instances = 200;  // random instances per law
  bool exhaustive = true;       // also sweep all instances on tiny carriers
};

namespace lawdetail {

inline std::string show(const Relation& r) {
  std::string out = r.source().name() + "->" + r.target().name() + " {";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) out += ",";
    out += "(" + a + "," + b + ")";
    first = false;
  }
  return out + "}";
}

inline std::string show(const Bitset& s, const Carrier& c) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += c.element(i);
    first = false;
  });
  return out + "}";
}

/// Derivation along an arbitrary relation, subset in, subset out.
inline Bitset dd(const Bitset& s, const Relation& r) {
  return derive_intent(s, ClassicContext(r));
}
inline Bitset di(const Bitset& s, const Relation& r) {
  return derive_extent(s, ClassicContext(r));
}

/// Existential image of a subset of the target along a relation.
inline Bitset pre_image(const Relation& r, const Bitset& s) {
  Bitset out(r.source().size());
  for (std::size_t i = 0; i < r.source().size(); ++i)
    if (r.row(i).intersects(s)) out.set(i);
  return out;
}

/// Existential image of a subset of the source along a relation.
inline Bitset post_image(const Relation& r, const Bitset& s) {
  Bitset out(r.target().size());
  s.for_each([&](std::size_t i) { out |= r.row(i); });
  return out;
}

/// Grow a filter pair until it satisfies the external target constraints.
inline void repair_pair(Relation& s0, Relation& s1, const EnrichedContext& ctx) {
  for (;;) {
    Relation n1 = join(s1, compose(s0, ctx.forward()));
    Relation n0 = join(s0, compose(n1, ctx.backward()));
    if (n0 == s0 && n1 == s1) return;
    s0 = std::move(n0);
    s1 = std::move(n1);
  }
}

/// Grow an ideal pair until it satisfies the external source constraints.
inline void repair_copair(Relation& r0, Relation& r1, const EnrichedContext& ctx) {
  for (;;) {
    Relation n0 = join(r0, compose(ctx.forward(), r1));
    Relation n1 = join(r1, compose(ctx.backward(), n0));
    if (n0 == r0 && n1 == r1) return;
    r0 = std::move(n0);
    r1 = std::move(n1);
  }
}

inline Bitset embed_pair(const Bitset& a, const Bitset& b, const SumOrder& s) {
  Bitset out(s.order().size());
  a.for_each([&](std::size_t i) { out.set(s.injection0().apply(i)); });
  b.for_each([&](std::size_t i) { out.set(s.injection1().apply(i)); });
  return out;
}

/// Disjoint-union context of two orders: bottom off-diagonal quadrants.
inline EnrichedContext disjoint_union_context(const Preorder& a, const Preorder& b) {
  return EnrichedContext(a, b, Relation::bottom(a.carrier(), b.carrier()),
                         Relation::bottom(b.carrier(), a.carrier()));
}

inline std::vector<Bitset> sorted_extents(const ConceptLattice& l) {
  std::vector<Bitset> out;
  out.reserve(l.size());
  for (const auto& c : l.concepts()) out.push_back(c.extent);
  std::sort(out.begin(), out.end(), [](const Bitset& x, const Bitset& y) {
    return lex_less(x, y);
  });
  return out;
}

inline std::vector<Bitset> sorted_unique(std::vector<Bitset> v) {
  std::sort(v.begin(), v.end(), [](const Bitset& x, const Bitset& y) {
    return lex_less(x, y);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace lawdetail

/// Runs the algebraic law suites. Each law is a named record; the report
/// lists per-law pass/fail counts with the first counterexample found.
class LawSuite {
public:
  explicit LawSuite(const LawOptions& opt) : opt_(opt), rng_(opt.seed) {}

  // -- recording ------------------------------------------------------------

  void check(const std::string& law, bool ok, const std::string& counterexample) {
    auto& r = results_[law];
    r.name = law;
    if (ok) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.counterexample.empty()) r.counterexample = counterexample;
    }
  }

  std::map<std::string, LawResult>& results() { return results_; }

  // -- shared generator shorthands -------------------------------------------

  std::size_t dim() { return rng_.between(1, opt_.max_size); }

  Carrier carrier(const std::string& prefix) {
    return random_carrier(rng_, dim(), prefix);
  }

  Rng& rng() { return rng_; }
  const LawOptions& options() const { return opt_; }

private:
  LawOptions opt_;
  Rng rng_;
  std::map<std::string, LawResult> results_;
};

namespace lawdetail {

// ---------------------------------------------------------------------------
// Relational kernel laws (adjointness, composition, opposition, graphs).
// ---------------------------------------------------------------------------

inline void relational_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();

  auto adjointness = [&](const Relation& alpha, const Relation& beta,
                         const Relation& gamma) {
    bool r1 = leq(gamma, residuate_source(beta, alpha));
    bool r2 = leq(compose(beta, gamma), alpha);
    bool r3 = leq(beta, residuate_target(alpha, gamma));
    s.check("rel-adjointness-equivalence", r1 == r2 && r2 == r3,
            "alpha=" + show(alpha) + " beta=" + show(beta) + " gamma=" + show(gamma));
  };

  for (std::size_t it = 0; it < opt.instances; ++it) {
    Carrier X = s.carrier("x"), Y = s.carrier("y"), Z = s.carrier("z");
    Relation alpha = random_relation(rng, X, Y, rng.density());
    Relation beta = random_relation(rng, X, Z, rng.density());
    Relation gamma = random_relation(rng, Z, Y, rng.density());
    adjointness(alpha, beta, gamma);

    // associativity and monotonicity of composition
    Carrier W = s.carrier("w");
    Relation a2 = random_relation(rng, X, Y), b2 = random_relation(rng, Y, Z),
             c2 = random_relation(rng, Z, W);
    s.check("rel-composition-associative",
            compose(compose(a2, b2), c2) == compose(a2, compose(b2, c2)),
            show(a2) + " ; " + show(b2) + " ; " + show(c2));
    Relation smaller_a = meet(a2, random_relation(rng, X, Y));
    Relation smaller_b = meet(b2, random_relation(rng, Y, Z));
    s.check("rel-composition-monotone",
            leq(compose(smaller_a, smaller_b), compose(a2, b2)),
            show(smaller_a) + " ; " + show(smaller_b));

    s.check("rel-opposite-involution", opposite(opposite(alpha)) == alpha, show(alpha));
    s.check("rel-opposite-antidistributes",
            opposite(compose(a2, b2)) == compose(opposite(b2), opposite(a2)),
            show(a2) + " ; " + show(b2));
    s.check("rel-duality-bridge",
            residuate_target(alpha, gamma) ==
                opposite(residuate_source(opposite(gamma), opposite(alpha))),
            "alpha=" + show(alpha) + " gamma=" + show(gamma));
    s.check("rel-duality-bridge",
            residuate_source(beta, alpha) ==
                opposite(residuate_target(opposite(alpha), opposite(beta))),
            "beta=" + show(beta) + " alpha=" + show(alpha));
  }

  if (opt.exhaustive) {
    Carrier X = random_carrier(rng, 2, "ex"), Y = random_carrier(rng, 2, "ey"),
            Z = random_carrier(rng, 2, "ez");
    auto rxy = all_relations(X, Y), rxz = all_relations(X, Z), rzy = all_relations(Z, Y);
    for (const auto& alpha : rxy)
      for (const auto& beta : rxz)
        for (const auto& gamma : rzy) adjointness(alpha, beta, gamma);
  }

  // graph laws over random monotone maps
  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder PX = random_preorder(rng, s.carrier("gx"));
    Preorder PY = random_preorder(rng, s.carrier("gy"));
    MonotoneMap f = random_monotone_map(rng, PY, PX);
    Relation d = direct_graph(f), v = inverse_graph(f);
    s.check("rel-graphs-adjoint",
            leq(PY.relation(), compose(d, v)) && leq(compose(v, d), PX.relation()),
            show(d) + " / " + show(v));
    MonotoneMap id = MonotoneMap::identity(PX);
    s.check("rel-graphs-identity",
            direct_graph(id) == PX.relation() && inverse_graph(id) == PX.relation(),
            PX.carrier().name());
    Preorder PZ = random_preorder(rng, s.carrier("gz"));
    MonotoneMap g = random_monotone_map(rng, PX, PZ);
    MonotoneMap fg = f.then(g);
    s.check("rel-graphs-compose",
            direct_graph(fg) == compose(direct_graph(f), direct_graph(g)) &&
                inverse_graph(fg) == compose(inverse_graph(g), inverse_graph(f)),
            show(direct_graph(fg)));
  }
}

// ---------------------------------------------------------------------------
// Derivation laws (implication facts, order/continuity, factorizations,
// special inequalities, special relations, negation table).
// ---------------------------------------------------------------------------

inline void pairing_implication_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();
  for (std::size_t it = 0; it < opt.instances; ++it) {
    EnrichedContext ctx = random_context(rng, rng.between(2, opt.max_size + 2));
    SumOrder so = sum(ctx);
    Preorder W = random_preorder(rng, s.carrier("w"));
    Preorder Z = random_preorder(rng, s.carrier("z"));

    // target-constrained pairs out of W and Z
    Relation x = random_closed_relation(rng, W, ctx.source_order());
    Relation y = random_closed_relation(rng, W, ctx.target_order());
    repair_pair(x, y, ctx);
    Relation x2 = random_closed_relation(rng, Z, ctx.source_order());
    Relation y2 = random_closed_relation(rng, Z, ctx.target_order());
    repair_pair(x2, y2, ctx);
    Relation z = random_closed_relation(rng, W, Z);

    try {
      Relation lhs = residuate_source(z, relative_pair(x, y, so));
      Relation rhs = relative_pair(residuate_source(z, x), residuate_source(z, y), so);
      s.check("pairing-residuation-source", lhs == rhs,
              "x=" + show(x) + " y=" + show(y) + " z=" + show(z));
    } catch (const ConstraintError& e) {
      s.check("pairing-residuation-source", false, e.what());
    }

    try {
      Relation lhs = residuate_target(relative_pair(x, y, so), relative_pair(x2, y2, so));
      Relation rhs = meet(residuate_target(x, x2), residuate_target(y, y2));
      s.check("pairing-residuation-target", lhs == rhs,
              "x=" + show(x) + " y=" + show(y) + " x'=" + show(x2) + " y'=" + show(y2));
    } catch (const ConstraintError& e) {
      s.check("pairing-residuation-target", false, e.what());
    }

    // source-constrained pairs into W and Z
    Relation u = random_closed_relation(rng, ctx.source_order(), W);
    Relation v = random_closed_relation(rng, ctx.target_order(), W);
    repair_copair(u, v, ctx);
    Relation u2 = random_closed_relation(rng, ctx.source_order(), Z);
    Relation v2 = random_closed_relation(rng, ctx.target_order(), Z);
    repair_copair(u2, v2, ctx);
    Relation z2 = random_closed_relation(rng, Z, W);

    try {
      Relation lhs =
          residuate_source(relative_copair(u2, v2, so), relative_copair(u, v, so));
      Relation rhs = meet(residuate_source(u2, u), residuate_source(v2, v));
      s.check("copairing-residuation-source", lhs == rhs,
              "x=" + show(u2) + " y=" + show(v2) + " x'=" + show(u) + " y'=" + show(v));
    } catch (const ConstraintError& e) {
      s.check("copairing-residuation-source", false, e.what());
    }

    try {
      Relation lhs = residuate_target(relative_copair(u, v, so), z2);
      Relation rhs = relative_copair(residuate_target(u, z2), residuate_target(v, z2), so);
      s.check("copairing-residuation-target", lhs == rhs,
              "x=" + show(u) + " y=" + show(v) + " z=" + show(z2));
    } catch (const ConstraintError& e) {
      s.check("copairing-residuation-target", false, e.what());
    }
  }
}

inline void inverse_image_implication_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();
  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder PX = random_preorder(rng, s.carrier("ix"));
    Preorder PY = random_preorder(rng, s.carrier("iy"));
    Preorder PW = random_preorder(rng, s.carrier("iw"));
    Preorder PZ = random_preorder(rng, s.carrier("iz"));
    MonotoneMap f = random_monotone_map(rng, PY, PX);

    Relation sigma = random_closed_relation(rng, PY, PW);
    Relation rho = random_closed_relation(rng, PX, PZ);
    s.check("invimage-residuation-direct",
            residuate_source(sigma, compose(direct_graph(f), rho)) ==
                residuate_source(compose(inverse_graph(f), sigma), rho),
            "f-graph=" + show(direct_graph(f)) + " sigma=" + show(sigma) +
                " rho=" + show(rho));

    Relation sigma2 = random_closed_relation(rng, PZ, PW);
    Relation rho2 = random_closed_relation(rng, PZ, PX);
    s.check("invimage-residuation-inverse",
            residuate_source(sigma2, compose(rho2, inverse_graph(f))) ==
                compose(residuate_source(sigma2, rho2), inverse_graph(f)),
            "f-graph=" + show(inverse_graph(f)) + " sigma=" + show(sigma2) +
                " rho=" + show(rho2));
  }
}

inline void derivation_order_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();

  auto run_instance = [&](const Relation& mu, const Relation& mu2, const Bitset& phi,
                          const Bitset& phi2, const Bitset& psi, const Bitset& psi2) {
    const Carrier& X0 = mu.source();
    const Carrier& X1 = mu.target();
    Bitset sub_phi = phi & phi2;  // sub_phi <= phi
    s.check("derive-contravariant-subset",
            dd(phi, mu).is_subset_of(dd(sub_phi, mu)) &&
                di(psi, mu).is_subset_of(di(psi & psi2, mu)),
            "mu=" + show(mu) + " phi=" + show(phi, X0));
    s.check("derive-continuous-subset",
            dd(phi | phi2, mu) == (dd(phi, mu) & dd(phi2, mu)) &&
                dd(Bitset(X0.size()), mu) == Bitset::full(X1.size()) &&
                di(psi | psi2, mu) == (di(psi, mu) & di(psi2, mu)) &&
                di(Bitset(X1.size()), mu) == Bitset::full(X0.size()),
            "mu=" + show(mu) + " phi=" + show(phi, X0) + " phi'=" + show(phi2, X0));
    Relation sub_mu = meet(mu, mu2);  // sub_mu <= mu
    s.check("derive-covariant-relation",
            dd(phi, sub_mu).is_subset_of(dd(phi, mu)) &&
                di(psi, sub_mu).is_subset_of(di(psi, mu)),
            "mu=" + show(mu) + " mu'=" + show(sub_mu));
    s.check("derive-continuous-relation",
            dd(phi, meet(mu, mu2)) == (dd(phi, mu) & dd(phi, mu2)) &&
                di(psi, meet(mu, mu2)) == (di(psi, mu) & di(psi, mu2)) &&
                dd(phi, Relation::top(X0, X1)) == Bitset::full(X1.size()) &&
                di(psi, Relation::top(X0, X1)) == Bitset::full(X0.size()),
            "mu=" + show(mu) + " mu'=" + show(mu2));
    // generator decomposition, plus the kernel route through residuation
    Bitset fold = Bitset::full(X1.size());
    phi.for_each([&](std::size_t x) { fold &= mu.row(x); });
    Bitset kernel_route = filter_relation_as_subset(
        residuate_source(subset_as_ideal_relation(phi, X0), mu));
    s.check("derive-generators", dd(phi, mu) == fold && dd(phi, mu) == kernel_route,
            "mu=" + show(mu) + " phi=" + show(phi, X0));
    Bitset fold2 = Bitset::full(X0.size());
    psi.for_each([&](std::size_t y) { fold2 &= mu.column(y); });
    Bitset kernel_route2 = ideal_relation_as_subset(
        residuate_target(mu, subset_as_filter_relation(psi, X1)));
    s.check("derive-generators", di(psi, mu) == fold2 && di(psi, mu) == kernel_route2,
            "mu=" + show(mu) + " psi=" + show(psi, X1));
  };

  for (std::size_t it = 0; it < opt.instances; ++it) {
    Carrier X0 = s.carrier("d0"), X1 = s.carrier("d1");
    run_instance(random_relation(rng, X0, X1), random_relation(rng, X0, X1),
                 random_subset(rng, X0.size()), random_subset(rng, X0.size()),
                 random_subset(rng, X1.size()), random_subset(rng, X1.size()));
  }
  if (opt.exhaustive) {
    Carrier X0 = random_carrier(rng, 2, "e0");
    Carrier X1 = random_carrier(rng, 2, "e1");
    auto subs0 = all_subsets(2), subs1 = all_subsets(2);
    for (const auto& mu : all_relations(X0, X1))
      for (const auto& phi : subs0)
        for (const auto& psi : subs1)
          run_instance(mu, mu, phi, phi, psi, psi);
  }
}

inline void derivation_identity_law(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();
  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder P = random_preorder(rng, s.carrier("p"));
    Bitset phi = random_subset(rng, P.size());
    s.check("derive-identity",
            dd(phi, P.relation()) == upper_bounds_set(phi, P) &&
                di(phi, P.relation()) == lower_bounds_set(phi, P),
            "P=" + show(P.relation()) + " phi=" + show(phi, P.carrier()));
  }
  if (opt.exhaustive) {
    Carrier c = random_carrier(rng, 3, "ep");
    for (const auto& P : all_preorders(c))
      for (const auto& phi : all_subsets(3))
        s.check("derive-identity",
                dd(phi, P.relation()) == upper_bounds_set(phi, P) &&
                    di(phi, P.relation()) == lower_bounds_set(phi, P),
                "P=" + show(P.relation()) + " phi=" + show(phi, c));
  }
}

inline void derivation_graph_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();
  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder PX = random_preorder(rng, s.carrier("mx"));
    Preorder PY = random_preorder(rng, s.carrier("my"));
    MonotoneMap f = random_monotone_map(rng, PY, PX);
    Relation d = direct_graph(f), v = inverse_graph(f);
    const Carrier& Xc = PX.carrier();
    const Carrier& Yc = PY.carrier();

    Bitset ideal_y = random_ideal_set(rng, PY);
    Bitset filter_x = random_filter_set(rng, PX);
    // direct graph: upper bounds of the direct ideal image / inverse ideal
    // image of the lower bounds
    Bitset image_down = ideal_relation_as_subset(
        compose(v, subset_as_ideal_relation(ideal_y, Yc)));
    s.check("derive-direct-graph",
            dd(ideal_y, d) == upper_bounds_set(image_down, PX) &&
                di(filter_x, d) ==
                    ideal_relation_as_subset(compose(
                        d, subset_as_ideal_relation(lower_bounds_set(filter_x, PX), Xc))),
            "f>=" + show(d) + " ideal=" + show(ideal_y, Yc));

    Bitset ideal_x = random_ideal_set(rng, PX);
    Bitset filter_y = random_filter_set(rng, PY);
    // inverse graph: inverse filter image of the upper bounds / lower bounds
    // of the direct filter image
    Bitset filter_image = filter_relation_as_subset(
        compose(subset_as_filter_relation(filter_y, Yc), d));
    s.check("derive-inverse-graph",
            dd(ideal_x, v) == filter_relation_as_subset(compose(
                                  subset_as_filter_relation(
                                      upper_bounds_set(ideal_x, PX), Xc),
                                  v)) &&
                di(filter_y, v) == lower_bounds_set(filter_image, PX),
            "f<=" + show(v) + " ideal=" + show(ideal_x, Xc));
  }
}

inline void derivation_inverse_image_law(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();
  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder PX0 = random_preorder(rng, s.carrier("vx"));
    Preorder PX1 = random_preorder(rng, s.carrier("vy"));
    Preorder PY0 = random_preorder(rng, s.carrier("vu"));
    Preorder PY1 = random_preorder(rng, s.carrier("vv"));
    MonotoneMap f0 = random_monotone_map(rng, PY0, PX0);
    MonotoneMap f1 = random_monotone_map(rng, PY1, PX1);
    Relation mu = random_closed_relation(rng, PX0, PX1);
    Relation r = compose(direct_graph(f0), compose(mu, inverse_graph(f1)));

    Bitset psi0 = random_ideal_set(rng, PY0);
    Relation lhs_rel = residuate_source(
        compose(inverse_graph(f0), subset_as_ideal_relation(psi0, PY0.carrier())), mu);
    s.check("derive-inverse-image",
            dd(psi0, r) == filter_relation_as_subset(compose(lhs_rel, inverse_graph(f1))),
            "r=" + show(r) + " psi0=" + show(psi0, PY0.carrier()));

    Bitset psi1 = random_filter_set(rng, PY1);
    Relation rhs_rel = compose(
        direct_graph(f0),
        residuate_target(mu, compose(subset_as_filter_relation(psi1, PY1.carrier()),
                                     direct_graph(f1))));
    s.check("derive-inverse-image", di(psi1, r) == ideal_relation_as_subset(rhs_rel),
            "r=" + show(r) + " psi1=" + show(psi1, PY1.carrier()));
  }
}

inline void derivation_negation_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();
  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder P0 = random_preorder(rng, s.carrier("n0"));
    Preorder P1 = random_preorder(rng, s.carrier("n1"));
    Relation mu = random_closed_relation(rng, P0, P1);
    const Carrier& X0 = P0.carrier();
    const Carrier& X1 = P1.carrier();
    Relation src_neg = source_negation(mu, P0);
    Relation tgt_neg = target_negation(mu, P1);

    Bitset phi = random_subset(rng, X1.size());  // subsets of the negations' source
    Bitset psi = random_subset(rng, X0.size());

    Bitset mu_phi = pre_image(mu, phi);  // mu o phi, an existential image
    Bitset upper_route = upper_bounds_set(mu_phi, P0);
    Bitset lower_psi = lower_bounds_set(psi, P0);
    Bitset src_inv = ideal_relation_as_subset(
        residuate_source(mu, subset_as_ideal_relation(lower_psi, X0)));
    s.check("derive-source-negation",
            dd(phi, src_neg) == upper_route && di(psi, src_neg) == src_inv,
            "mu=" + show(mu) + " phi=" + show(phi, X1) + " psi=" + show(psi, X0));

    Bitset tgt_dir = filter_relation_as_subset(residuate_target(
        subset_as_filter_relation(upper_bounds_set(phi, P1), X1), mu));
    Bitset tgt_inv = lower_bounds_set(post_image(mu, psi), P1);
    s.check("derive-target-negation",
            dd(phi, tgt_neg) == tgt_dir && di(psi, tgt_neg) == tgt_inv,
            "mu=" + show(mu) + " phi=" + show(phi, X1) + " psi=" + show(psi, X0));

    Relation neg = meet(src_neg, tgt_neg);
    s.check("derive-total-negation",
            dd(phi, neg) == (upper_route & tgt_dir) && di(psi, neg) == (src_inv & tgt_inv),
            "mu=" + show(mu) + " phi=" + show(phi, X1) + " psi=" + show(psi, X0));
  }
}

inline void special_inequality_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();

  auto run_instance = [&](const Relation& mu, const Bitset& phi, const Bitset& psi) {
    Preorder P0(residuate_target(mu, mu));
    Preorder P1(residuate_source(mu, mu));
    const Carrier& X0 = mu.source();
    const Carrier& X1 = mu.target();
    Bitset nu_phi = ideal_relation_as_subset(
        residuate_source(mu, subset_as_ideal_relation(phi, X0)));  // mu <=s phi
    Bitset psi_nu = filter_relation_as_subset(
        residuate_target(subset_as_filter_relation(psi, X1), mu));  // psi <=t mu
    Relation neg = meet(source_negation(mu, P0), target_negation(mu, P1));
    s.check("special-inequality-direct",
            dd(phi, mu).is_subset_of(upper_bounds_set(nu_phi, P1)),
            "mu=" + show(mu) + " phi=" + show(phi, X0));
    s.check("special-inequality-inverse",
            di(psi, mu).is_subset_of(lower_bounds_set(psi_nu, P0)),
            "mu=" + show(mu) + " psi=" + show(psi, X1));
    s.check("special-inequality-upper",
            upper_bounds_set(phi, P0).is_subset_of(dd(nu_phi, neg)),
            "mu=" + show(mu) + " phi=" + show(phi, X0));
    s.check("special-inequality-lower",
            lower_bounds_set(psi, P1).is_subset_of(di(psi_nu, neg)),
            "mu=" + show(mu) + " psi=" + show(psi, X1));
  };

  for (std::size_t it = 0; it < opt.instances; ++it) {
    Carrier X0 = s.carrier("s0"), X1 = s.carrier("s1");
    Relation mu = random_relation(rng, X0, X1, rng.density());
    Preorder P0(residuate_target(mu, mu));
    Preorder P1(residuate_source(mu, mu));
    run_instance(mu, random_ideal_set(rng, P0), random_filter_set(rng, P1));
  }
  if (opt.exhaustive) {
    Carrier X0 = random_carrier(rng, 2, "f0");
    Carrier X1 = random_carrier(rng, 2, "f1");
    for (const auto& mu : all_relations(X0, X1))
      for (const auto& phi : all_subsets(2))
        for (const auto& psi : all_subsets(2)) run_instance(mu, phi, psi);
  }
}

inline void special_relation_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();

  auto run_instance = [&](const Carrier& c, const Bitset& sub) {
    std::size_t n = c.size();
    Relation eq = Relation::identity(c);
    Bitset expected = sub.none()          ? Bitset::full(n)
                      : sub.count() == 1  ? sub
                                          : Bitset(n);
    s.check("special-relations-identity",
            dd(sub, eq) == expected && di(sub, eq) == expected,
            "X=" + c.name() + " s=" + show(sub, c));
    Relation bot = Relation::bottom(c, c);
    Bitset bot_expected = sub.none() ? Bitset::full(n) : Bitset(n);
    s.check("special-relations-bottom",
            dd(sub, bot) == bot_expected && di(sub, bot) == bot_expected,
            "X=" + c.name() + " s=" + show(sub, c));
    Relation notgeq = complement(opposite(eq));
    s.check("special-relations-complement",
            dd(sub, notgeq) == sub.complemented() && di(sub, notgeq) == sub.complemented(),
            "X=" + c.name() + " s=" + show(sub, c));
  };

  for (std::size_t it = 0; it < opt.instances; ++it) {
    Carrier c = s.carrier("sr");
    run_instance(c, random_subset(rng, c.size()));
  }
  if (opt.exhaustive) {
    Carrier c = random_carrier(rng, 3, "se");
    for (const auto& sub : all_subsets(3)) run_instance(c, sub);
  }
}

inline void negation_table_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();

  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder P0 = random_preorder(rng, s.carrier("t0"));
    Preorder P1 = random_preorder(rng, s.carrier("t1"));
    const Carrier& X0 = P0.carrier();
    const Carrier& X1 = P1.carrier();

    s.check("neg-table-bottom",
            negation(Relation::bottom(X0, X1), P0, P1) == Relation::top(X1, X0),
            "X0=" + show(P0.relation()) + " X1=" + show(P1.relation()));
    s.check("neg-table-identity", negation(P0.relation(), P0, P0) == P0.relation(),
            show(P0.relation()));

    // De Morgan over a fixed ambient pair of orders, via the checked negation.
    Relation mu = random_closed_relation(rng, P0, P1);
    Relation nu = random_closed_relation(rng, P0, P1);
    s.check("neg-table-demorgan",
            negation(join(mu, nu), P0, P1) ==
                meet(negation(mu, P0, P1), negation(nu, P0, P1)),
            "mu=" + show(mu) + " nu=" + show(nu));

    // De Morgan under the induced orders of the join, via the raw formula
    // (the components need not be closed there).
    Relation a = random_relation(rng, X0, X1, rng.density());
    Relation b = random_relation(rng, X0, X1, rng.density());
    Relation j = join(a, b);
    Preorder J0(residuate_target(j, j));
    Preorder J1(residuate_source(j, j));
    auto raw_neg = [&](const Relation& r) {
      return meet(source_negation(r, J0), target_negation(r, J1));
    };
    s.check("neg-table-demorgan", raw_neg(j) == meet(raw_neg(a), raw_neg(b)),
            "mu=" + show(a) + " nu=" + show(b));

    // ideal and filter rows
    Bitset phi = random_ideal_set(rng, P0);
    Bitset psi = random_filter_set(rng, P0);
    s.check("neg-table-ideal-filter",
            negation(subset_as_ideal_relation(phi, X0), P0, unit_order()) ==
                    subset_as_filter_relation(upper_bounds_set(phi, P0), X0) &&
                negation(subset_as_filter_relation(psi, X0), unit_order(), P0) ==
                    subset_as_ideal_relation(lower_bounds_set(psi, P0), X0),
            "phi=" + show(phi, X0) + " psi=" + show(psi, X0));

    // complement row: neg(not-geq) = {(x,x') | up(x) united with down(x') is X}
    Relation notgeq = complement(opposite(P0.relation()));
    std::vector<Bitset> rows(P0.size(), Bitset(P0.size()));
    for (std::size_t x = 0; x < P0.size(); ++x)
      for (std::size_t x2 = 0; x2 < P0.size(); ++x2)
        if ((P0.up_set(x) | P0.down_set(x2)) == Bitset::full(P0.size())) rows[x].set(x2);
    Relation expected(X0, X0, std::move(rows));
    s.check("neg-table-complement", negation(notgeq, P0, P0) == expected,
            show(P0.relation()));

    // induced-order forms of negation coincide
    Relation m2 = random_relation(rng, X0, X1, rng.density());
    Preorder I0(residuate_target(m2, m2));
    Preorder I1(residuate_source(m2, m2));
    Relation total = negation(m2, I0, I1);
    s.check("negation-induced-forms",
            total == source_negation(m2, I0) && total == target_negation(m2, I1),
            "mu=" + show(m2));
  }

  // the fixed 3-chain instance for the complement row
  Carrier c3("chain3", {"a", "b", "c"});
  Preorder chain = Preorder::chain(c3);
  Relation notgeq = complement(opposite(chain.relation()));
  std::vector<Bitset> rows(3, Bitset(3));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t x2 = 0; x2 < 3; ++x2)
      if ((chain.up_set(x) | chain.down_set(x2)) == Bitset::full(3)) rows[x].set(x2);
  s.check("neg-table-complement",
          negation(notgeq, chain, chain) == Relation(c3, c3, std::move(rows)),
          "3-chain");
}

inline void derivation_pairing_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();
  for (std::size_t it = 0; it < opt.instances; ++it) {
    Preorder PX = random_preorder(rng, s.carrier("ax"));
    Preorder PY = random_preorder(rng, s.carrier("ay"));
    Preorder PZ = random_preorder(rng, s.carrier("az"));
    EnrichedContext du = disjoint_union_context(PY, PZ);
    SumOrder so = sum(du);

    Relation mu = random_closed_relation(rng, PX, PY);
    Relation nu = random_closed_relation(rng, PX, PZ);
    Relation paired = relative_pair(mu, nu, so);

    Bitset phi = random_subset(rng, PX.size());
    s.check("derive-pairing",
            dd(phi, paired) == embed_pair(dd(phi, mu), dd(phi, nu), so),
            "mu=" + show(mu) + " nu=" + show(nu) + " phi=" + show(phi, PX.carrier()));
    Bitset psi = random_subset(rng, PY.size());
    Bitset zeta = random_subset(rng, PZ.size());
    s.check("derive-pairing",
            di(embed_pair(psi, zeta, so), paired) == (di(psi, mu) & di(zeta, nu)),
            "mu=" + show(mu) + " nu=" + show(nu) + " psi=" + show(psi, PY.carrier()) +
                " zeta=" + show(zeta, PZ.carrier()));

    Relation mu2 = random_closed_relation(rng, PY, PX);
    Relation nu2 = random_closed_relation(rng, PZ, PX);
    Relation copaired = relative_copair(mu2, nu2, so);
    Bitset phi_y = random_subset(rng, PY.size());
    Bitset theta = random_subset(rng, PZ.size());
    s.check("derive-copairing",
            dd(embed_pair(phi_y, theta, so), copaired) ==
                (dd(phi_y, mu2) & dd(theta, nu2)),
            "mu=" + show(mu2) + " nu=" + show(nu2));
    Bitset psi_x = random_subset(rng, PX.size());
    s.check("derive-copairing",
            di(psi_x, copaired) == embed_pair(di(psi_x, mu2), di(psi_x, nu2), so),
            "mu=" + show(mu2) + " nu=" + show(nu2) +
                " psi=" + show(psi_x, PX.carrier()));
  }
}

// ---------------------------------------------------------------------------
// Concept-lattice construction laws (top, inverse image, product, pairing).
// ---------------------------------------------------------------------------

inline void construction_laws(LawSuite& s) {
  const auto& opt = s.options();
  Rng& rng = s.rng();

  for (std::size_t it = 0; it < opt.instances; ++it) {
    // top
    Carrier X0 = s.carrier("c0"), X1 = s.carrier("c1");
    ConceptLattice top_lattice = enumerate_concepts(ClassicContext(Relation::top(X0, X1)));
    s.check("cl-top",
            top_lattice.size() == 1 &&
                top_lattice.at(0).extent == Bitset::full(X0.size()) &&
                top_lattice.at(0).intent == Bitset::full(X1.size()),
            "X0=" + X0.name() + "(" + std::to_string(X0.size()) + ") X1=" + X1.name());

    // inverse image along surjective maps, built by quotient construction
    Preorder PY0 = random_preorder(rng, s.carrier("q0"));
    Preorder PY1 = random_preorder(rng, s.carrier("q1"));
    MonotoneMap f0 = random_quotient_map(rng, PY0, rng.between(1, PY0.size()), "k0");
    MonotoneMap f1 = random_quotient_map(rng, PY1, rng.between(1, PY1.size()), "k1");
    Relation mu = random_closed_relation(rng, f0.target(), f1.target());
    Relation r = compose(direct_graph(f0), compose(mu, inverse_graph(f1)));
    std::vector<Bitset> actual = sorted_extents(enumerate_concepts(ClassicContext(r)));
    ConceptLattice base = enumerate_concepts(ClassicContext(mu));
    std::vector<Bitset> expected;
    for (const auto& c : base.concepts()) expected.push_back(f0.preimage(c.extent));
    expected = sorted_unique(std::move(expected));
    s.check("cl-inverse-image-surjective", actual == expected,
            "mu=" + show(mu) + " f0-graph=" + show(direct_graph(f0)));

    // product: extents are products of extents, and the concept count is
    // multiplicative
    Carrier Y0 = s.carrier("p0"), Y1 = s.carrier("p1");
    Relation nu = random_relation(rng, Y0, Y1, rng.density());
    Relation mu_small = random_relation(rng, X0, X1, rng.density());
    ConceptLattice la = enumerate_concepts(ClassicContext(mu_small));
    ConceptLattice lb = enumerate_concepts(ClassicContext(nu));
    ConceptLattice lp = enumerate_concepts(ClassicContext(product_relation(mu_small, nu)));
    std::vector<Bitset> product_extents;
    for (const auto& ca : la.concepts())
      for (const auto& cb : lb.concepts()) {
        Bitset e(X0.size() * Y0.size());
        ca.extent.for_each([&](std::size_t i) {
          cb.extent.for_each([&](std::size_t k) { e.set(i * Y0.size() + k); });
        });
        product_extents.push_back(std::move(e));
      }
    bool set_equal = sorted_extents(lp) == sorted_unique(std::move(product_extents));
    bool multiplicative = lp.size() == la.size() * lb.size();
    s.check("cl-product", set_equal && multiplicative,
            "mu=" + show(mu_small) + " nu=" + show(nu) + " |CL(mu)|=" +
                std::to_string(la.size()) + " |CL(nu)|=" + std::to_string(lb.size()) +
                " |CL(mu x nu)|=" + std::to_string(lp.size()));

    // pairing (apposition): extents are pairwise meets of component extents
    Preorder AX = random_preorder(rng, s.carrier("wx"));
    Preorder AY = random_preorder(rng, s.carrier("wy"));
    Preorder AZ = random_preorder(rng, s.carrier("wz"));
    Relation am = random_closed_relation(rng, AX, AY);
    Relation an = random_closed_relation(rng, AX, AZ);
    SumOrder so = sum(disjoint_union_context(AY, AZ));
    ConceptLattice lpair = enumerate_concepts(ClassicContext(relative_pair(am, an, so)));
    ConceptLattice lam = enumerate_concepts(ClassicContext(am));
    ConceptLattice lan = enumerate_concepts(ClassicContext(an));
    std::vector<Bitset> meets;
    for (const auto& ca : lam.concepts())
      for (const auto& cb : lan.concepts()) meets.push_back(ca.extent & cb.extent);
    s.check("cl-pairing-apposition",
            sorted_extents(lpair) == sorted_unique(std::move(meets)),
            "mu=" + show(am) + " nu=" + show(an));
  }

  if (opt.exhaustive) {
    // all 1x1 context pairs; the product law's smallest counterexamples live here
    Carrier A0 = random_carrier(rng, 1, "u0"), A1 = random_carrier(rng, 1, "u1");
    Carrier B0 = random_carrier(rng, 1, "v0"), B1 = random_carrier(rng, 1, "v1");
    for (const auto& mu : all_relations(A0, A1))
      for (const auto& nu : all_relations(B0, B1)) {
        ConceptLattice la = enumerate_concepts(ClassicContext(mu));
        ConceptLattice lb = enumerate_concepts(ClassicContext(nu));
        ConceptLattice lp = enumerate_concepts(ClassicContext(product_relation(mu, nu)));
        std::vector<Bitset> product_extents;
        for (const auto& ca : la.concepts())
          for (const auto& cb : lb.concepts()) {
            Bitset e(1);
            if (ca.extent.any() && cb.extent.any()) e.set(0);
            product_extents.push_back(std::move(e));
          }
        bool set_equal = sorted_extents(lp) == sorted_unique(std::move(product_extents));
        bool multiplicative = lp.size() == la.size() * lb.size();
        s.check("cl-product", set_equal && multiplicative,
                "mu=" + show(mu) + " nu=" + show(nu) + " |CL(mu x nu)|=" +
                    std::to_string(lp.size()) + " expected " +
                    std::to_string(la.size() * lb.size()));
      }
  }
}

}  // namespace lawdetail

inline LawReport finish_report(LawSuite&& suite) {
  LawReport out;
  for (auto& [name, result] : suite.results()) out.laws.push_back(result);
  std::sort(out.laws.begin(), out.laws.end(),
            [](const LawResult& a, const LawResult& b) { return a.name < b.name; });
  return out;
}

/// Relational kernel laws: adjointness, composition, opposition, graphs.
inline LawReport check_relational_laws(const LawOptions& opt = {}) {
  LawSuite suite(opt);
  lawdetail::relational_laws(suite);
  return finish_report(std::move(suite));
}

/// The derivation law suite: implication facts for pairings/copairings and
/// inverse images, order/continuity in both arguments, generator
/// decomposition, the identity/graph/inverse-image/negation/pairing/copairing
/// factorizations, the four special inequalities, the special-relations case
/// analyses, and the negation-table identities.
inline LawReport check_derivation_laws(const LawOptions& opt = {}) {
  LawSuite suite(opt);
  lawdetail::pairing_implication_laws(suite);
  lawdetail::inverse_image_implication_laws(suite);
  lawdetail::derivation_order_laws(suite);
  lawdetail::derivation_identity_law(suite);
  lawdetail::derivation_graph_laws(suite);
  lawdetail::derivation_inverse_image_law(suite);
  lawdetail::derivation_negation_laws(suite);
  lawdetail::special_inequality_laws(suite);
  lawdetail::special_relation_laws(suite);
  lawdetail::negation_table_laws(suite);
  lawdetail::derivation_pairing_laws(suite);
  return finish_report(std::move(suite));
}

/// Concept-lattice construction laws (top, surjective inverse image, product,
/// apposition), checked exactly as stated.
inline LawReport check_cl_constructions(const LawOptions& opt = {}) {
  LawSuite suite(opt);
  lawdetail::construction_laws(suite);
  return finish_report(std::move(suite));
}

inline LawReport check_all_laws(const LawOptions& opt = {}) {
  LawReport out = check_relational_laws(opt);
  for (auto& l : check_derivation_laws(opt).laws) out.laws.push_back(std::move(l));
  for (auto& l : check_cl_constructions(opt).laws) out.laws.push_back(std::move(l));
  std::sort(out.laws.begin(), out.laws.end(),
            [](const LawResult& a, const LawResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace conceptkit
