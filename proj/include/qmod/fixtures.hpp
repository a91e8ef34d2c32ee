#pragma once

#include "qmod/homology.hpp"

namespace qmod {

/// Linear A_n quiver with arrows k -> k-1 for k = 1..n-1 (so vertex 0 is the
/// sink and P(k) is the interval [0..k]).
Quiver linear_quiver(int n);
/// Cyclic quiver on n vertices with arrows k -> k+1 mod n.
Quiver cyclic_quiver(int n);

AlgebraPtr path_algebra_linear(int n, Field f);
/// Self-injective Nakayama algebra: cyclic quiver on n vertices, all paths
/// of the given Loewy length vanish.
AlgebraPtr nakayama_algebra(int n, int loewy, Field f);

/// Interval module over the linear algebra: dims 1 on [lo..hi], identity
/// arrow maps inside the interval.
ModuleRep interval_module(const AlgebraPtr& linear, int lo, int hi);
/// Serial module over the cyclic Nakayama algebra: top S(top_vertex),
/// composition length len.
ModuleRep serial_module(const AlgebraPtr& nakayama, int top_vertex, int len);

/// All interval modules of the linear A_n algebra (its indecomposables).
std::vector<ModuleRep> interval_fixtures(const AlgebraPtr& linear);
/// All serial modules of length <= loewy (the indecomposables of the
/// Nakayama algebra).
std::vector<ModuleRep> serial_fixtures(const AlgebraPtr& nakayama, int loewy);

/// Deterministic conflation list: for every ordered fixture pair, the split
/// sequence plus the pushout realizations of an Ext^1 cocycle basis.
std::vector<ShortExactSeq> fixture_conflations(
    const std::vector<ModuleRep>& fixtures, size_t cap = 10000);

/// Validates a fixture list: every module passes validation and
/// decompose-certified indecomposability, pairwise non-isomorphic.
void validate_fixture_corpus(const std::vector<ModuleRep>& fixtures,
                             std::uint64_t seed = 0);

/// Closure of a seed set under tau, tau^-, syzygy, cosyzygy, radical, top,
/// socle quotient and cocycle extensions, decomposed to indecomposables and
/// deduplicated; the exhaustive indecomposable census of the rep-finite
/// fixture algebras used here.
std::vector<ModuleRep> indecomposable_closure(const AlgebraCtx& ctx,
                                              std::vector<ModuleRep> seeds,
                                              int max_rounds, size_t cap,
                                              std::uint64_t seed = 0);

}  // namespace qmod
