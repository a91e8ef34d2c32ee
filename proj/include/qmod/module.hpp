#pragma once

#include "qmod/algebra.hpp"

#include <random>

namespace qmod {

/// A right module over a based algebra, stored as a representation of the
/// algebra's quiver: a space per vertex and, for each arrow a: i -> j, a
/// matrix M_a: M_i -> M_j (shape dims[j] x dims[i]).
struct ModuleRep {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Mat> arrow_mat;
  std::string name;

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  Field field() const { return alg->field; }

  Mat path_action(const Path& p) const;  // dims[target] x dims[source]
  /// Exact relation check for every defining relation of the algebra.
  void validate() const;
  bool same_shape(const ModuleRep& o) const;
  bool operator==(const ModuleRep& o) const;
};

ModuleRep zero_module(const AlgebraPtr& a);
ModuleRep make_module(const AlgebraPtr& a, std::vector<int> dims,
                      std::vector<Mat> mats, std::string name = "");
ModuleRep direct_sum(const std::vector<ModuleRep>& parts);

ModuleRep simple_module(const AlgebraPtr& a, int v);
ModuleRep projective_module(const AlgebraPtr& a, int v);  // e_v A
ModuleRep injective_module(const AlgebraPtr& a, int v);   // D(A e_v)
ModuleRep regular_module(const AlgebraPtr& a);            // sum of P(v)

/// A morphism of modules: one matrix per vertex, commuting with all arrows.
struct ModuleMap {
  ModuleRep source, target;
  std::vector<Mat> f;
  std::string name;

  void validate() const;  // exact commutation check
  bool is_injective() const;
  bool is_surjective() const;
  bool is_zero() const;
  bool is_isomorphism() const;
  std::vector<Scalar> vec() const;  // vertex-major, row-major flattening
};

ModuleMap zero_map(const ModuleRep& src, const ModuleRep& tgt);
ModuleMap identity_map(const ModuleRep& m);
ModuleMap compose(const ModuleMap& late, const ModuleMap& early);  // late o early
ModuleMap map_add(const ModuleMap& a, const ModuleMap& b);
ModuleMap map_sub(const ModuleMap& a, const ModuleMap& b);
ModuleMap map_scale(const ModuleMap& a, const Scalar& c);
ModuleMap map_from_vec(const ModuleRep& src, const ModuleRep& tgt,
                       const std::vector<Scalar>& v);

/// Basis of Hom(m, n), the solution space of all commutation equations.
std::vector<ModuleMap> hom_space(const ModuleRep& m, const ModuleRep& n);
int hom_dim(const ModuleRep& m, const ModuleRep& n);

/// Coordinates of g in the given Hom basis (throws if not in span).
std::vector<Scalar> hom_coords(const std::vector<ModuleMap>& basis,
                               const ModuleMap& g);

struct SubQuot {
  ModuleRep mod;
  ModuleMap map;  // inclusion (for kernel/image) or projection (cokernel)
};

SubQuot kernel(const ModuleMap& f);
SubQuot cokernel(const ModuleMap& f);
SubQuot image(const ModuleMap& f);  // inclusion into target

/// Submodule spanned vertex-wise by the given column spaces (must be
/// arrow-stable; checked).
SubQuot submodule_from_cols(const ModuleRep& m, const std::vector<Mat>& cols);

SubQuot radical_submodule(const ModuleRep& m);  // m * rad(A), with inclusion
SubQuot socle_submodule(const ModuleRep& m);    // annihilator of rad(A)
SubQuot top_quotient(const ModuleRep& m);       // m / rad(m), with projection

ModuleMap projective_cover(const ModuleRep& m);    // P ->> m, minimal
ModuleMap injective_envelope(const ModuleRep& m);  // m >-> I, minimal

/// Matlis duality: vector-space dual with transposed arrow actions, as a
/// module over the given opposite algebra.
ModuleRep dualize(const ModuleRep& m, const AlgebraPtr& op);
/// Contravariant on maps: D(f): D(target) -> D(source).
ModuleMap dualize_map(const ModuleMap& f, const AlgebraPtr& op);

/// A certified short exact sequence 0 -> L -> M -> N -> 0.
struct ShortExactSeq {
  ModuleMap incl;  // L >-> M
  ModuleMap proj;  // M ->> N
  void validate() const;
  const ModuleRep& sub() const { return incl.source; }
  const ModuleRep& mid() const { return incl.target; }
  const ModuleRep& quot() const { return proj.target; }
};

ShortExactSeq ses_from_incl(const ModuleMap& incl);   // completes by cokernel
ShortExactSeq ses_from_proj(const ModuleMap& proj);   // completes by kernel
ShortExactSeq split_ses(const ModuleRep& l, const ModuleRep& n);

struct IsoOptions {
  std::uint64_t seed = 0;
  int attempts = 60;
  const std::vector<ModuleRep>* probes = nullptr;  // optional extra invariants
};

/// Isomorphism test: certified false on invariant mismatch, true on an
/// explicit unit, Undetermined error otherwise.
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n,
                   const IsoOptions& opts = {});

struct DecomposeOptions {
  std::uint64_t seed = 0;
  int attempts = 40;
  int exhaustive_budget_log2 = 18;  // exhaustive idempotent search cap
};

struct Summand {
  ModuleRep mod;
  int multiplicity = 1;
  std::string certificate;  // how indecomposability was certified
};

/// Krull-Schmidt decomposition via Fitting-style splitting along coprime
/// factorizations of characteristic polynomials of endomorphisms.
/// Indecomposability of each summand is certified (local End via radical
/// quotient, or exhaustive idempotent search over small finite fields);
/// failure to certify raises an error rather than guessing.
std::vector<Summand> decompose(const ModuleRep& m,
                               const DecomposeOptions& opts = {});

/// True iff x is isomorphic to a direct sum of copies of the given
/// indecomposables (pool entries must be indecomposable).
bool in_add_of(const ModuleRep& x, const std::vector<ModuleRep>& pool,
               const DecomposeOptions& opts = {});

/// Entrywise reduction of a rational module modulo p, over the matching
/// reduced algebra (see algebra_mod_p).
ModuleRep module_mod_p(const ModuleRep& m, const AlgebraPtr& reduced_alg);

}  // namespace qmod
