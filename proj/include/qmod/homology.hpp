#pragma once

#include "qmod/module.hpp"

namespace qmod {

/// Augmented (co)resolution: for projective resolutions, maps[k]: P_k -> P_{k-1}
/// for k >= 1 and augment: P_0 ->> M; for injective coresolutions, maps[k]:
/// I_{k-1} -> I_k and augment: M >-> I_0.
struct Resolution {
  bool projective = true;
  ModuleMap augment;
  std::vector<ModuleRep> terms;   // P_0, P_1, ... (resp. I_0, I_1, ...)
  std::vector<ModuleMap> maps;    // d_k as above, maps.size() == terms.size()-1
  bool terminated = false;        // syzygy hit zero within the bound
  bool minimal = true;

  int length() const;  // index of the last nonzero term
  void validate() const;  // composites zero + exactness at interior nodes
};

Resolution min_proj_resolution(const ModuleRep& m, int bound);
Resolution min_inj_resolution(const ModuleRep& m, int bound);

enum class ExtRoute { ProjFirst, InjSecond };

/// dim Ext^i(m, n), via a minimal projective resolution of m or (as an
/// independent oracle) a minimal injective coresolution of n.
int ext_dim(const ModuleRep& m, const ModuleRep& n, int i,
            ExtRoute route = ExtRoute::ProjFirst);

struct ExtTableRow {
  std::string from, to;
  std::vector<int> dims;  // i = 0..bound
};

std::vector<ExtTableRow> ext_table(const std::vector<ModuleRep>& xs,
                                   const std::vector<ModuleRep>& ys, int bound);

/// Hom(-, A) dual of a module, as a module over the opposite algebra:
/// spaces Hom(X, e_v A), arrows act by postcomposition with left
/// multiplication.
ModuleRep hom_into_algebra(const ModuleRep& x, const AlgebraPtr& op);

/// Transpose: cokernel of Hom(P_0, A) -> Hom(P_1, A) for a minimal
/// presentation P_1 -> P_0 ->> m; lives over the opposite algebra.
ModuleRep transpose(const ModuleRep& m, const AlgebraPtr& op);

/// Auslander-Reiten translates tau = D Tr and tau^- = Tr D.
ModuleRep tau(const ModuleRep& m, const AlgebraCtx& ctx);
ModuleRep tau_minus(const ModuleRep& m, const AlgebraCtx& ctx);

/// Pushout of the inflation of ses along f: L -> X; returns X >-> E ->> N
/// plus the induced map mid -> E.
struct PushoutResult {
  ShortExactSeq seq;
  ModuleMap mid_to_e;
};
PushoutResult pushout(const ShortExactSeq& ses, const ModuleMap& f);

/// Pullback of the deflation of ses along g: Z -> N; returns L >-> E ->> Z
/// plus the induced map E -> mid.
struct PullbackResult {
  ShortExactSeq seq;
  ModuleMap e_to_mid;
};
PullbackResult pullback(const ShortExactSeq& ses, const ModuleMap& g);

/// Nonsplit-or-not extensions of n by l realized from Ext^1 cocycles: for a
/// minimal presentation 0 -> K -> P -> n -> 0, each map K -> l pushes out to
/// a short exact sequence l >-> E ->> n. Basis cocycles give representatives
/// spanning Ext^1(n, l).
std::vector<ShortExactSeq> extensions_from_cocycles(const ModuleRep& n,
                                                    const ModuleRep& l);

/// A short exact sequence is Hom(-, X)-exact iff it is Hom(tau^- X, -)-exact.
bool is_left_exact_vs(const ShortExactSeq& s, const ModuleRep& x);   // (-,X)
bool is_right_exact_vs(const ShortExactSeq& s, const ModuleRep& x);  // (X,-)

/// Greedy minimal right add(gens)-approximation: evaluation map reduced by
/// dropping redundant indecomposable summands of the source.
ModuleMap minimal_right_approx(const ModuleRep& target,
                               const std::vector<ModuleRep>& gens,
                               std::uint64_t seed = 0);
ModuleMap minimal_left_approx(const ModuleRep& source,
                              const std::vector<ModuleRep>& gens,
                              std::uint64_t seed = 0);
bool is_right_approx(const ModuleMap& f, const std::vector<ModuleRep>& gens);
bool is_left_approx(const ModuleMap& f, const std::vector<ModuleRep>& gens);

/// Greedy hat-resolution 0 -> X_n -> ... -> X_0 -> target -> 0 by minimal
/// right add(gens)-approximations; conflation decomposition is certified.
struct HatChain {
  bool found = false;
  std::vector<ShortExactSeq> steps;  // step k: ker >-> X_k ->> previous
  int length() const { return static_cast<int>(steps.size()) - 1; }
  std::string failure;
};
HatChain hat_resolution(const ModuleRep& target,
                        const std::vector<ModuleRep>& gens, int depth,
                        std::uint64_t seed = 0);

/// Auslander-Buchweitz approximations: for c with a finite add(x)-resolution,
/// produces the two conflations (right approximation with hat(w) kernel, and
/// left hat(w)-approximation with x-cokernel) by the inductive pushout
/// construction.
struct AbResult {
  ShortExactSeq right_approx_seq;  // Y_C >-> X_C ->> C
  ShortExactSeq left_approx_seq;   // C >-> Y^C ->> X^C
};
AbResult ab_approximation(const ModuleRep& c,
                          const std::vector<ModuleRep>& x_gens,
                          const std::vector<ModuleRep>& w_gens, int depth,
                          std::uint64_t seed = 0);

/// Global dimension if certified <= bound (max pd over simples), else nullopt.
std::optional<int> global_dimension(const AlgebraPtr& a, int bound);

}  // namespace qmod
