#pragma once

#include "qmod/homology.hpp"

namespace qmod {

/// add of a finite generator list, with closure properties as
/// asserted-then-verified flags.
struct SubcatSpec {
  std::vector<ModuleRep> gens;        // generators; add(gens) is the subcategory
  std::vector<ModuleRep> indec_pool;  // indecomposable summands of the gens
  bool quotient_closed = false;
  bool submodule_closed = false;

  bool empty() const { return gens.empty(); }
  static SubcatSpec make(std::vector<ModuleRep> gens,
                         const DecomposeOptions& opts = {});
};

enum class ExactKind { Full, FromC, ToC, BothC };

struct ExactStructureSpec {
  ExactKind kind = ExactKind::Full;
  SubcatSpec subcat;  // unused for Full
};

/// Conflation test for the modified exact structures: (C,-) needs
/// Hom(C, M) -> Hom(C, N) surjective for every generator, (-,C) dually,
/// both for the C-structure; the full structure admits everything.
bool is_conflation(const ShortExactSeq& ses, const ExactStructureSpec& spec);

/// Right add(C)-approximation of x. When C is closed under quotients the
/// image of the evaluation map lies in C and the returned map is the
/// inclusion C_X >-> x; otherwise the evaluation map itself.
ModuleMap right_approx(const ModuleRep& x, const SubcatSpec& spec,
                       std::uint64_t seed = 0);
/// Dual: when C is closed under submodules, the surjection x ->> C^x onto
/// the image inside the evaluation target; otherwise the evaluation map.
ModuleMap left_approx(const ModuleRep& x, const SubcatSpec& spec,
                      std::uint64_t seed = 0);

/// Hom(x, y) split into the ideal [C](x, y) of maps factoring through add C
/// and a chosen coset basis.
struct QuotientHom {
  ModuleRep source, target;
  std::vector<ModuleMap> hom_basis;
  std::vector<ModuleMap> ideal_basis;
  std::vector<ModuleMap> coset_basis;

  int hom_dim() const { return static_cast<int>(hom_basis.size()); }
  int ideal_dim() const { return static_cast<int>(ideal_basis.size()); }
  int coset_dim() const { return static_cast<int>(coset_basis.size()); }
};

QuotientHom quotient_hom(const ModuleRep& x, const ModuleRep& y,
                         const SubcatSpec& spec);

/// Membership of f in the ideal [C](source(f), target(f)).
bool in_ideal(const ModuleMap& f, const SubcatSpec& spec);

/// Monomorphism / epimorphism of the residue class of f in E/[C], tested
/// against the declared object list (absolute in the rep-finite fixtures by
/// additivity).
bool quotient_is_mono(const ModuleMap& f, const SubcatSpec& spec,
                      const std::vector<ModuleRep>& test_objects);
bool quotient_is_epi(const ModuleMap& f, const SubcatSpec& spec,
                     const std::vector<ModuleRep>& test_objects);

/// Factorization of the residue class of f as a C-deflation followed by a
/// monomorphism, by the pullback/pushout construction; every claim is
/// re-certified and failures are reported, not patched.
struct ZeroKernelFactorization {
  bool ok = false;
  std::string failure;            // first certification that failed
  ShortExactSeq c_conflation;     // E >-> C^E + X + C_I ->> F certified BothC
  ModuleMap deflation_part;       // X -> F
  ModuleMap mono_part;            // F -> Y, monic in the quotient
};

ZeroKernelFactorization zero_kernel_factorization(
    const ModuleMap& f, const SubcatSpec& spec,
    const std::vector<ModuleRep>& test_objects, std::uint64_t seed = 0);

struct NKernelRow {
  std::string morphism;
  bool pass = false;
  std::string detail;
};

struct NKernelReport {
  int n = 0;
  bool pass = false;
  std::vector<NKernelRow> rows;
};

/// n = 0: deflation-then-mono factorizations (delegates to
/// zero_kernel_factorization); n = -1: additionally requires the mono part
/// to be an inflation of the structure; n >= 1: kernel-based weak kernel
/// chains certified Hom(-)-exact against the test objects.
NKernelReport n_kernels_check(const std::vector<ModuleMap>& morphisms,
                              const ExactStructureSpec& spec, int n,
                              const std::vector<ModuleRep>& test_objects,
                              std::uint64_t seed = 0);

/// Exhaustive subrepresentation enumeration over a small prime field.
/// Modules must have integral matrices (they are reinterpreted over F_p).
struct ClosureReport {
  bool submodule_closed = false;
  bool quotient_closed = false;
  std::string submodule_witness;  // a subquotient outside add C, if any
  std::string quotient_witness;
  std::uint64_t enumerated = 0;
};

ClosureReport closure_check(const SubcatSpec& spec, std::uint64_t enum_prime,
                            std::uint64_t budget, std::uint64_t seed = 0);

/// All subrepresentations of m, as submodule inclusions (exhaustive; only
/// sensible over a small finite field).
std::vector<SubQuot> enumerate_subreps(const ModuleRep& m,
                                       std::uint64_t budget);

enum class RelProjSetting { Main1BothC, ClassicalFromC };

/// Expected relative projectives: add{A, C, tau^- C} for the C-structure
/// with C closed under submodules; add C for the (C,-)-structure with C
/// generating. Returned as an indecomposable list.
std::vector<ModuleRep> relative_projectives_expected(
    const AlgebraCtx& ctx, const SubcatSpec& spec, RelProjSetting setting,
    std::uint64_t seed = 0);
std::vector<ModuleRep> relative_injectives_expected(
    const AlgebraCtx& ctx, const SubcatSpec& spec, RelProjSetting setting,
    std::uint64_t seed = 0);

/// Lifting test of x against every supplied conflation.
bool is_relative_projective(const ModuleRep& x,
                            const std::vector<ShortExactSeq>& conflations);
bool is_relative_injective(const ModuleRep& x,
                           const std::vector<ShortExactSeq>& conflations);

}  // namespace qmod
