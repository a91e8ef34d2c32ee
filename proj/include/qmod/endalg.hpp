#pragma once

#include "qmod/relexact.hpp"

namespace qmod {

/// The endomorphism algebra of a summand list, plain or modulo an ideal
/// [C], as a based algebra in Gabriel form. Basis element k is the map
/// dict[k]: G_{tgt} -> G_{src} (an element of e_src End e_tgt); algebra
/// multiplication is "first x, then y" = composition y o x read through the
/// right-module action on Hom(G, -).
struct EndPresentation {
  AlgebraPtr algebra;
  std::vector<ModuleRep> summands;  // pairwise non-isomorphic indecomposables
  std::vector<ModuleMap> dict;      // basis index -> representative map
  bool stable = false;              // built from Hom/[C] cosets
  SubcatSpec subcat;                // the C when stable

  /// Coordinates of a map G_j -> G_i in the basis (via residue classes when
  /// stable).
  std::vector<Scalar> coords_of(const ModuleMap& f, int i, int j) const;
};

/// Requires the given summand list to be indecomposable and pairwise
/// non-isomorphic (validated); Lambda itself enters as its projectives.
EndPresentation end_algebra(const std::vector<ModuleRep>& summands,
                            std::uint64_t seed = 0);

/// Stable variant: Hom spaces are replaced by Hom/[C] cosets; summands lying
/// in add C must be dropped by the caller (their identity coset dies).
EndPresentation stable_end_algebra(const std::vector<ModuleRep>& summands,
                                   const SubcatSpec& spec,
                                   std::uint64_t seed = 0);

/// Gabriel quiver of the presentation (vertices = summand order, arrow
/// multiplicities from rad/rad^2 block dimensions); already stored in
/// algebra->quiver but exposed for reporting.
Quiver gabriel_quiver(const EndPresentation& e);

/// Hom(G, x) as a right module over end_algebra(G): spaces Hom(G_i, x),
/// arrows act by precomposition with the chosen radical representatives.
ModuleRep hom_functor(const EndPresentation& e, const ModuleRep& x);
/// Image of a map under the functor: postcomposition.
ModuleMap hom_functor_map(const EndPresentation& e, const ModuleMap& f);

/// Stable versions over Hom/[C].
ModuleRep stable_hom_functor(const EndPresentation& e, const ModuleRep& x);

struct FullyFaithfulRow {
  std::string x, y;
  int dim_hom = 0;       // Hom (or coset) dimension upstairs
  int dim_hom_end = 0;   // Hom dimension between the images
  bool injective = false;
  bool pass = false;
};

struct FullyFaithfulReport {
  bool pass = true;
  std::vector<FullyFaithfulRow> rows;
};

/// Dimension equality and injectivity of the induced map on every fixture
/// pair.
FullyFaithfulReport fully_faithful_check(const EndPresentation& e,
                                         const std::vector<ModuleRep>& fixtures);

/// Relation ideal of the presentation, recovered as the kernel of the path
/// evaluation map on the Gabriel quiver (optional reporting aid).
std::vector<Relation> recover_relations(const EndPresentation& e,
                                        int max_len = 8);

}  // namespace qmod
