#pragma once

#include "qmod/matrix.hpp"
#include "qmod/quiver.hpp"

#include <memory>
#include <optional>

namespace qmod {

/// A finite-dimensional algebra with an explicit basis and multiplication
/// table, presented over a quiver. Basis element i carries idempotent tags
/// (basis_src[i], basis_tgt[i]) with b = e_src b e_tgt; multiplication
/// mult(i,j) is "first b_i, then b_j" (path concatenation order).
struct BasedAlgebra {
  Field field;
  Quiver quiver;
  int dim = 0;

  std::vector<std::string> basis_name;
  std::vector<int> basis_src, basis_tgt;
  std::vector<int> basis_path_len;  // -1 when the basis is not by paths
  std::vector<int> vertex_idem;     // basis index of e_v

  // mult[i*dim+j] = coordinate vector of b_i * b_j
  std::vector<std::vector<Scalar>> mult;
  // arrow k as an algebra element
  std::vector<std::vector<Scalar>> arrow_elem;

  std::vector<Relation> relations;
  bool relations_known = true;

  // Radical basis as coordinate vectors. For quiver-presented algebras this
  // is the positive-length path part; End presentations store the computed
  // one.
  std::vector<std::vector<Scalar>> rad_basis;

  std::vector<Scalar> zero_vec() const {
    return std::vector<Scalar>(dim, Scalar::zero(field));
  }
  std::vector<Scalar> unit_vec(int i) const;
  std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                               const std::vector<Scalar>& b) const;
  std::vector<Scalar> identity_elem() const;  // sum of vertex idempotents
  std::vector<Scalar> path_element(const Path& p) const;

  bool check_associativity() const;
  bool check_idempotents() const;

  /// dim e_i A e_j, from the basis tags.
  int hom_block_dim(int i, int j) const;

  std::string fingerprint() const;  // stable hash of the structure constants
};

using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

/// Builds the path algebra of q modulo the two-sided ideal generated by the
/// relations. The ideal must be admissible: it has to contain every path of
/// some length N <= max_path_len (otherwise a saturation error is thrown).
AlgebraPtr build_based_algebra(const Quiver& q,
                               const std::vector<Relation>& rels, Field f,
                               int max_path_len = 16);

/// Same basis with reversed multiplication, presented over the reversed
/// quiver; opposite of the opposite reproduces the original structure
/// constants.
AlgebraPtr opposite_algebra(const AlgebraPtr& a);

/// Radical of an arbitrary based algebra via the trace bilinear form;
/// requires char 0 or p > dim (Dickson's criterion).
std::vector<std::vector<Scalar>> trace_form_radical(const BasedAlgebra& a);

/// Entrywise reduction of a rational based algebra modulo p. All structure
/// constants must be p-integral; used by the enumeration-based closure
/// checks, which work over a small prime field.
AlgebraPtr algebra_mod_p(const AlgebraPtr& a, std::uint64_t p);

/// An algebra together with its opposite, for duality-heavy code paths.
struct AlgebraCtx {
  AlgebraPtr alg;
  AlgebraPtr op;
  explicit AlgebraCtx(AlgebraPtr a) : alg(std::move(a)), op(opposite_algebra(alg)) {}
};

}  // namespace qmod
