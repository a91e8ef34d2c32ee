#pragma once

#include "qmod/matrix.hpp"

#include <vector>

namespace qmod {

/// Dense univariate polynomials over the computation field, coefficient of
/// x^i at index i. Used by the Fitting-style splitting in decompose().
struct Poly {
  Field field;
  std::vector<Scalar> c;  // normalized: no trailing zeros

  explicit Poly(Field f) : field(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  Scalar lead() const;
  void normalize();
  Poly monic() const;

  static Poly zero(Field f) { return Poly(f); }
  static Poly constant(Field f, const Scalar& a);
  static Poly x_minus(Field f, const Scalar& a);  // x - a

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c == o.c; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  /// Applies the polynomial to a square matrix.
  Mat eval_mat(const Mat& m) const;

  std::string str() const;
};

Poly poly_gcd(Poly a, Poly b);               // monic gcd
Poly poly_powmod(Poly base, BigInt e, const Poly& mod);

/// Characteristic polynomial of a square matrix (Hessenberg reduction;
/// divisions only by field elements, so valid over Q and any F_p).
Poly char_poly(const Mat& m);

/// All roots of f lying in F_p, via gcd with x^p - x; over Q, the integer
/// roots of the squarefree part found by divisor search (desk scale).
std::vector<Scalar> field_roots(const Poly& f);

/// A coprime factorization f = g * h with 0 < deg g < deg f, if one is found
/// (distinct linear factors, or distinct-degree splitting over F_p).
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f);

}  // namespace qmod
