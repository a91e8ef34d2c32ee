#pragma once

#include "qmod/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qmod {

/// Dense matrix over the computation field. Columns are vectors; a linear map
/// V -> W is a (dim W) x (dim V) matrix acting on column vectors.
class Mat {
 public:
  Mat() : rows_(0), cols_(0), field_(Field::rationals()) {}
  Mat(int rows, int cols, Field f);

  static Mat identity(int n, Field f);
  static Mat from_rows(Field f,
                       const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& c) const;
  Mat operator-() const;
  Mat transpose() const;

  Mat hcat(const Mat& o) const;  // [this | o]
  Mat vcat(const Mat& o) const;  // [this ; o]
  Mat col(int j) const;
  Mat cols_subset(const std::vector<int>& idx) const;
  Mat rows_subset(const std::vector<int>& idx) const;
  Mat pow(int k) const;  // square matrices

  /// Reduced row echelon form and the strictly increasing pivot column list.
  std::pair<Mat, std::vector<int>> rref() const;
  int rank() const;

  /// Columns form a basis of the null space; count = cols - rank.
  Mat kernel_basis() const;
  /// Columns form a basis of the column space.
  Mat column_space_basis() const;

  /// Solves this * x = b for all columns of b at once. Empty iff unsolvable.
  std::optional<Mat> solve(const Mat& b) const;
  std::optional<Mat> inverse() const;

  std::string str() const;

 private:
  void check_field(const Mat& o) const;

  int rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

/// Incrementally maintained reduced echelon basis of a subspace of k^n.
/// The workhorse behind span, membership and dimension bookkeeping.
class Span {
 public:
  Span(int n, Field f) : n_(n), field_(f) {}

  /// Reduces v against the basis and absorbs the residual; true if dim grew.
  bool add(std::vector<Scalar> v);
  bool contains(const std::vector<Scalar>& v) const;
  /// Residual of v after reduction (zero iff contained).
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  Field field() const { return field_; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

 private:
  int n_;
  Field field_;
  std::vector<std::vector<Scalar>> rows_;  // reduced echelon rows
  std::vector<int> pivots_;
};

/// Coordinates of v in the given spanning columns, if v lies in their span.
std::optional<std::vector<Scalar>> coords_in(const Mat& basis_cols,
                                             const std::vector<Scalar>& v);

Mat mat_from_cols(Field f, int n, const std::vector<std::vector<Scalar>>& cols);
std::vector<Scalar> mat_col_vec(const Mat& m, int j);

}  // namespace qmod
