#include "qmod/matrix.hpp"

#include <sstream>

namespace qmod {

Mat::Mat(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), field_(f),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

Mat Mat::identity(int n, Field f) {
  Mat m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw ShapeError("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

void Mat::check_field(const Mat& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("matrix arithmetic across fields " + field_.name() +
                        " and " + o.field_.name());
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("add shape");
  Mat m(rows_, cols_, field_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("sub shape");
  Mat m(rows_, cols_, field_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
  return m;
}

Mat Mat::operator-() const {
  Mat m(rows_, cols_, field_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  check_field(o);
  if (cols_ != o.rows_)
    throw ShapeError("mul shape " + std::to_string(cols_) + " vs " +
                     std::to_string(o.rows_));
  Mat m(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) m.at(i, j) += a * b;
      }
    }
  return m;
}

Mat Mat::operator*(const Scalar& c) const {
  Mat m(rows_, cols_, field_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * c;
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::hcat(const Mat& o) const {
  check_field(o);
  if (rows_ != o.rows_) throw ShapeError("hcat rows");
  Mat m(rows_, cols_ + o.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Mat Mat::vcat(const Mat& o) const {
  check_field(o);
  if (cols_ != o.cols_) throw ShapeError("vcat cols");
  Mat m(rows_ + o.rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

Mat Mat::col(int j) const {
  Mat m(rows_, 1, field_);
  for (int i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
  return m;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
  Mat m(rows_, static_cast<int>(idx.size()), field_);
  for (int j = 0; j < static_cast<int>(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

Mat Mat::rows_subset(const std::vector<int>& idx) const {
  Mat m(static_cast<int>(idx.size()), cols_, field_);
  for (int i = 0; i < static_cast<int>(idx.size()); ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  return m;
}

Mat Mat::pow(int k) const {
  if (rows_ != cols_) throw ShapeError("pow on non-square matrix");
  Mat r = Mat::identity(rows_, field_);
  Mat b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::pair<Mat, std::vector<int>> Mat::rref() const {
  Mat m = *this;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(row, j));
    Scalar inv = m.at(row, col).inv();
    for (int j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar c = m.at(i, col);
      for (int j = col; j < cols_; ++j)
        m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {m, pivots};
}

int Mat::rank() const { return static_cast<int>(rref().second.size()); }

Mat Mat::kernel_basis() const {
  auto [r, pivots] = rref();
  std::vector<int> free;
  {
    size_t pi = 0;
    for (int j = 0; j < cols_; ++j) {
      if (pi < pivots.size() && pivots[pi] == j)
        ++pi;
      else
        free.push_back(j);
    }
  }
  Mat k(cols_, static_cast<int>(free.size()), field_);
  for (int t = 0; t < static_cast<int>(free.size()); ++t) {
    int fj = free[t];
    k.at(fj, t) = Scalar::one(field_);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      k.at(pivots[i], t) = -r.at(i, fj);
  }
  return k;
}

Mat Mat::column_space_basis() const {
  auto pivots = rref().second;
  return cols_subset(pivots);
}

std::optional<Mat> Mat::solve(const Mat& b) const {
  check_field(b);
  if (b.rows() != rows_) throw ShapeError("solve: rhs rows mismatch");
  Mat aug = hcat(b);
  auto [r, pivots] = aug.rref();
  // Inconsistent iff some pivot lands in the rhs block.
  for (int p : pivots)
    if (p >= cols_) return std::nullopt;
  Mat x(cols_, b.cols(), field_);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = r.at(i, cols_ + j);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve(Mat::identity(rows_, field_));
  if (!x) return std::nullopt;
  if ((*this) * (*x) != Mat::identity(rows_, field_)) return std::nullopt;
  return x;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

bool Span::add(std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != n_) throw ShapeError("span vector size");
  v = reduce(std::move(v));
  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = v[piv].inv();
  for (int j = piv; j < n_; ++j) v[j] *= inv;
  // Back-substitute into existing rows to stay fully reduced.
  for (size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = rows_[i][piv];
    if (c.is_zero()) continue;
    for (int j = piv; j < n_; ++j) rows_[i][j] -= c * v[j];
  }
  // Insert keeping pivots sorted.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

std::vector<Scalar> Span::reduce(std::vector<Scalar> v) const {
  if (static_cast<int>(v.size()) != n_) throw ShapeError("span vector size");
  for (size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (int j = pivots_[i]; j < n_; ++j) v[j] -= c * rows_[i][j];
  }
  return v;
}

bool Span::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<std::vector<Scalar>> coords_in(const Mat& basis_cols,
                                             const std::vector<Scalar>& v) {
  Mat b(basis_cols.rows(), 1, basis_cols.field());
  if (static_cast<int>(v.size()) != basis_cols.rows())
    throw ShapeError("coords_in vector size");
  for (int i = 0; i < basis_cols.rows(); ++i) b.at(i, 0) = v[i];
  auto x = basis_cols.solve(b);
  if (!x) return std::nullopt;
  std::vector<Scalar> out;
  out.reserve(basis_cols.cols());
  for (int i = 0; i < basis_cols.cols(); ++i) out.push_back(x->at(i, 0));
  return out;
}

Mat mat_from_cols(Field f, int n,
                  const std::vector<std::vector<Scalar>>& cols) {
  Mat m(n, static_cast<int>(cols.size()), f);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (static_cast<int>(cols[j].size()) != n)
      throw ShapeError("mat_from_cols size");
    for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Scalar> mat_col_vec(const Mat& m, int j) {
  std::vector<Scalar> v;
  v.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
  return v;
}

}  // namespace qmod
