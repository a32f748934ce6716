#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parahess/field.hpp"

namespace parahess {

template <class F>
using Vector = std::vector<typename F::Element>;

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<Vector<F>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<F> row(std::size_t i) const {
    return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [this](const Element& e) { return field_.is_zero(e); });
  }

  Vector<F> apply(const Vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector<F> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
RowEchelon<F> rref(Matrix<F> m) {
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && field.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    typename F::Element inv = field.one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      typename F::Element factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivot_columns.size();
}

/// Vector subspace of F^{ambient}, stored by its reduced row echelon basis so
/// that equal subspaces compare equal as data.
template <class F>
class LinearSubspace {
 public:
  LinearSubspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  static LinearSubspace span(const F& field, std::size_t ambient,
                             const std::vector<Vector<F>>& vectors) {
    LinearSubspace s(field, ambient);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
      if (v.size() != ambient) throw std::invalid_argument("spanning vector arity mismatch");
    auto [red, piv] = rref(Matrix<F>::from_rows(field, vectors));
    for (std::size_t i = 0; i < piv.size(); ++i) s.basis_.push_back(red.row(i));
    return s;
  }

  static LinearSubspace whole(const F& field, std::size_t ambient) {
    auto id = Matrix<F>::identity(field, ambient);
    LinearSubspace s(field, ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(id.row(i));
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  /// Vector-space dimension.
  std::size_t dim() const { return basis_.size(); }
  /// Projective dimension; -1 for the zero subspace.
  long projective_dim() const { return static_cast<long>(basis_.size()) - 1; }
  const std::vector<Vector<F>>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const Vector<F>& v) const {
    auto with = basis_;
    with.push_back(v);
    return span(field_, ambient_, with).dim() == dim();
  }

  bool contains(const LinearSubspace& o) const {
    auto with = basis_;
    with.insert(with.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, with).dim() == dim();
  }

  LinearSubspace operator+(const LinearSubspace& o) const {
    auto with = basis_;
    with.insert(with.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, with);
  }

  bool operator==(const LinearSubspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vector<F>> basis_;
};

template <class F>
struct RankKernel {
  std::size_t rank;
  LinearSubspace<F> kernel;
};

/// Rank and canonical right kernel of m.
template <class F>
RankKernel<F> rank_kernel(const Matrix<F>& m) {
  const F& field = m.field();
  auto [red, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector<F>> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, free);
    vecs.push_back(std::move(v));
  }
  return {piv.size(), LinearSubspace<F>::span(field, m.cols(), vecs)};
}

/// A particular solution of m x = b, or nullopt when inconsistent.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& m, const Vector<F>& b) {
  const F& field = m.field();
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  Matrix<F> aug(field, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [red, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vector<F> x(m.cols(), field.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = red(r, m.cols());
  return x;
}

/// Fraction-free (Bareiss) determinant with row pivoting.
template <class F>
typename F::Element det_scalar(Matrix<F> m) {
  const F& field = m.field();
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return field.one();
  typename F::Element prev = field.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && field.is_zero(m(p, k))) ++p;
    if (p == n) return field.zero();
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  typename F::Element d = m(n - 1, n - 1);
  return negate ? typename F::Element(-d) : d;
}

template <class F>
typename F::Element dot(const Vector<F>& a, const Vector<F>& b, const F& field) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  typename F::Element s = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

/// Gram matrix G[i][j] = b_i^T H b_j over W's canonical basis.
template <class F>
Matrix<F> restrict_bilinear(const Matrix<F>& h, const LinearSubspace<F>& w) {
  if (!h.is_square() || h.rows() != w.ambient())
    throw std::invalid_argument("bilinear form and subspace dimension mismatch");
  const F& field = h.field();
  const auto& b = w.basis();
  std::vector<Vector<F>> hb;
  hb.reserve(b.size());
  for (const auto& v : b) hb.push_back(h.apply(v));
  Matrix<F> g(field, b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = dot(b[i], hb[j], field);
  return g;
}

/// {v in W : v^T H w = 0 for all w in W}.
template <class F>
LinearSubspace<F> radical_of_restriction(const Matrix<F>& h, const LinearSubspace<F>& w) {
  const F& field = h.field();
  Matrix<F> g = restrict_bilinear(h, w);
  LinearSubspace<F> coeffs = rank_kernel(g).kernel;
  if (w.dim() == 0) return LinearSubspace<F>(field, w.ambient());
  std::vector<Vector<F>> vecs;
  for (const auto& c : coeffs.basis()) {
    Vector<F> v(w.ambient(), field.zero());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t k = 0; k < w.ambient(); ++k) v[k] = v[k] + c[i] * w.basis()[i][k];
    vecs.push_back(std::move(v));
  }
  return LinearSubspace<F>::span(field, w.ambient(), vecs);
}

/// Row-echelon pivot rows and columns of a nonsingular maximal minor.
template <class F>
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> maximal_minor(const Matrix<F>& m) {
  // Columns: pivots of m. Rows: pivots of m^T restricted to those columns.
  auto cols = rref(m).pivot_columns;
  Matrix<F> sub_t(m.field(), cols.size(), m.rows());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r) sub_t(i, r) = m(r, cols[i]);
  auto rows = rref(sub_t).pivot_columns;
  return {rows, cols};
}

}  // namespace parahess
