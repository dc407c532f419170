// Dense exact matrices: row reduction, rank, kernels, solving.
#pragma once

#include <cstddef>
#include <vector>

#include "natq/field.hpp"

namespace natq {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
Vec<F> zero_vec(const F& field, size_t n) {
  return Vec<F>(n, field.zero());
}

template <class F>
Vec<F> unit_vec(const F& field, size_t n, size_t i) {
  Vec<F> v(n, field.zero());
  v[i] = field.one();
  return v;
}

template <class F>
bool vec_is_zero(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class F>
void vec_add_scaled(Vec<F>& dst, const Vec<F>& src,
                    const typename F::Elem& c) {
  if (dst.size() != src.size()) throw DimensionError("vec_add_scaled");
  if (c.is_zero()) return;
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += src[i] * c;
}

template <class F>
Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionError("vec_sub");
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(const F& field, size_t rows, size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        a_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows,
                          size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionError("from_rows");
      for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  const F& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Elem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Elem& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Vec<F> row(size_t r) const {
    return Vec<F>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }

  void set_row(size_t r, const Vec<F>& v) {
    if (v.size() != cols_) throw DimensionError("set_row");
    for (size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const Elem& av = a.at(i, k);
        if (av.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += av * b.at(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Vec<F> apply(const Vec<F>& v) const {  // matrix * column vector
    if (v.size() != cols_) throw DimensionError("apply");
    Vec<F> r = zero_vec(field_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  F field_;
  size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<size_t> pivot_columns;
  size_t rank;
};

// Gauss-Jordan to unique reduced row-echelon form.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& field = m.field();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(sel, j));
    auto inv = m.at(r, c).inv();
    for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      auto f = m.at(i, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  (void)field;
  return RrefResult<F>{std::move(m), pivots, pivots.size()};
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

// Basis of the right null space {x : m x = 0}.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  auto rr = rref(m);
  const F& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v = zero_vec(field, m.cols());
    v[c] = field.one();
    for (size_t r = 0; r < rr.rank; ++r)
      v[rr.pivot_columns[r]] = -rr.reduced.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace natq
