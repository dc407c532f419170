// Finite-dimensional associative algebras presented by structure constants.
// Product rows are stored sparsely; path-algebra-like presentations multiply
// in time proportional to the support, not the dimension.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "natq/matrix.hpp"
#include "natq/subspace.hpp"

namespace natq {

template <class F>
struct SparseTerm {
  uint32_t idx;
  typename F::Elem c;
};

template <class F>
using SparseVec = std::vector<SparseTerm<F>>;

template <class F>
SparseVec<F> to_sparse(const Vec<F>& v) {
  SparseVec<F> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({static_cast<uint32_t>(i), v[i]});
  return s;
}

template <class F>
Vec<F> to_dense(const F& field, size_t n, const SparseVec<F>& s) {
  Vec<F> v = zero_vec(field, n);
  for (const auto& t : s) v[t.idx] = t.c;
  return v;
}

struct ValidationReport {
  bool associative = true;
  bool unital = true;
  // first failing (i, j, k) triple for associativity, 0-based
  std::optional<std::array<size_t, 3>> failing_triple;
  std::optional<size_t> failing_unit_index;

  bool ok() const { return associative && unital; }
};

template <class F>
class Algebra {
 public:
  using Elem = typename F::Elem;

  Algebra(const F& field, size_t dim, std::vector<std::string> labels,
          std::vector<SparseVec<F>> table, Vec<F> unit)
      : field_(field), dim_(dim), labels_(std::move(labels)),
        table_(std::move(table)), unit_(std::move(unit)) {
    if (labels_.size() != dim_ || table_.size() != dim_ * dim_ ||
        unit_.size() != dim_)
      throw DimensionError("algebra presentation shapes disagree");
  }

  // dense-table convenience constructor
  static Algebra from_dense(const F& field, size_t dim,
                            std::vector<std::string> labels,
                            const std::vector<std::vector<Vec<F>>>& products,
                            Vec<F> unit) {
    std::vector<SparseVec<F>> table(dim * dim);
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        table[i * dim + j] = to_sparse<F>(products[i][j]);
    return Algebra(field, dim, std::move(labels), std::move(table),
                   std::move(unit));
  }

  const F& field() const { return field_; }
  size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<F>& unit() const { return unit_; }
  const SparseVec<F>& product_row(size_t i, size_t j) const {
    return table_[i * dim_ + j];
  }

  Vec<F> basis_element(size_t i) const { return unit_vec(field_, dim_, i); }

  Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const {
    if (a.size() != dim_ || b.size() != dim_)
      throw DimensionError("element does not belong to this algebra");
    Vec<F> out = zero_vec(field_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        auto f = a[i] * b[j];
        for (const auto& t : table_[i * dim_ + j]) out[t.idx] += f * t.c;
      }
    }
    return out;
  }

  // matrix of left multiplication by a (columns are a * e_j)
  Matrix<F> left_matrix(const Vec<F>& a) const {
    Matrix<F> m(field_, dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j)
        for (const auto& t : table_[i * dim_ + j])
          m.at(t.idx, j) += a[i] * t.c;
    }
    return m;
  }

  Matrix<F> right_matrix(const Vec<F>& a) const {
    Matrix<F> m(field_, dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) {
      if (a[j].is_zero()) continue;
      for (size_t i = 0; i < dim_; ++i)
        for (const auto& t : table_[i * dim_ + j])
          m.at(t.idx, i) += a[j] * t.c;
    }
    return m;
  }

  // trace of left multiplication by each basis element
  Vec<F> basis_traces() const {
    Vec<F> tr = zero_vec(field_, dim_);
    for (size_t l = 0; l < dim_; ++l)
      for (size_t a = 0; a < dim_; ++a)
        for (const auto& t : table_[l * dim_ + a])
          if (t.idx == a) tr[l] += t.c;
    return tr;
  }

  // Gram matrix of the trace form T(x, y) = trace(L_{xy})
  Matrix<F> trace_form() const {
    auto tr = basis_traces();
    Matrix<F> g(field_, dim_, dim_);
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j)
        for (const auto& t : table_[i * dim_ + j])
          g.at(i, j) += t.c * tr[t.idx];
    return g;
  }

  ValidationReport validate() const {
    ValidationReport rep;
    for (size_t i = 0; i < dim_ && rep.unital; ++i) {
      auto e = basis_element(i);
      if (multiply(unit_, e) != e || multiply(e, unit_) != e) {
        rep.unital = false;
        rep.failing_unit_index = i;
      }
    }
    for (size_t i = 0; i < dim_ && rep.associative; ++i)
      for (size_t j = 0; j < dim_ && rep.associative; ++j) {
        const auto& ij = table_[i * dim_ + j];
        for (size_t k = 0; k < dim_; ++k) {
          Vec<F> lhs = zero_vec(field_, dim_);
          for (const auto& t : ij)
            for (const auto& u : table_[t.idx * dim_ + k])
              lhs[u.idx] += t.c * u.c;
          Vec<F> rhs = zero_vec(field_, dim_);
          for (const auto& t : table_[j * dim_ + k])
            for (const auto& u : table_[i * dim_ + t.idx])
              rhs[u.idx] += t.c * u.c;
          if (lhs != rhs) {
            rep.associative = false;
            rep.failing_triple = {{i, j, k}};
            break;
          }
        }
      }
    return rep;
  }

  // span of {u * v : u in U basis, v in V basis}
  Subspace<F> subspace_product(const Subspace<F>& u,
                               const Subspace<F>& v) const {
    std::vector<Vec<F>> prods;
    for (size_t i = 0; i < u.dim(); ++i)
      for (size_t j = 0; j < v.dim(); ++j)
        prods.push_back(multiply(u.basis_vector(i), v.basis_vector(j)));
    return Subspace<F>::span(field_, dim_, prods);
  }

  bool is_two_sided_ideal(const Subspace<F>& ideal) const {
    for (size_t j = 0; j < ideal.dim(); ++j) {
      auto v = ideal.basis_vector(j);
      for (size_t i = 0; i < dim_; ++i) {
        if (!ideal.contains(multiply(basis_element(i), v))) return false;
        if (!ideal.contains(multiply(v, basis_element(i)))) return false;
      }
    }
    return true;
  }

  // Solution space of [x, b_i] = 0 for all basis elements b_i.
  Subspace<F> center() const {
    Matrix<F> stacked(field_, dim_ * dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
      auto l = left_matrix(basis_element(i));
      auto r = right_matrix(basis_element(i));
      for (size_t a = 0; a < dim_; ++a)
        for (size_t b = 0; b < dim_; ++b)
          stacked.at(i * dim_ + a, b) = l.at(a, b) - r.at(a, b);
    }
    return Subspace<F>::span(field_, dim_, kernel_basis(stacked));
  }

 private:
  F field_;
  size_t dim_;
  std::vector<std::string> labels_;
  std::vector<SparseVec<F>> table_;  // row i*dim+j = b_i * b_j
  Vec<F> unit_;
};

// Quotient by a verified two-sided ideal, with the projection data.
template <class F>
struct QuotientResult {
  Algebra<F> algebra;
  CosetSpace<F> projection;  // full space / ideal
};

template <class F>
QuotientResult<F> quotient_algebra(const Algebra<F>& a,
                                   const Subspace<F>& ideal) {
  if (!a.is_two_sided_ideal(ideal))
    throw NotAnIdealError("quotient by a non-ideal subspace");
  CosetSpace<F> proj(Subspace<F>::full(a.field(), a.dim()), ideal);
  size_t qdim = proj.dim();
  std::vector<std::string> labels;
  std::vector<Vec<F>> reps;
  for (size_t k = 0; k < qdim; ++k) {
    auto rep = proj.representative(k);
    reps.push_back(rep);
    // representatives are unit vectors; reuse the original label
    size_t idx = 0;
    for (size_t i = 0; i < rep.size(); ++i)
      if (!rep[i].is_zero()) idx = i;
    labels.push_back(a.labels()[idx]);
  }
  std::vector<SparseVec<F>> table(qdim * qdim);
  for (size_t i = 0; i < qdim; ++i)
    for (size_t j = 0; j < qdim; ++j)
      table[i * qdim + j] =
          to_sparse<F>(proj.project(a.multiply(reps[i], reps[j])));
  Vec<F> unit = proj.project(a.unit());
  Algebra<F> q(a.field(), qdim, std::move(labels), std::move(table),
               std::move(unit));
  return QuotientResult<F>{std::move(q), std::move(proj)};
}

}  // namespace natq
