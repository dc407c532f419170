// Subspaces in canonical reduced-echelon form, and quotients U/W with chosen
// coset representatives. Canonical form makes subspace equality plain
// representation equality.
#pragma once

#include <vector>

#include "natq/matrix.hpp"

namespace natq {

template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace(const F& field, size_t ambient_dim)
      : field_(field), ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

  static Subspace span(const F& field, size_t ambient_dim,
                       const std::vector<Vec<F>>& vectors) {
    auto rr = rref(Matrix<F>::from_rows(field, vectors, ambient_dim));
    Subspace s(field, ambient_dim);
    s.basis_ = Matrix<F>(field, rr.rank, ambient_dim);
    for (size_t r = 0; r < rr.rank; ++r)
      s.basis_.set_row(r, rr.reduced.row(r));
    s.pivots_.assign(rr.pivot_columns.begin(),
                     rr.pivot_columns.begin() + rr.rank);
    return s;
  }

  static Subspace full(const F& field, size_t ambient_dim) {
    Subspace s(field, ambient_dim);
    s.basis_ = Matrix<F>::identity(field, ambient_dim);
    for (size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
    return s;
  }

  const F& field() const { return field_; }
  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis_matrix() const { return basis_; }
  Vec<F> basis_vector(size_t i) const { return basis_.row(i); }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Reduces v by the echelon rows; the remainder is zero iff v lies in the
  // subspace. When coords is non-null it receives the combination
  // coefficients of the rows used.
  Vec<F> reduce(Vec<F> v, Vec<F>* coords = nullptr) const {
    if (v.size() != ambient_) throw DimensionError("Subspace::reduce");
    if (coords) *coords = zero_vec(field_, dim());
    for (size_t r = 0; r < dim(); ++r) {
      const auto& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      auto f = c;  // rows are reduced: pivot entry is 1
      if (coords) (*coords)[r] = f;
      for (size_t j = 0; j < ambient_; ++j) v[j] -= basis_.at(r, j) * f;
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return vec_is_zero<F>(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  // Coordinates of v relative to the stored basis; throws if v is outside.
  Vec<F> coordinates(const Vec<F>& v) const {
    Vec<F> coords;
    auto rem = reduce(v, &coords);
    if (!vec_is_zero<F>(rem))
      throw Error("vector not contained in subspace");
    return coords;
  }

  Vec<F> from_coordinates(const Vec<F>& coords) const {
    if (coords.size() != dim()) throw DimensionError("from_coordinates");
    Vec<F> v = zero_vec(field_, ambient_);
    for (size_t r = 0; r < dim(); ++r) vec_add_scaled<F>(v, basis_.row(r), coords[r]);
    return v;
  }

  Subspace sum(const Subspace& other) const {
    std::vector<Vec<F>> rows;
    for (size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
    for (size_t i = 0; i < other.dim(); ++i)
      rows.push_back(other.basis_vector(i));
    return span(field_, ambient_, rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  F field_;
  size_t ambient_;
  Matrix<F> basis_;          // RREF rows
  std::vector<size_t> pivots_;
};

// Quotient U/W of two subspaces of a common ambient space, W contained in U.
// Representatives are the U-basis vectors at non-pivot coordinates of W
// expressed in U-coordinates, which keeps everything canonical.
template <class F>
class CosetSpace {
 public:
  CosetSpace(Subspace<F> big, Subspace<F> small)
      : u_(std::move(big)), w_in_u_(small.field(), u_.dim()) {
    if (!u_.contains(small))
      throw Error("CosetSpace: W is not contained in U");
    std::vector<Vec<F>> wcoords;
    for (size_t i = 0; i < small.dim(); ++i)
      wcoords.push_back(u_.coordinates(small.basis_vector(i)));
    w_in_u_ = Subspace<F>::span(u_.field(), u_.dim(), wcoords);
    std::vector<bool> is_pivot(u_.dim(), false);
    for (size_t c : w_in_u_.pivots()) is_pivot[c] = true;
    for (size_t c = 0; c < u_.dim(); ++c)
      if (!is_pivot[c]) rep_coords_.push_back(c);
  }

  const F& field() const { return u_.field(); }
  size_t dim() const { return rep_coords_.size(); }
  size_t ambient_dim() const { return u_.ambient_dim(); }
  const Subspace<F>& numerator() const { return u_; }

  // chosen representative of the k-th quotient basis element, in ambient
  // coordinates
  Vec<F> representative(size_t k) const {
    return u_.basis_vector(rep_coords_[k]);
  }

  // quotient coordinates of an ambient vector lying in U
  Vec<F> project(const Vec<F>& v) const {
    auto cu = u_.coordinates(v);
    auto rem = w_in_u_.reduce(std::move(cu));
    Vec<F> out = zero_vec(field(), dim());
    for (size_t k = 0; k < dim(); ++k) out[k] = rem[rep_coords_[k]];
    return out;
  }

  Vec<F> lift(const Vec<F>& coords) const {
    if (coords.size() != dim()) throw DimensionError("CosetSpace::lift");
    Vec<F> v = zero_vec(field(), ambient_dim());
    for (size_t k = 0; k < dim(); ++k)
      vec_add_scaled<F>(v, representative(k), coords[k]);
    return v;
  }

 private:
  Subspace<F> u_;
  Subspace<F> w_in_u_;  // W in U-coordinates
  std::vector<size_t> rep_coords_;
};

}  // namespace natq
