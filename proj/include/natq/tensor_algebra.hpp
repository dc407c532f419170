// Truncated tensor algebras T(A0, M) over a split semisimple A0 with a
// block-supported semisimple bimodule M, in canonical form: M is recorded by
// its simple-summand multiplicities per block pair, tensor components are
// indexed by block chains, and multiplication is monomial (a matrix-weighted
// path algebra). The naive tensor-product-with-middle-relations construction
// lives alongside as an independent oracle.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "natq/bimodule.hpp"

namespace natq {

template <class F>
class TensorAlgebra {
 public:
  struct Component {
    std::vector<uint32_t> blocks;  // i_0, ..., i_d
    std::vector<uint32_t> copies;  // t_1, ..., t_d (copy index per hop)

    size_t degree() const { return copies.size(); }
    size_t left_block() const { return blocks.front(); }
    size_t right_block() const { return blocks.back(); }

    friend bool operator<(const Component& a, const Component& b) {
      if (a.blocks != b.blocks) return a.blocks < b.blocks;
      return a.copies < b.copies;
    }
  };

  struct BasisRef {
    size_t degree;
    size_t comp;  // index into components()[degree]
    size_t a, b;  // matrix indices in the left/right blocks
  };

  TensorAlgebra(const F& field, std::vector<size_t> block_sizes,
                std::vector<std::vector<size_t>> mult, size_t truncation,
                size_t max_total_dim = 20000)
      : field_(field), n_(std::move(block_sizes)), mult_(std::move(mult)),
        L_(truncation) {
    size_t s = n_.size();
    components_.resize(L_ + 1);
    for (size_t i = 0; i < s; ++i)
      components_[0].push_back(
          Component{{static_cast<uint32_t>(i)}, {}});
    for (size_t d = 1; d <= L_; ++d)
      for (const auto& c : components_[d - 1]) {
        size_t j = c.right_block();
        for (size_t k = 0; k < s; ++k)
          for (size_t t = 0; t < mult_[j][k]; ++t) {
            Component e = c;
            e.blocks.push_back(static_cast<uint32_t>(k));
            e.copies.push_back(static_cast<uint32_t>(t));
            components_[d].push_back(std::move(e));
          }
      }
    // flat indexing
    size_t idx = 0;
    degree_offsets_.assign(L_ + 2, 0);
    for (size_t d = 0; d <= L_; ++d) {
      degree_offsets_[d] = idx;
      for (size_t c = 0; c < components_[d].size(); ++c) {
        const auto& comp = components_[d][c];
        comp_index_[comp] = {d, c};
        comp_offsets_[{d, c}] = idx;
        idx += n_[comp.left_block()] * n_[comp.right_block()];
      }
    }
    degree_offsets_[L_ + 1] = idx;
    total_dim_ = idx;
    if (total_dim_ > max_total_dim)
      throw OracleLimitError("tensor algebra dimension exceeds the cap");
  }

  const F& field() const { return field_; }
  size_t truncation() const { return L_; }
  size_t total_dim() const { return total_dim_; }
  size_t block_count() const { return n_.size(); }
  const std::vector<size_t>& block_sizes() const { return n_; }
  const std::vector<std::vector<size_t>>& multiplicities() const {
    return mult_;
  }
  const std::vector<Component>& components(size_t degree) const {
    return components_[degree];
  }

  size_t degree_dim(size_t d) const {
    return degree_offsets_[d + 1] - degree_offsets_[d];
  }
  size_t degree_offset(size_t d) const { return degree_offsets_[d]; }

  size_t index_of(size_t degree, size_t comp, size_t a, size_t b) const {
    const auto& c = components_[degree][comp];
    return comp_offsets_.at({degree, comp}) + a * n_[c.right_block()] + b;
  }

  BasisRef ref_of(size_t index) const {
    size_t d = 0;
    while (degree_offsets_[d + 1] <= index) ++d;
    for (size_t c = 0; c < components_[d].size(); ++c) {
      size_t off = comp_offsets_.at({d, c});
      size_t nr = n_[components_[d][c].right_block()];
      size_t nl = n_[components_[d][c].left_block()];
      if (index < off + nl * nr)
        return BasisRef{d, c, (index - off) / nr, (index - off) % nr};
    }
    throw InternalError("basis index out of range");
  }

  // monomial product of two basis elements: the flat index of the result, or
  // nullopt when the product is zero (block mismatch, inner index mismatch,
  // or truncation)
  std::optional<size_t> product_index(size_t x, size_t y) const {
    auto rx = ref_of(x);
    auto ry = ref_of(y);
    const auto& cx = components_[rx.degree][rx.comp];
    const auto& cy = components_[ry.degree][ry.comp];
    if (cx.right_block() != cy.left_block()) return std::nullopt;
    if (rx.b != ry.a) return std::nullopt;
    size_t dd = rx.degree + ry.degree;
    if (dd > L_) return std::nullopt;
    Component merged;
    merged.blocks = cx.blocks;
    merged.blocks.insert(merged.blocks.end(), cy.blocks.begin() + 1,
                         cy.blocks.end());
    merged.copies = cx.copies;
    merged.copies.insert(merged.copies.end(), cy.copies.begin(),
                         cy.copies.end());
    auto it = comp_index_.find(merged);
    check(it != comp_index_.end(), "merged chain must exist below truncation");
    return index_of(dd, it->second.second, rx.a, ry.b);
  }

  std::string label_of(size_t index) const {
    auto r = ref_of(index);
    const auto& c = components_[r.degree][r.comp];
    std::string s;
    if (r.degree == 0) {
      s = "e" + std::to_string(c.blocks[0]);
    } else {
      s = "m";
      for (size_t h = 0; h < c.copies.size(); ++h) {
        s += std::to_string(c.blocks[h]) + "-";
        if (c.copies[h] > 0) s += std::to_string(c.copies[h]) + "-";
      }
      s += std::to_string(c.blocks.back());
    }
    return s + "[" + std::to_string(r.a) + "," + std::to_string(r.b) + "]";
  }

  // full structure-constant presentation (sparse monomial rows)
  Algebra<F> materialize() const {
    std::vector<std::string> labels;
    for (size_t i = 0; i < total_dim_; ++i) labels.push_back(label_of(i));
    std::vector<SparseVec<F>> table(total_dim_ * total_dim_);
    for (size_t x = 0; x < total_dim_; ++x)
      for (size_t y = 0; y < total_dim_; ++y) {
        auto p = product_index(x, y);
        if (p)
          table[x * total_dim_ + y].push_back(
              {static_cast<uint32_t>(*p), field_.one()});
      }
    Vec<F> unit = zero_vec(field_, total_dim_);
    for (size_t c = 0; c < components_[0].size(); ++c) {
      size_t nb = n_[components_[0][c].left_block()];
      for (size_t a = 0; a < nb; ++a) unit[index_of(0, c, a, a)] = field_.one();
    }
    return Algebra<F>(field_, total_dim_, std::move(labels), std::move(table),
                      std::move(unit));
  }

  // degrees as a grading vector aligned with materialize()
  std::vector<size_t> degree_vector() const {
    std::vector<size_t> deg(total_dim_);
    for (size_t d = 0; d <= L_; ++d)
      for (size_t i = degree_offsets_[d]; i < degree_offsets_[d + 1]; ++i)
        deg[i] = d;
    return deg;
  }

  // corner basis through the one-per-block primitive idempotents E^i_00:
  // flat indices of all (chain, 0, 0) elements
  std::vector<size_t> corner_basis_indices() const {
    std::vector<size_t> out;
    for (size_t d = 0; d <= L_; ++d)
      for (size_t c = 0; c < components_[d].size(); ++c)
        out.push_back(index_of(d, c, 0, 0));
    return out;
  }

 private:
  F field_;
  std::vector<size_t> n_;
  std::vector<std::vector<size_t>> mult_;
  size_t L_;
  std::vector<std::vector<Component>> components_;
  std::vector<size_t> degree_offsets_;
  std::map<Component, std::pair<size_t, size_t>> comp_index_;
  std::map<std::pair<size_t, size_t>, size_t> comp_offsets_;
  size_t total_dim_ = 0;
};

// ---------------------------------------------------------------------------
// Naive bimodule tensor product over A0 (independent oracle): plain tensor
// space modulo the middle relations x.s (x) y - x (x) s.y, with induced outer
// actions.
// ---------------------------------------------------------------------------

template <class F>
struct NaiveTensorResult {
  size_t dim = 0;
  BimoduleActions<F> actions;
  CosetSpace<F> structure;  // plain tensor space / middle relations
};

template <class F>
NaiveTensorResult<F> bimodule_tensor(const F& field, const Algebra<F>& s,
                                     const BimoduleActions<F>& m,
                                     const BimoduleActions<F>& n) {
  size_t dm = m.dim, dn = n.dim;
  size_t plain = dm * dn;
  std::vector<Vec<F>> rel;
  for (size_t x = 0; x < dm; ++x)
    for (size_t y = 0; y < dn; ++y)
      for (size_t k = 0; k < s.dim(); ++k) {
        Vec<F> v = zero_vec(field, plain);
        auto xs = m.right[k].apply(unit_vec(field, dm, x));
        auto sy = n.left[k].apply(unit_vec(field, dn, y));
        for (size_t r = 0; r < dm; ++r)
          if (!xs[r].is_zero()) v[r * dn + y] += xs[r];
        for (size_t r = 0; r < dn; ++r)
          if (!sy[r].is_zero()) v[x * dn + r] -= sy[r];
        if (!vec_is_zero<F>(v)) rel.push_back(std::move(v));
      }
  auto w = Subspace<F>::span(field, plain, rel);
  CosetSpace<F> q(Subspace<F>::full(field, plain), w);
  size_t d = q.dim();
  BimoduleActions<F> act;
  act.dim = d;
  for (size_t k = 0; k < s.dim(); ++k) {
    Matrix<F> lm(field, d, d), rm(field, d, d);
    for (size_t c = 0; c < d; ++c) {
      auto rep = q.representative(c);
      Vec<F> lv = zero_vec(field, plain), rv = zero_vec(field, plain);
      for (size_t x = 0; x < dm; ++x)
        for (size_t y = 0; y < dn; ++y) {
          const auto& coef = rep[x * dn + y];
          if (coef.is_zero()) continue;
          auto sx = m.left[k].apply(unit_vec(field, dm, x));
          for (size_t r = 0; r < dm; ++r)
            if (!sx[r].is_zero()) lv[r * dn + y] += coef * sx[r];
          auto ys = n.right[k].apply(unit_vec(field, dn, y));
          for (size_t r = 0; r < dn; ++r)
            if (!ys[r].is_zero()) rv[x * dn + r] += coef * ys[r];
        }
      auto lp = q.project(lv);
      auto rp = q.project(rv);
      for (size_t r = 0; r < d; ++r) {
        lm.at(r, c) = lp[r];
        rm.at(r, c) = rp[r];
      }
    }
    act.left.push_back(std::move(lm));
    act.right.push_back(std::move(rm));
  }
  return NaiveTensorResult<F>{d, std::move(act), std::move(q)};
}

// the regular bimodule of A0 over itself (for M (x) A0 = M style checks)
template <class F>
BimoduleActions<F> regular_bimodule(const Algebra<F>& s) {
  BimoduleActions<F> act;
  act.dim = s.dim();
  for (size_t k = 0; k < s.dim(); ++k) {
    act.left.push_back(s.left_matrix(s.basis_element(k)));
    act.right.push_back(s.right_matrix(s.basis_element(k)));
  }
  return act;
}

}  // namespace natq
