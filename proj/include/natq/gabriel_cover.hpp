// The generalized Gabriel cover: T(A/r, r/r^2) truncated at the Loewy
// length, the degree-wise surjections f_m(x1 (x) ... (x) xm) = x1...xm onto
// r^m/r^{m+1}, kernel bookkeeping, and the radical-graded verdict.
#pragma once

#include <vector>

#include "natq/graded.hpp"
#include "natq/tensor_algebra.hpp"

namespace natq {

// Adapted decomposition of r/r^2 into canonical simple-summand form: per
// block pair (i, j) a basis w_{t,a,b} = E^i_{a0} . v_t . E^j_{0b} built from
// a basis v_t of the primitive-idempotent corner. The map phi from canonical
// coordinates onto r/r^2 is a certified bimodule isomorphism.
template <class F>
struct CanonicalBimodule {
  std::vector<std::vector<size_t>> mult;  // multiplicity per (i, j)
  // canonical basis vectors in r/r^2 coordinates, ordered to match the
  // degree-1 layout of TensorAlgebra built on `mult`
  Matrix<F> phi;  // (dim M) x (dim M)
};

template <class F>
CanonicalBimodule<F> canonicalize_bimodule(const Analysis<F>& an) {
  const F& field = an.algebra.field();
  const auto& m = an.bimodule;
  const auto& wd = an.wd;
  size_t s = wd.block_count();
  size_t dm = m.actions.dim;

  CanonicalBimodule<F> out{std::vector<std::vector<size_t>>(
                               s, std::vector<size_t>(s, 0)),
                           Matrix<F>(field, dm, dm)};
  // corner bases per pair
  std::vector<std::vector<std::vector<Vec<F>>>> w(s);
  for (size_t i = 0; i < s; ++i) {
    w[i].resize(s);
    for (size_t j = 0; j < s; ++j) {
      auto li = m.actions.left_of(field, wd.blocks[i].primitive_idempotent);
      auto rj = m.actions.right_of(field, wd.blocks[j].primitive_idempotent);
      auto corner = li * rj;
      std::vector<Vec<F>> image;
      for (size_t c = 0; c < dm; ++c)
        image.push_back(corner.apply(unit_vec(field, dm, c)));
      auto v = Subspace<F>::span(field, dm, image);
      size_t ni = wd.blocks[i].n, nj = wd.blocks[j].n;
      check(an.components[i][j].dim % (ni * nj) == 0 &&
                v.dim() == an.components[i][j].dim / (ni * nj),
            "corner dimension must equal the simple-summand multiplicity");
      out.mult[i][j] = v.dim();
      for (size_t t = 0; t < v.dim(); ++t) {
        for (size_t a = 0; a < ni; ++a)
          for (size_t b = 0; b < nj; ++b) {
            auto la =
                m.actions.left_of(field, wd.blocks[i].matrix_units[a][0]);
            auto rb =
                m.actions.right_of(field, wd.blocks[j].matrix_units[0][b]);
            w[i][j].push_back(rb.apply(la.apply(v.basis_vector(t))));
          }
      }
    }
  }
  // lay the columns out exactly like the tensor algebra's degree-1 basis
  TensorAlgebra<F> probe(field, an.block_sizes(), out.mult, 1);
  check(probe.degree_dim(1) == dm,
        "canonical layout dimension must match r/r^2");
  std::vector<size_t> used(s * s, 0);
  for (size_t c = 0; c < probe.components(1).size(); ++c) {
    const auto& comp = probe.components(1)[c];
    size_t i = comp.left_block(), j = comp.right_block();
    size_t t = comp.copies[0];
    size_t ni = wd.blocks[i].n, nj = wd.blocks[j].n;
    for (size_t a = 0; a < ni; ++a)
      for (size_t b = 0; b < nj; ++b) {
        size_t flat = probe.index_of(1, c, a, b) - probe.degree_offset(1);
        const auto& col = w[i][j][(t * ni + a) * nj + b];
        for (size_t r = 0; r < dm; ++r) out.phi.at(r, flat) = col[r];
      }
    (void)used;
  }
  check(rank(out.phi) == dm,
        "canonical decomposition must be a bijection onto r/r^2");
  // equivariance spot-check: left action of matrix units permutes rows
  for (size_t c = 0; c < probe.components(1).size(); ++c) {
    const auto& comp = probe.components(1)[c];
    size_t i = comp.left_block(), j = comp.right_block();
    size_t ni = wd.blocks[i].n, nj = wd.blocks[j].n;
    for (size_t p = 0; p < ni; ++p)
      for (size_t q = 0; q < ni; ++q) {
        auto act = m.actions.left_of(field, wd.blocks[i].matrix_units[p][q]);
        for (size_t a = 0; a < ni; ++a)
          for (size_t b = 0; b < nj; ++b) {
            Vec<F> col = zero_vec(field, dm);
            for (size_t r = 0; r < dm; ++r)
              col[r] = out.phi.at(
                  r, probe.index_of(1, c, a, b) - probe.degree_offset(1));
            auto lhs = act.apply(col);
            Vec<F> rhs = zero_vec(field, dm);
            if (q == a)
              for (size_t r = 0; r < dm; ++r)
                rhs[r] = out.phi.at(
                    r, probe.index_of(1, c, p, b) - probe.degree_offset(1));
            check(lhs == rhs, "canonical basis is not equivariant");
          }
      }
  }
  return out;
}

struct CoverReport {
  bool verdict = false;
  size_t loewy_length = 0;
  std::vector<size_t> degree_dims;
  std::vector<size_t> kernel_dims;
  size_t s_lower = 0;         // degree witness for J^s inside <rho>
  bool containment_in_J = false;  // kernel trivial in degrees 0 and 1
  bool surjective = false;
  bool multiplicative = false;
  bool dims_account = false;  // sum of (dim_m - ker_m) equals dim A
};

template <class F>
struct CoverData {
  TensorAlgebra<F> tensor;
  std::vector<Matrix<F>> f;        // per degree, into r^d/r^{d+1} coords
  std::vector<CosetSpace<F>> layers;
  CoverReport report;
};

// Core construction for any algebra: builds T(A/r, r/r^2) truncated at
// rl(A) and the degree-wise maps onto the graded pieces of A. All claims
// (surjectivity, multiplicativity, dimension bookkeeping) are checked
// explicitly and recorded in the report.
template <class F>
CoverData<F> cover_core(const Analysis<F>& an) {
  const F& field = an.algebra.field();
  size_t s = an.chain.loewy_length;
  auto canon = canonicalize_bimodule(an);
  TensorAlgebra<F> t(field, an.block_sizes(), canon.mult, s);

  std::vector<CosetSpace<F>> layers;
  layers.push_back(an.s_proj);
  if (s >= 2) layers.push_back(an.bimodule.space);  // r / r^2 verbatim
  for (size_t d = 2; d < s; ++d)
    layers.emplace_back(an.chain.power(d), an.chain.power(d + 1));

  auto layer_dim = [&](size_t d) {
    return d < s ? layers[d].dim() : size_t{0};
  };

  std::vector<Matrix<F>> f;
  // degree 0: matrix units of A/r
  {
    Matrix<F> f0(field, layer_dim(0), t.degree_dim(0));
    for (size_t c = 0; c < t.components(0).size(); ++c) {
      size_t blk = t.components(0)[c].left_block();
      size_t nb = an.wd.blocks[blk].n;
      for (size_t a = 0; a < nb; ++a)
        for (size_t b = 0; b < nb; ++b) {
          const auto& col = an.wd.blocks[blk].matrix_units[a][b];
          size_t flat = t.index_of(0, c, a, b) - t.degree_offset(0);
          for (size_t r = 0; r < layer_dim(0); ++r) f0.at(r, flat) = col[r];
        }
    }
    check(rank(f0) == layer_dim(0), "degree-0 identification must be onto");
    f.push_back(std::move(f0));
  }
  if (s >= 2) f.push_back(canon.phi);
  for (size_t d = 2; d <= t.truncation(); ++d) {
    Matrix<F> fd(field, layer_dim(d), t.degree_dim(d));
    for (size_t c = 0; c < t.components(d).size(); ++c) {
      const auto& comp = t.components(d)[c];
      // split the chain as (first d-1 hops) * (last hop)
      typename TensorAlgebra<F>::Component head, tail;
      head.blocks.assign(comp.blocks.begin(), comp.blocks.end() - 1);
      head.copies.assign(comp.copies.begin(), comp.copies.end() - 1);
      tail.blocks = {comp.blocks[comp.blocks.size() - 2], comp.blocks.back()};
      tail.copies = {comp.copies.back()};
      size_t head_comp = SIZE_MAX, tail_comp = SIZE_MAX;
      for (size_t k = 0; k < t.components(d - 1).size(); ++k)
        if (!(t.components(d - 1)[k] < head) && !(head < t.components(d - 1)[k]))
          head_comp = k;
      for (size_t k = 0; k < t.components(1).size(); ++k)
        if (!(t.components(1)[k] < tail) && !(tail < t.components(1)[k]))
          tail_comp = k;
      check(head_comp != SIZE_MAX && tail_comp != SIZE_MAX,
            "chain split must exist");
      size_t nl = an.wd.blocks[comp.left_block()].n;
      size_t nr = an.wd.blocks[comp.right_block()].n;
      for (size_t a = 0; a < nl; ++a)
        for (size_t b = 0; b < nr; ++b) {
          size_t flat = t.index_of(d, c, a, b) - t.degree_offset(d);
          if (d >= s) continue;  // target is zero
          // f(head(a,0)) in r^{d-1}/r^d, f(tail(0,b)) in r/r^2
          size_t hflat =
              t.index_of(d - 1, head_comp, a, 0) - t.degree_offset(d - 1);
          size_t tflat = t.index_of(1, tail_comp, 0, b) - t.degree_offset(1);
          Vec<F> hcol = zero_vec(field, layer_dim(d - 1));
          for (size_t r = 0; r < layer_dim(d - 1); ++r)
            hcol[r] = f[d - 1].at(r, hflat);
          Vec<F> tcol = zero_vec(field, layer_dim(1));
          for (size_t r = 0; r < layer_dim(1); ++r)
            tcol[r] = f[1].at(r, tflat);
          auto prod = an.algebra.multiply(layers[d - 1].lift(hcol),
                                          layers[1].lift(tcol));
          auto proj = layers[d].project(prod);
          for (size_t r = 0; r < layer_dim(d); ++r) fd.at(r, flat) = proj[r];
        }
    }
    f.push_back(std::move(fd));
  }

  CoverReport rep;
  rep.loewy_length = s;
  rep.s_lower = s;
  rep.surjective = true;
  rep.dims_account = true;
  size_t covered = 0;
  for (size_t d = 0; d <= t.truncation(); ++d) {
    rep.degree_dims.push_back(t.degree_dim(d));
    size_t rk = d < f.size() ? rank(f[d]) : 0;
    if (d < s && rk != layer_dim(d)) rep.surjective = false;
    rep.kernel_dims.push_back(t.degree_dim(d) - rk);
    covered += rk;
  }
  rep.dims_account = covered == an.algebra.dim();
  rep.containment_in_J =
      rep.kernel_dims[0] == 0 && (s < 2 || rep.kernel_dims[1] == 0);

  // multiplicativity of f on every basis pair
  rep.multiplicative = true;
  auto lift_image = [&](size_t flat_index) {
    auto r = t.ref_of(flat_index);
    size_t d = r.degree;
    if (d >= s) return zero_vec(field, an.algebra.dim());
    Vec<F> col = zero_vec(field, layer_dim(d));
    for (size_t row = 0; row < layer_dim(d); ++row)
      col[row] = f[d].at(row, flat_index - t.degree_offset(d));
    return layers[d].lift(col);
  };
  for (size_t x = 0; x < t.total_dim() && rep.multiplicative; ++x) {
    auto rx = t.ref_of(x);
    auto px = lift_image(x);
    for (size_t y = 0; y < t.total_dim(); ++y) {
      auto ry = t.ref_of(y);
      size_t dd = rx.degree + ry.degree;
      auto prod = an.algebra.multiply(px, lift_image(y));
      if (dd >= s) {
        if (!vec_is_zero<F>(prod)) {
          rep.multiplicative = false;
          break;
        }
        continue;
      }
      auto proj = layers[dd].project(prod);
      auto pidx = t.product_index(x, y);
      Vec<F> expected = zero_vec(field, layer_dim(dd));
      if (pidx) {
        for (size_t row = 0; row < layer_dim(dd); ++row)
          expected[row] = f[dd].at(row, *pidx - t.degree_offset(dd));
      }
      if (proj != expected) {
        rep.multiplicative = false;
        break;
      }
    }
  }

  rep.verdict = rep.surjective && rep.multiplicative && rep.dims_account &&
                rep.containment_in_J;
  return CoverData<F>{std::move(t), std::move(f), std::move(layers),
                      std::move(rep)};
}

// Cover of a radical-graded algebra presented with its grading.
template <class F>
CoverData<F> gabriel_cover_graded(const GradedAlgebra<F>& g,
                                  const Options& opt = {}) {
  if (!is_radical_graded(g, opt))
    throw NotRadicalGradedError("supplied grading fails the radical-graded "
                                "predicate");
  auto an = analyze(g.presentation, opt);
  return cover_core(an);
}

// Cover applied to gr A (always radical-graded).
template <class F>
CoverData<F> gabriel_cover_of_gr(const Algebra<F>& a, const Options& opt = {}) {
  auto g = associated_graded(a, opt);
  auto an = analyze(g.presentation, opt);
  return cover_core(an);
}

}  // namespace natq
