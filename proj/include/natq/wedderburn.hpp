// Wedderburn decomposition of a split semisimple algebra: primitive central
// idempotents, recognition of each block as full n x n matrices (with
// explicit matrix-unit preimages), and idempotent lifting modulo the radical.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "natq/polynomial.hpp"
#include "natq/radical.hpp"

namespace natq {

// Minimal polynomial of w inside the unital subalgebra with unit e (powers
// w^0 = e, w, w^2, ... until linear dependence).
template <class F>
Polynomial<F> minimal_polynomial(const Algebra<F>& a, const Vec<F>& w,
                                 const Vec<F>& e) {
  const F& field = a.field();
  std::vector<Vec<F>> powers{e};
  Vec<F> cur = e;
  while (powers.size() <= a.dim() + 1) {
    cur = a.multiply(cur, w);
    size_t k = powers.size();
    Matrix<F> m(field, a.dim(), k + 1);
    for (size_t c = 0; c < k; ++c)
      for (size_t r = 0; r < a.dim(); ++r) m.at(r, c) = powers[c][r];
    for (size_t r = 0; r < a.dim(); ++r) m.at(r, k) = cur[r];
    auto rr = rref(m);
    if (rr.rank == k) {  // new power is dependent: read off the combination
      std::vector<typename F::Elem> coeffs(k + 1, field.zero());
      for (size_t r = 0; r < k; ++r) coeffs[r] = -rr.reduced.at(r, k);
      coeffs[k] = field.one();
      return Polynomial<F>(field, std::move(coeffs));
    }
    powers.push_back(cur);
  }
  throw InternalError("minimal polynomial search exceeded dimension");
}

// evaluation of a polynomial at an algebra element, constant term against e
template <class F>
Vec<F> poly_at_element(const Algebra<F>& a, const Polynomial<F>& g,
                       const Vec<F>& w, const Vec<F>& e) {
  Vec<F> acc = zero_vec(a.field(), a.dim());
  Vec<F> pw = e;
  for (size_t i = 0; i <= static_cast<size_t>(std::max(0L, g.degree()));
       ++i) {
    if (g.is_zero()) break;
    vec_add_scaled<F>(acc, pw, g.coeff(i));
    if (i + 1 <= static_cast<size_t>(g.degree())) pw = a.multiply(pw, w);
  }
  return acc;
}

// The complete list of primitive central idempotents of a split semisimple
// algebra, by spectral refinement against a basis of the center.
template <class F>
std::vector<Vec<F>> central_idempotents(const Algebra<F>& s,
                                        const Options& opt = {}) {
  const F& field = s.field();
  if (!is_semisimple(s, opt))
    throw NotSemisimpleError("central idempotent computation requires a "
                             "semisimple algebra");
  auto z = s.center();
  std::vector<Vec<F>> idems{s.unit()};
  for (size_t t = 0; t < z.dim() && idems.size() < z.dim(); ++t) {
    auto zt = z.basis_vector(t);
    std::vector<Vec<F>> refined;
    for (const auto& e : idems) {
      auto w = s.multiply(e, zt);
      auto g = minimal_polynomial(s, w, e);
      if (g.degree() <= 1) {
        refined.push_back(e);
        continue;
      }
      auto roots = split_roots(g, opt.seed);
      if (!roots)
        throw NonSplitError(
            "a central minimal polynomial has an irreducible factor of "
            "degree >= 2: the algebra is not split over the base field");
      // a central element of a semisimple algebra has squarefree min poly
      for (size_t i = 0; i + 1 < roots->size(); ++i)
        for (size_t j = i + 1; j < roots->size(); ++j)
          if ((*roots)[i] == (*roots)[j])
            throw NotSemisimpleError(
                "repeated root in a central minimal polynomial");
      for (const auto& lam : *roots) {
        // Lagrange projector onto the lam-eigenspace of w in the corner
        Vec<F> proj = e;
        for (const auto& mu : *roots) {
          if (mu == lam) continue;
          Vec<F> num = w;
          vec_add_scaled<F>(num, e, -mu);
          proj = s.multiply(proj, num);
          for (auto& c : proj) c *= (lam - mu).inv();
        }
        if (!vec_is_zero<F>(proj)) refined.push_back(proj);
      }
    }
    idems = std::move(refined);
  }
  check(idems.size() == z.dim(),
        "central idempotent count must equal the center dimension");
  // verify: orthogonal, idempotent, central, summing to the unit
  Vec<F> sum = zero_vec(field, s.dim());
  for (size_t i = 0; i < idems.size(); ++i) {
    vec_add_scaled<F>(sum, idems[i], field.one());
    check(s.multiply(idems[i], idems[i]) == idems[i],
          "central idempotent fails e^2 = e");
    for (size_t j = 0; j < idems.size(); ++j)
      if (i != j)
        check(vec_is_zero<F>(s.multiply(idems[i], idems[j])),
              "central idempotents fail orthogonality");
    for (size_t b = 0; b < s.dim(); ++b) {
      auto bb = s.basis_element(b);
      check(s.multiply(idems[i], bb) == s.multiply(bb, idems[i]),
            "central idempotent fails centrality");
    }
  }
  check(sum == s.unit(), "central idempotents must sum to the unit");
  return idems;
}

namespace detail {

// Splits an idempotent off a non-nilpotent singular element y of a corner
// algebra: with minpoly(y) = t^k h(t), h(0) != 0, the CRT idempotent
// a(y) y^k (a t^k = 1 mod h) projects onto the invertible part of y.
template <class F>
std::optional<Vec<F>> fitting_idempotent(const Algebra<F>& s, const Vec<F>& y,
                                         const Vec<F>& e) {
  const F& field = s.field();
  auto g = minimal_polynomial(s, y, e);
  size_t k = 0;
  while (k < static_cast<size_t>(g.degree()) && g.coeff(k).is_zero()) ++k;
  if (k == 0) return std::nullopt;  // y invertible in the corner
  std::vector<typename F::Elem> hc;
  for (size_t i = k; i <= static_cast<size_t>(g.degree()); ++i)
    hc.push_back(g.coeff(i));
  Polynomial<F> h(field, std::move(hc));
  if (h.degree() == 0) return std::nullopt;  // y nilpotent
  // extended Euclid for a * t^k + b * h = 1
  Polynomial<F> tk = Polynomial<F>::x_power(field, k);
  Polynomial<F> r0 = tk, r1 = h;
  Polynomial<F> a0(field, {field.one()}), a1(field);
  while (!r1.is_zero()) {
    auto [q, r2] = Polynomial<F>::divmod(r0, r1);
    auto a2 = a0 - q * a1;
    r0 = r1;
    r1 = r2;
    a0 = a1;
    a1 = a2;
  }
  check(r0.degree() == 0, "t^k and h must be coprime");
  auto lead = r0.coeff(0).inv();
  std::vector<typename F::Elem> ac;
  for (size_t i = 0; i <= static_cast<size_t>(std::max(0L, a0.degree())); ++i)
    ac.push_back(a0.coeff(i) * lead);
  Polynomial<F> a(field, std::move(ac));
  // eps = a(y) * y^k
  auto ay = poly_at_element(s, a, y, e);
  Vec<F> yk = e;
  for (size_t i = 0; i < k; ++i) yk = s.multiply(yk, y);
  auto eps = s.multiply(ay, yk);
  if (vec_is_zero<F>(eps) || eps == e) return std::nullopt;
  check(s.multiply(eps, eps) == eps, "fitting idempotent fails e^2 = e");
  return eps;
}

}  // namespace detail

// A rank-one (primitive) idempotent inside a split simple block, found by
// seeded random corner descent: each step splits off a proper idempotent via
// an eigenvalue of a random corner element and recurses into its corner.
template <class F>
Vec<F> rank_one_idempotent(const Algebra<F>& s, const Subspace<F>& block,
                           const Vec<F>& block_unit, const Options& opt = {},
                           uint64_t salt = 0) {
  const F& field = s.field();
  std::mt19937_64 rng(opt.seed ^ (salt * 0x9e3779b97f4a7c15ULL + 1));
  Vec<F> e = block_unit;
  std::vector<Vec<F>> corner;
  for (size_t i = 0; i < block.dim(); ++i)
    corner.push_back(block.basis_vector(i));
  auto corner_dim = [&]() {
    return Subspace<F>::span(field, s.dim(), corner).dim();
  };
  size_t cur_dim = corner_dim();
  size_t trials = 0;
  while (cur_dim > 1) {
    if (trials++ > opt.minimal_ideal_trials)
      throw SearchExhaustedError(
          "rank-one idempotent search exhausted its trial budget (is the "
          "block split?)");
    // candidate corner element: basis vectors first, then random mixes
    Vec<F> x = zero_vec(field, s.dim());
    if (trials <= corner.size()) {
      x = corner[trials - 1];
    } else {
      for (const auto& c : corner)
        vec_add_scaled<F>(x, c, field.random(rng));
    }
    if (vec_is_zero<F>(x)) continue;
    auto g = minimal_polynomial(s, x, e);
    std::optional<Vec<F>> eps;
    for (const auto& lam : any_roots(g, opt.seed ^ trials)) {
      Vec<F> y = x;
      vec_add_scaled<F>(y, e, -lam);
      if (vec_is_zero<F>(y)) continue;
      eps = detail::fitting_idempotent(s, y, e);
      if (eps) break;
    }
    if (!eps) continue;
    // descend into the corner eps * C * eps
    std::vector<Vec<F>> next;
    for (const auto& c : corner)
      next.push_back(s.multiply(*eps, s.multiply(c, *eps)));
    auto next_span = Subspace<F>::span(field, s.dim(), next);
    check(next_span.dim() < cur_dim, "corner descent must shrink");
    corner.clear();
    for (size_t i = 0; i < next_span.dim(); ++i)
      corner.push_back(next_span.basis_vector(i));
    e = *eps;
    cur_dim = next_span.dim();
  }
  check(s.multiply(e, e) == e, "descent produced a non-idempotent");
  return e;
}

template <class F>
struct WedderburnBlock {
  Vec<F> central_idempotent;
  Subspace<F> basis;  // the block as a subspace of S
  size_t n = 0;       // block is n x n matrices
  Vec<F> primitive_idempotent;
  // preimages of the matrix units E_ab under the block isomorphism
  std::vector<std::vector<Vec<F>>> matrix_units;
};

template <class F>
struct WedderburnData {
  Algebra<F> semisimple;  // S = A / rad
  std::vector<WedderburnBlock<F>> blocks;

  size_t block_count() const { return blocks.size(); }
};

// a left ideal of minimal dimension n inside a split block, with basis
// adapted so that the primitive idempotent is the first vector
template <class F>
std::vector<Vec<F>> minimal_left_ideal(const Algebra<F>& s,
                                       const Subspace<F>& block,
                                       const Vec<F>& eps) {
  const F& field = s.field();
  std::vector<Vec<F>> gens;
  for (size_t i = 0; i < block.dim(); ++i)
    gens.push_back(s.multiply(block.basis_vector(i), eps));
  auto v = Subspace<F>::span(field, s.dim(), gens);
  // adapted basis: eps spans eps*V, the rest spans (1 - eps)*V
  std::vector<Vec<F>> basis{eps};
  for (size_t i = 0; i < v.dim(); ++i) {
    auto cand = vec_sub<F>(v.basis_vector(i),
                           s.multiply(eps, v.basis_vector(i)));
    if (vec_is_zero<F>(cand)) continue;
    std::vector<Vec<F>> test = basis;
    test.push_back(cand);
    if (Subspace<F>::span(field, s.dim(), test).dim() > basis.size())
      basis.push_back(cand);
  }
  check(basis.size() == v.dim(), "adapted ideal basis incomplete");
  return basis;
}

// Full block data for one primitive central idempotent.
template <class F>
WedderburnBlock<F> block_data(const Algebra<F>& s, const Vec<F>& e,
                              const Options& opt = {}, uint64_t salt = 0) {
  const F& field = s.field();
  WedderburnBlock<F> blk{e, Subspace<F>(field, s.dim()), 0, {}, {}};
  std::vector<Vec<F>> gens;
  for (size_t i = 0; i < s.dim(); ++i)
    gens.push_back(s.multiply(e, s.basis_element(i)));
  blk.basis = Subspace<F>::span(field, s.dim(), gens);
  size_t d = blk.basis.dim();
  size_t n = 0;
  while (n * n < d) ++n;
  if (n * n != d)
    throw NonSplitError("block dimension is not a perfect square");
  blk.n = n;
  {
    // the center of a split block is one-dimensional; commutative extension
    // fields of square dimension are caught here
    Matrix<F> cond(field, d * s.dim(), d);
    for (size_t c = 0; c < d; ++c) {
      auto bc = blk.basis.basis_vector(c);
      for (size_t u = 0; u < d; ++u) {
        auto comm = vec_sub<F>(s.multiply(blk.basis.basis_vector(u), bc),
                               s.multiply(bc, blk.basis.basis_vector(u)));
        for (size_t r = 0; r < s.dim(); ++r)
          cond.at(c * s.dim() + r, u) = comm[r];
      }
    }
    if (kernel_basis(cond).size() != 1)
      throw NonSplitError("block has a center larger than the base field");
  }
  Vec<F> eps;
  try {
    eps = rank_one_idempotent(s, blk.basis, e, opt, salt);
  } catch (const SearchExhaustedError&) {
    throw NonSplitError(
        "no rank-one idempotent found within the trial budget; the block is "
        "presumed to be a division algebra over the base field");
  }
  auto v = minimal_left_ideal(s, blk.basis, eps);
  if (v.size() != n)
    throw NonSplitError("no left ideal of dimension n inside the block");
  auto vspan = Subspace<F>::span(field, s.dim(), v);
  Matrix<F> vmat(field, v.size(), s.dim());
  for (size_t i = 0; i < v.size(); ++i) vmat.set_row(i, v[i]);
  // coordinates in the adapted (non-echelon) basis: solve vmat^T c = x
  auto coords_in_v = [&](const Vec<F>& x) {
    Matrix<F> aug(field, s.dim(), v.size() + 1);
    for (size_t c = 0; c < v.size(); ++c)
      for (size_t r = 0; r < s.dim(); ++r) aug.at(r, c) = v[c][r];
    for (size_t r = 0; r < s.dim(); ++r) aug.at(r, v.size()) = x[r];
    auto rr = rref(aug);
    check(rr.rank == v.size(), "ideal basis degenerate");
    check(std::find(rr.pivot_columns.begin(), rr.pivot_columns.end(),
                    v.size()) == rr.pivot_columns.end(),
          "element outside the minimal left ideal");
    Vec<F> out = zero_vec(field, v.size());
    for (size_t r = 0; r < v.size(); ++r) out[r] = rr.reduced.at(r, v.size());
    return out;
  };
  // representation: left action of block elements on V
  auto rho = [&](const Vec<F>& x) {
    Matrix<F> m(field, n, n);
    for (size_t t = 0; t < n; ++t) {
      auto col = coords_in_v(s.multiply(x, v[t]));
      for (size_t r = 0; r < n; ++r) m.at(r, t) = col[r];
    }
    return m;
  };
  // invert the linear map rho on the block: columns are vec(rho(basis))
  Matrix<F> rep(field, n * n, d);
  for (size_t u = 0; u < d; ++u) {
    auto m = rho(blk.basis.basis_vector(u));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) rep.at(r * n + c, u) = m.at(r, c);
  }
  check(rank(rep) == d, "block representation is not bijective");
  auto solve_unit = [&](size_t a, size_t b) {
    Matrix<F> aug(field, n * n, d + 1);
    for (size_t r = 0; r < n * n; ++r)
      for (size_t c = 0; c < d; ++c) aug.at(r, c) = rep.at(r, c);
    aug.at(a * n + b, d) = field.one();
    auto rr = rref(aug);
    check(rr.rank == d, "matrix unit solve rank");
    Vec<F> coords = zero_vec(field, d);
    for (size_t r = 0; r < d; ++r) coords[r] = rr.reduced.at(r, d);
    Vec<F> out = zero_vec(field, s.dim());
    for (size_t u = 0; u < d; ++u)
      vec_add_scaled<F>(out, blk.basis.basis_vector(u), coords[u]);
    return out;
  };
  blk.matrix_units.assign(n, std::vector<Vec<F>>(n, zero_vec(field, s.dim())));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) blk.matrix_units[a][b] = solve_unit(a, b);
  blk.primitive_idempotent = blk.matrix_units[0][0];
  // verify the matrix-unit relations and the block decomposition
  Vec<F> diag_sum = zero_vec(field, s.dim());
  for (size_t a = 0; a < n; ++a)
    vec_add_scaled<F>(diag_sum, blk.matrix_units[a][a], field.one());
  check(diag_sum == e, "matrix units must sum to the central idempotent");
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        for (size_t dd = 0; dd < n; ++dd) {
          auto prod = s.multiply(blk.matrix_units[a][b],
                                 blk.matrix_units[c][dd]);
          if (b == c)
            check(prod == blk.matrix_units[a][dd], "matrix unit relations");
          else
            check(vec_is_zero<F>(prod), "matrix unit orthogonality");
        }
  return blk;
}

template <class F>
WedderburnData<F> wedderburn(const Algebra<F>& s, const Options& opt = {}) {
  auto idems = central_idempotents(s, opt);
  WedderburnData<F> data{s, {}};
  for (size_t i = 0; i < idems.size(); ++i)
    data.blocks.push_back(block_data(s, idems[i], opt, i));
  std::sort(data.blocks.begin(), data.blocks.end(),
            [](const WedderburnBlock<F>& a, const WedderburnBlock<F>& b) {
              if (a.n != b.n) return a.n < b.n;
              return a.basis.pivots() < b.basis.pivots();
            });
  size_t total = 0;
  for (const auto& b : data.blocks) total += b.n * b.n;
  check(total == s.dim(), "sum of n_i^2 must equal dim(A/r)");
  return data;
}

// ---------------------------------------------------------------------------
// Idempotent lifting along A -> A/r
// ---------------------------------------------------------------------------

template <class F>
struct IdempotentFamily {
  std::vector<Vec<F>> elements;
  bool complete = false;
};

// Lifts a pairwise orthogonal idempotent family of A/r to A. Lifting is
// sequential: Newton iteration e <- 3e^2 - 2e^3, each subsequent
// representative squeezed into the corner (1 - E) A (1 - E) of the lifts
// found so far.
template <class F>
IdempotentFamily<F> lift_idempotents(const Algebra<F>& a,
                                     const std::vector<Vec<F>>& family,
                                     const CosetSpace<F>& proj,
                                     size_t loewy_length) {
  const F& field = a.field();
  size_t iterations = 1;
  {
    size_t covered = 1;
    while (covered < loewy_length) {
      covered *= 2;
      ++iterations;
    }
  }
  IdempotentFamily<F> out;
  Vec<F> lifted_sum = zero_vec(field, a.dim());
  for (const auto& ebar : family) {
    Vec<F> rep = proj.lift(ebar);
    // corner projection keeps orthogonality with previous lifts
    Vec<F> corner = rep;
    {
      Vec<F> one_minus = a.unit();
      vec_add_scaled<F>(one_minus, lifted_sum, -field.one());
      corner = a.multiply(one_minus, a.multiply(rep, one_minus));
    }
    Vec<F> e = corner;
    for (size_t it = 0; it < iterations; ++it) {
      auto e2 = a.multiply(e, e);
      auto e3 = a.multiply(e2, e);
      Vec<F> next = zero_vec(field, a.dim());
      vec_add_scaled<F>(next, e2, field.from_int(3));
      vec_add_scaled<F>(next, e3, field.from_int(-2));
      e = next;
    }
    check(a.multiply(e, e) == e, "lifted element is not idempotent");
    check(proj.project(e) == ebar,
          "lift does not project onto the input idempotent");
    for (const auto& prev : out.elements) {
      check(vec_is_zero<F>(a.multiply(e, prev)) &&
                vec_is_zero<F>(a.multiply(prev, e)),
            "lifted idempotents are not orthogonal");
    }
    vec_add_scaled<F>(lifted_sum, e, field.one());
    out.elements.push_back(std::move(e));
  }
  // complete iff the input family sums to the unit of A/r
  Vec<F> bar_sum = zero_vec(field, family.empty() ? 0 : family[0].size());
  for (const auto& ebar : family) vec_add_scaled<F>(bar_sum, ebar, field.one());
  if (!family.empty() && bar_sum == proj.project(a.unit())) {
    out.complete = true;
    check(lifted_sum == a.unit(), "complete lifted family must sum to 1");
  }
  return out;
}

}  // namespace natq
