// The A/r-bimodule r/r^2, its block components, bimodule ranks and the
// minimal-generator search oracle.
#pragma once

#include <random>
#include <vector>

#include "natq/wedderburn.hpp"

namespace natq {

// A bimodule over a semisimple algebra S, given by one left and one right
// action matrix per basis element of S.
template <class F>
struct BimoduleActions {
  size_t dim = 0;
  std::vector<Matrix<F>> left;   // left[k] * m = s_k . m
  std::vector<Matrix<F>> right;  // right[k] * m = m . s_k

  Matrix<F> left_of(const F& field, const Vec<F>& s) const {
    Matrix<F> acc(field, dim, dim);
    for (size_t k = 0; k < s.size(); ++k)
      if (!s[k].is_zero())
        for (size_t r = 0; r < dim; ++r)
          for (size_t c = 0; c < dim; ++c)
            acc.at(r, c) += left[k].at(r, c) * s[k];
    return acc;
  }
  Matrix<F> right_of(const F& field, const Vec<F>& s) const {
    Matrix<F> acc(field, dim, dim);
    for (size_t k = 0; k < s.size(); ++k)
      if (!s[k].is_zero())
        for (size_t r = 0; r < dim; ++r)
          for (size_t c = 0; c < dim; ++c)
            acc.at(r, c) += right[k].at(r, c) * s[k];
    return acc;
  }
};

template <class F>
struct RadicalBimodule {
  CosetSpace<F> space;  // r / r^2, cosets inside A
  BimoduleActions<F> actions;
};

// Builds r/r^2 with its induced A/r-actions; the module axioms (unit acts as
// identity, actions compose, sides commute) are verified on basis pairs.
template <class F>
RadicalBimodule<F> radical_bimodule(const Algebra<F>& a,
                                    const RadicalChain<F>& chain,
                                    const Algebra<F>& s,
                                    const CosetSpace<F>& s_proj) {
  const F& field = a.field();
  Subspace<F> r2 = chain.loewy_length >= 2 ? chain.power(2)
                                           : Subspace<F>(field, a.dim());
  CosetSpace<F> cs(chain.rad(), r2);
  size_t d = cs.dim();
  BimoduleActions<F> act;
  act.dim = d;
  for (size_t k = 0; k < s.dim(); ++k) {
    auto rep = s_proj.representative(k);
    Matrix<F> lm(field, d, d), rm(field, d, d);
    for (size_t m = 0; m < d; ++m) {
      auto mv = cs.representative(m);
      auto lcol = cs.project(a.multiply(rep, mv));
      auto rcol = cs.project(a.multiply(mv, rep));
      for (size_t r = 0; r < d; ++r) {
        lm.at(r, m) = lcol[r];
        rm.at(r, m) = rcol[r];
      }
    }
    act.left.push_back(std::move(lm));
    act.right.push_back(std::move(rm));
  }
  // representative independence: r . (r/r^2) and (r/r^2) . r vanish
  for (size_t i = 0; i < chain.rad().dim(); ++i) {
    auto rho = chain.rad().basis_vector(i);
    for (size_t m = 0; m < d; ++m) {
      check(vec_is_zero<F>(cs.project(a.multiply(rho, cs.representative(m)))),
            "left action depends on the representative");
      check(vec_is_zero<F>(cs.project(a.multiply(cs.representative(m), rho))),
            "right action depends on the representative");
    }
  }
  // unit of A/r acts as the identity
  auto u = s.unit();
  check(act.left_of(field, u) == Matrix<F>::identity(field, d) &&
            act.right_of(field, u) == Matrix<F>::identity(field, d),
        "unit action must be the identity");
  // action associativity on basis pairs
  for (size_t i = 0; i < s.dim(); ++i)
    for (size_t j = 0; j < s.dim(); ++j) {
      auto prod = s.multiply(s.basis_element(i), s.basis_element(j));
      check(act.left_of(field, prod) == act.left[i] * act.left[j],
            "left action is not associative");
      check(act.right_of(field, prod) == act.right[j] * act.right[i],
            "right action is not associative");
      check(act.left[i] * act.right[j] == act.right[j] * act.left[i],
            "left and right actions must commute");
    }
  return RadicalBimodule<F>{std::move(cs), std::move(act)};
}

template <class F>
struct BlockComponent {
  size_t i = 0, j = 0;      // e_i . M . e_j
  Subspace<F> basis;        // inside the r/r^2 coordinate space
  size_t dim = 0;
};

template <class F>
BlockComponent<F> block_component(const F& field,
                                  const RadicalBimodule<F>& m,
                                  const WedderburnData<F>& wd, size_t i,
                                  size_t j) {
  auto li = m.actions.left_of(field, wd.blocks[i].central_idempotent);
  auto rj = m.actions.right_of(field, wd.blocks[j].central_idempotent);
  auto both = li * rj;
  std::vector<Vec<F>> image;
  for (size_t c = 0; c < m.actions.dim; ++c)
    image.push_back(both.apply(unit_vec(field, m.actions.dim, c)));
  auto basis = Subspace<F>::span(field, m.actions.dim, image);
  size_t d = basis.dim();
  return BlockComponent<F>{i, j, std::move(basis), d};
}

// rank = least generator count of a semisimple bimodule over a split simple
// pair: ceil(multiplicity / (n_i n_j)) with multiplicity = dim / (n_i n_j)
inline size_t bimodule_rank_from_dims(size_t dim, size_t ni, size_t nj) {
  size_t unit = ni * nj;
  if (dim % unit != 0)
    throw MalformedBimoduleError(
        "component dimension is not divisible by n_i * n_j");
  size_t mult = dim / unit;
  return (mult + unit - 1) / unit;
}

template <class F>
size_t bimodule_rank(const BlockComponent<F>& c, size_t ni, size_t nj) {
  return bimodule_rank_from_dims(c.dim, ni, nj);
}

namespace detail {

// cached action matrices of the two block bases on the bimodule
template <class F>
struct PairActions {
  std::vector<Matrix<F>> left;   // per basis element of block i
  std::vector<Matrix<F>> right;  // per basis element of block j
};

template <class F>
PairActions<F> pair_actions(const F& field, const RadicalBimodule<F>& m,
                            const WedderburnData<F>& wd, size_t i, size_t j) {
  PairActions<F> acts;
  const auto& bi = wd.blocks[i].basis;
  const auto& bj = wd.blocks[j].basis;
  for (size_t u = 0; u < bi.dim(); ++u)
    acts.left.push_back(m.actions.left_of(field, bi.basis_vector(u)));
  for (size_t v = 0; v < bj.dim(); ++v)
    acts.right.push_back(m.actions.right_of(field, bj.basis_vector(v)));
  return acts;
}

// sub-bimodule generated by the given elements of the component
template <class F>
size_t generated_dim(const F& field, const RadicalBimodule<F>& m,
                     const PairActions<F>& acts,
                     const std::vector<Vec<F>>& gens) {
  std::vector<Vec<F>> spanv;
  for (const auto& g : gens)
    for (const auto& la : acts.left) {
      auto lg = la.apply(g);
      for (const auto& ra : acts.right) spanv.push_back(ra.apply(lg));
    }
  return Subspace<F>::span(field, m.actions.dim, spanv).dim();
}

template <class F>
Vec<F> random_component_element(const F& field, const BlockComponent<F>& c,
                                std::mt19937_64& rng) {
  Vec<F> out = zero_vec(field, c.basis.ambient_dim());
  for (size_t r = 0; r < c.basis.dim(); ++r)
    vec_add_scaled<F>(out, c.basis.basis_vector(r), field.random(rng));
  return out;
}

}  // namespace detail

// Exact minimal-generator search: for g = 1, 2, ... try basis tuples, an
// exhaustive sweep when the component is tiny, then seeded random tuples.
// Returns a minimal generating set found.
template <class F>
std::vector<Vec<F>> min_generators_oracle(const F& field,
                                          const RadicalBimodule<F>& m,
                                          const WedderburnData<F>& wd,
                                          const BlockComponent<F>& c,
                                          const Options& opt = {}) {
  if (c.dim > opt.bimodule_oracle_dim)
    throw OracleLimitError("component exceeds the generator-oracle limit");
  if (c.dim == 0) return {};
  std::mt19937_64 rng(opt.seed ^ (c.i * 65537 + c.j * 257 + 11));
  for (size_t g = 1; g <= c.dim; ++g) {
    // deterministic candidates: echelon basis tuples (consecutive windows)
    for (size_t start = 0; start + g <= c.basis.dim(); ++start) {
      std::vector<Vec<F>> gens;
      for (size_t t = 0; t < g; ++t)
        gens.push_back(c.basis.basis_vector(start + t));
      if (detail::generated_dim(field, m, wd, c.i, c.j, gens) == c.dim)
        return gens;
    }
    // exhaustive single-generator sweep over tiny components
    if constexpr (std::is_same_v<F, FpField>) {
      if (g == 1) {
        double total = 1;
        for (size_t t = 0; t < c.basis.dim(); ++t)
          total *= static_cast<double>(field.order());
        if (total <= 4096.0) {
          std::vector<long long> digits(c.basis.dim(), 0);
          while (true) {
            Vec<F> x = zero_vec(field, c.basis.ambient_dim());
            for (size_t t = 0; t < c.basis.dim(); ++t)
              vec_add_scaled<F>(x, c.basis.basis_vector(t),
                                field.from_int(digits[t]));
            if (!vec_is_zero<F>(x) &&
                detail::generated_dim(field, m, wd, c.i, c.j, {x}) == c.dim)
              return {x};
            size_t k = 0;
            while (k < digits.size() && ++digits[k] == field.order())
              digits[k++] = 0;
            if (k == digits.size()) break;
          }
          continue;  // provably no single generator; move to g = 2
        }
      }
    }
    for (size_t trial = 0; trial < opt.generator_trials; ++trial) {
      std::vector<Vec<F>> gens;
      for (size_t t = 0; t < g; ++t)
        gens.push_back(detail::random_component_element(field, c, rng));
      if (detail::generated_dim(field, m, wd, c.i, c.j, gens) == c.dim)
        return gens;
    }
  }
  throw InternalError("the full basis must generate its own span");
}

}  // namespace natq
