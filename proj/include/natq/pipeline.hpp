// End-to-end analysis of one algebra: validation, radical chain, semisimple
// quotient, Wedderburn data, the r/r^2 bimodule with its block components,
// and both quivers.
#pragma once

#include <vector>

#include "natq/bimodule.hpp"
#include "natq/quiver.hpp"

namespace natq {

template <class F>
struct Analysis {
  Algebra<F> algebra;
  RadicalChain<F> chain;
  Algebra<F> semisimple;   // A / r
  CosetSpace<F> s_proj;    // A -> A / r
  WedderburnData<F> wd;
  RadicalBimodule<F> bimodule;
  std::vector<std::vector<BlockComponent<F>>> components;  // [i][j]
  Quiver natural;
  Quiver ordinary;

  size_t block_count() const { return wd.block_count(); }
  std::vector<size_t> block_sizes() const {
    std::vector<size_t> out;
    for (const auto& b : wd.blocks) out.push_back(b.n);
    return out;
  }
  bool basic() const {
    for (const auto& b : wd.blocks)
      if (b.n != 1) return false;
    return true;
  }
};

template <class F>
Analysis<F> analyze(const Algebra<F>& a, const Options& opt = {}) {
  const F& field = a.field();
  auto report = a.validate();
  if (!report.ok())
    throw ValidationError(
        report.unital ? "structure constants are not associative"
                      : "declared unit fails the unit law");
  auto chain = radical_chain(a, opt);
  auto quot = quotient_algebra(a, chain.rad());
  auto wd = wedderburn(quot.algebra, opt);
  auto m = radical_bimodule(a, chain, quot.algebra, quot.projection);

  size_t s = wd.block_count();
  std::vector<std::vector<BlockComponent<F>>> comps;
  size_t dim_sum = 0;
  for (size_t i = 0; i < s; ++i) {
    comps.emplace_back();
    for (size_t j = 0; j < s; ++j) {
      comps[i].push_back(block_component(field, m, wd, i, j));
      dim_sum += comps[i][j].dim;
    }
  }
  check(dim_sum == m.actions.dim,
        "block components must give a direct sum decomposition of r/r^2");

  auto sizes = [&] {
    std::vector<size_t> out;
    for (const auto& b : wd.blocks) out.push_back(b.n);
    return out;
  }();

  // natural quiver: t_{ij} = rank of e_j . M . e_i (arrows i -> j live in
  // the (j, i) corner under function-style composition)
  Quiver nat = make_quiver(sizes);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j)
      nat.arrows[i][j] =
          bimodule_rank(comps[j][i], wd.blocks[j].n, wd.blocks[i].n);

  // ordinary quiver: m_{ij} = dim eps_j . M . eps_i via primitive idempotent
  // corners, cross-checked against dim(component) / (n_i n_j)
  Quiver ord = make_quiver(sizes);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      auto lj = m.actions.left_of(field, wd.blocks[j].primitive_idempotent);
      auto ri = m.actions.right_of(field, wd.blocks[i].primitive_idempotent);
      auto corner = lj * ri;
      std::vector<Vec<F>> image;
      for (size_t c = 0; c < m.actions.dim; ++c)
        image.push_back(corner.apply(unit_vec(field, m.actions.dim, c)));
      size_t corner_dim =
          Subspace<F>::span(field, m.actions.dim, image).dim();
      size_t unit = wd.blocks[i].n * wd.blocks[j].n;
      check(comps[j][i].dim % unit == 0 &&
                corner_dim == comps[j][i].dim / unit,
            "idempotent corner disagrees with component dimension");
      ord.arrows[i][j] = corner_dim;
    }

  return Analysis<F>{a,
                     std::move(chain),
                     std::move(quot.algebra),
                     std::move(quot.projection),
                     std::move(wd),
                     std::move(m),
                     std::move(comps),
                     std::move(nat),
                     std::move(ord)};
}

template <class F>
Quiver natural_quiver(const Algebra<F>& a, const Options& opt = {}) {
  return analyze(a, opt).natural;
}

template <class F>
Quiver ordinary_quiver(const Algebra<F>& a, const Options& opt = {}) {
  return analyze(a, opt).ordinary;
}

}  // namespace natq
