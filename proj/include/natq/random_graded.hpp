// Seeded generator of radical-graded algebras: a truncated tensor algebra
// over a chosen semisimple base modulo a random graded ideal supported in
// degrees >= 2.
#pragma once

#include <random>

#include "natq/graded.hpp"
#include "natq/tensor_algebra.hpp"

namespace natq {

struct GradedProfile {
  std::vector<size_t> block_sizes;
  std::vector<std::vector<size_t>> multiplicities;  // of r/r^2 components
  size_t truncation = 2;
  // random ideal generators drawn per degree d in [2, truncation]
  size_t kernel_generators_per_degree = 1;
};

template <class F>
struct RandomGradedResult {
  GradedAlgebra<F> graded;
  std::vector<size_t> block_sizes;
  std::vector<std::vector<size_t>> multiplicities;
  std::vector<size_t> kernel_dims;  // of the quotient ideal, per degree
};

template <class F>
RandomGradedResult<F> random_radical_graded(const F& field,
                                            const GradedProfile& profile,
                                            uint64_t seed) {
  TensorAlgebra<F> t(field, profile.block_sizes, profile.multiplicities,
                     profile.truncation);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xdeadbeef);
  size_t L = profile.truncation;

  // random homogeneous generators in degrees >= 2
  std::vector<std::vector<Vec<F>>> gens(L + 1);
  for (size_t d = 2; d <= L; ++d) {
    size_t dd = t.degree_dim(d);
    if (dd == 0) continue;
    for (size_t k = 0; k < profile.kernel_generators_per_degree; ++k) {
      Vec<F> v = zero_vec(field, dd);
      bool nonzero = false;
      for (size_t i = 0; i < dd; ++i) {
        v[i] = field.random(rng);
        nonzero = nonzero || !v[i].is_zero();
      }
      if (nonzero) gens[d].push_back(std::move(v));
    }
  }

  // multiply a homogeneous vector (in degree-d flat coordinates) by a basis
  // element on either side, landing in degree d + deg(basis elem)
  auto mult_side = [&](size_t d, const Vec<F>& v, size_t other_index,
                       bool left) -> std::pair<size_t, Vec<F>> {
    auto ro = t.ref_of(other_index);
    size_t dd = d + ro.degree;
    Vec<F> out = zero_vec(field, dd <= L ? t.degree_dim(dd) : 0);
    if (dd > L) return {dd, out};
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      size_t flat = t.degree_offset(d) + i;
      auto prod = left ? t.product_index(other_index, flat)
                       : t.product_index(flat, other_index);
      if (prod) out[*prod - t.degree_offset(dd)] += v[i];
    }
    return {dd, out};
  };

  // close under the ideal operations: degree-0 action on both sides and
  // degree-1 multiplication pushing up one degree
  std::vector<Subspace<F>> kernel;
  for (size_t d = 0; d <= L; ++d)
    kernel.emplace_back(Subspace<F>::span(field, t.degree_dim(d), gens[d]));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t d = 2; d <= L; ++d) {
      std::vector<Vec<F>> extra;
      for (size_t r = 0; r < kernel[d].dim(); ++r) {
        auto v = kernel[d].basis_vector(r);
        for (size_t other = 0; other < t.degree_offset(2); ++other) {
          for (bool left : {true, false}) {
            auto [dd, w] = mult_side(d, v, other, left);
            if (dd > L || vec_is_zero<F>(w)) continue;
            if (!kernel[dd].contains(w)) {
              if (dd == d)
                extra.push_back(std::move(w));
              else {
                std::vector<Vec<F>> rows{w};
                for (size_t k = 0; k < kernel[dd].dim(); ++k)
                  rows.push_back(kernel[dd].basis_vector(k));
                kernel[dd] = Subspace<F>::span(field, t.degree_dim(dd), rows);
                changed = true;
              }
            }
          }
        }
      }
      if (!extra.empty()) {
        for (size_t k = 0; k < kernel[d].dim(); ++k)
          extra.push_back(kernel[d].basis_vector(k));
        auto bigger = Subspace<F>::span(field, t.degree_dim(d), extra);
        if (bigger.dim() != kernel[d].dim()) {
          kernel[d] = std::move(bigger);
          changed = true;
        }
      }
    }
  }

  // quotient presentation, degree by degree
  std::vector<CosetSpace<F>> layers;
  std::vector<size_t> offset(L + 2, 0);
  std::vector<size_t> degree;
  std::vector<std::string> labels;
  size_t total = 0;
  for (size_t d = 0; d <= L; ++d) {
    layers.emplace_back(Subspace<F>::full(field, t.degree_dim(d)), kernel[d]);
    offset[d] = total;
    total += layers[d].dim();
    for (size_t k = 0; k < layers[d].dim(); ++k) {
      degree.push_back(d);
      labels.push_back("q" + std::to_string(d) + "_" + std::to_string(k));
    }
  }
  offset[L + 1] = total;

  auto project_flat = [&](size_t d, const Vec<F>& v) {
    return layers[d].project(v);
  };
  std::vector<SparseVec<F>> table(total * total);
  for (size_t d1 = 0; d1 <= L; ++d1)
    for (size_t k1 = 0; k1 < layers[d1].dim(); ++k1) {
      auto x = layers[d1].representative(k1);
      for (size_t d2 = 0; d2 <= L; ++d2) {
        size_t dd = d1 + d2;
        for (size_t k2 = 0; k2 < layers[d2].dim(); ++k2) {
          SparseVec<F> row;
          if (dd <= L) {
            auto y = layers[d2].representative(k2);
            Vec<F> prod = zero_vec(field, t.degree_dim(dd));
            for (size_t i = 0; i < x.size(); ++i) {
              if (x[i].is_zero()) continue;
              for (size_t j = 0; j < y.size(); ++j) {
                if (y[j].is_zero()) continue;
                auto p = t.product_index(t.degree_offset(d1) + i,
                                         t.degree_offset(d2) + j);
                if (p) prod[*p - t.degree_offset(dd)] += x[i] * y[j];
              }
            }
            auto pc = project_flat(dd, prod);
            for (size_t r = 0; r < pc.size(); ++r)
              if (!pc[r].is_zero())
                row.push_back(
                    {static_cast<uint32_t>(offset[dd] + r), pc[r]});
          }
          table[(offset[d1] + k1) * total + (offset[d2] + k2)] =
              std::move(row);
        }
      }
    }
  Vec<F> unit = zero_vec(field, total);
  {
    Vec<F> u0 = zero_vec(field, t.degree_dim(0));
    for (size_t c = 0; c < t.components(0).size(); ++c) {
      size_t nb = profile.block_sizes[t.components(0)[c].left_block()];
      for (size_t a = 0; a < nb; ++a)
        u0[t.index_of(0, c, a, a) - t.degree_offset(0)] = field.one();
    }
    auto pc = project_flat(0, u0);
    for (size_t r = 0; r < pc.size(); ++r) unit[offset[0] + r] = pc[r];
  }

  Algebra<F> alg(field, total, std::move(labels), std::move(table),
                 std::move(unit));
  check(alg.validate().ok(), "random graded instance must validate");
  size_t maxdeg = 0;
  for (size_t d : degree) maxdeg = std::max(maxdeg, d);
  GradedAlgebra<F> g{std::move(alg), std::move(degree), maxdeg};
  check(is_radical_graded(g), "random graded instance must be radical-graded");
  std::vector<size_t> kdims;
  for (size_t d = 0; d <= L; ++d) kdims.push_back(kernel[d].dim());
  return RandomGradedResult<F>{std::move(g), profile.block_sizes,
                               profile.multiplicities, std::move(kdims)};
}

}  // namespace natq
