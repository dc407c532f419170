// Shared instance builders for the test suites.
#pragma once

#include <random>

#include "natq/constructions.hpp"
#include "natq/random_graded.hpp"

namespace natq::testing {

// GF(p)[x]/(x^3) presented on {1, x, x^2}
inline Algebra<FpField> kx3(long long p) {
  FpField f(p);
  std::vector<std::vector<Vec<FpField>>> prod(
      3, std::vector<Vec<FpField>>(3, zero_vec(f, 3)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j < 3) prod[i][j][i + j] = f.one();
  return Algebra<FpField>::from_dense(f, 3, {"1", "x", "x2"}, prod,
                                      unit_vec(f, 3, 0));
}

inline Algebra<RatField> kx3_rat() {
  RatField f;
  std::vector<std::vector<Vec<RatField>>> prod(
      3, std::vector<Vec<RatField>>(3, zero_vec(f, 3)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j < 3) prod[i][j][i + j] = f.one();
  return Algebra<RatField>::from_dense(f, 3, {"1", "x", "x2"}, prod,
                                       unit_vec(f, 3, 0));
}

// k[x]/(x^2) presented on {1, x}
inline Algebra<FpField> kx2(long long p) {
  FpField f(p);
  std::vector<std::vector<Vec<FpField>>> prod(
      2, std::vector<Vec<FpField>>(2, zero_vec(f, 2)));
  prod[0][0][0] = f.one();
  prod[0][1][1] = f.one();
  prod[1][0][1] = f.one();
  return Algebra<FpField>::from_dense(f, 2, {"1", "x"}, prod,
                                      unit_vec(f, 2, 0));
}

inline Algebra<FpField> a2_path(long long p) {
  FpField f(p);
  QuiverSpec q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  return path_algebra(f, q, {}).algebra;
}

inline QuiverSpec paper_quiver() {
  QuiverSpec q;
  q.vertices = {"1", "2", "3", "2'", "3'"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"a'", 0, 3}, {"b'", 3, 4}};
  return q;
}

// random DAG with forward arrows in a shuffled topological order
inline QuiverSpec random_acyclic_quiver(std::mt19937_64& rng,
                                        size_t max_vertices = 6,
                                        size_t max_arrows = 8) {
  QuiverSpec q;
  size_t nv = 2 + rng() % (max_vertices - 1);
  for (size_t v = 0; v < nv; ++v) q.vertices.push_back(std::to_string(v + 1));
  size_t na = 1 + rng() % max_arrows;
  for (size_t a = 0; a < na; ++a) {
    size_t i = rng() % nv, j = rng() % nv;
    if (i == j) continue;
    QuiverSpec::Arrow ar;
    ar.from = std::min(i, j);
    ar.to = std::max(i, j);
    ar.name = "x" + std::to_string(a);
    q.arrows.push_back(ar);
  }
  if (q.arrows.empty())
    q.arrows.push_back({"x0", 0, nv - 1});
  return q;
}

// random admissible relations: combinations of parallel paths of length >= 2
inline std::vector<PathRelation<FpField>> random_admissible_relations(
    const FpField& field, const QuiverSpec& q, std::mt19937_64& rng,
    size_t count = 2) {
  // enumerate paths of length 2..3 grouped by endpoints
  std::map<std::pair<size_t, size_t>, std::vector<std::vector<size_t>>> by_ends;
  for (size_t a = 0; a < q.arrows.size(); ++a)
    for (size_t b = 0; b < q.arrows.size(); ++b) {
      if (q.arrows[a].to != q.arrows[b].from) continue;
      by_ends[{q.arrows[a].from, q.arrows[b].to}].push_back({a, b});
      for (size_t c = 0; c < q.arrows.size(); ++c) {
        if (q.arrows[b].to != q.arrows[c].from) continue;
        by_ends[{q.arrows[a].from, q.arrows[c].to}].push_back({a, b, c});
      }
    }
  std::vector<PathRelation<FpField>> rels;
  std::vector<const std::vector<std::vector<size_t>>*> groups;
  for (auto& [ends, g] : by_ends) groups.push_back(&g);
  if (groups.empty()) return rels;
  for (size_t k = 0; k < count; ++k) {
    const auto& g = *groups[rng() % groups.size()];
    PathRelation<FpField> rel;
    size_t terms = 1 + rng() % std::min<size_t>(g.size(), 2);
    for (size_t t = 0; t < terms; ++t)
      rel.terms.push_back(
          {field.random_unit(rng), g[rng() % g.size()]});
    rels.push_back(std::move(rel));
  }
  return rels;
}

// random profile for the graded generator; block sizes drawn from `pool`
inline GradedProfile random_profile(std::mt19937_64& rng,
                                    std::vector<size_t> pool,
                                    size_t max_blocks, size_t max_mult,
                                    size_t max_trunc) {
  GradedProfile prof;
  size_t nb = 1 + rng() % max_blocks;
  for (size_t b = 0; b < nb; ++b)
    prof.block_sizes.push_back(pool[rng() % pool.size()]);
  prof.multiplicities.assign(nb, std::vector<size_t>(nb, 0));
  size_t entries = 1 + rng() % (nb * nb);
  for (size_t e = 0; e < entries; ++e)
    prof.multiplicities[rng() % nb][rng() % nb] = rng() % (max_mult + 1);
  bool any = false;
  for (auto& row : prof.multiplicities)
    for (auto m : row) any = any || m > 0;
  if (!any) prof.multiplicities[0][0] = 1;
  prof.truncation = 2 + rng() % (max_trunc - 1);
  prof.kernel_generators_per_degree = rng() % 3;
  return prof;
}

}  // namespace natq::testing
