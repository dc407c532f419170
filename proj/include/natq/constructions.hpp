// Instance factory: path algebras with relations, matrix / product /
// triangular algebras, skew group algebras, and the flagship skew-group
// example with its expected invariants.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "natq/pipeline.hpp"

namespace natq {

struct QuiverSpec {
  struct Arrow {
    std::string name;
    size_t from = 0, to = 0;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  bool has_cycle() const {
    size_t n = vertices.size();
    std::vector<std::vector<size_t>> adj(n);
    for (const auto& a : arrows) adj[a.from].push_back(a.to);
    std::vector<int> state(n, 0);
    std::vector<size_t> stack;
    for (size_t root = 0; root < n; ++root) {
      if (state[root]) continue;
      stack.push_back(root);
      std::vector<size_t> path;
      // iterative DFS with explicit colors
      std::vector<std::pair<size_t, size_t>> frames{{root, 0}};
      state[root] = 1;
      while (!frames.empty()) {
        auto& [v, it] = frames.back();
        if (it < adj[v].size()) {
          size_t w = adj[v][it++];
          if (state[w] == 1) return true;
          if (state[w] == 0) {
            state[w] = 1;
            frames.push_back({w, 0});
          }
        } else {
          state[v] = 2;
          frames.pop_back();
        }
      }
    }
    return false;
  }
};

// A path stored by its traversal order (first arrow traversed first);
// products compose function-style, so p * q traverses q before p.
struct Path {
  size_t start = 0, end = 0;
  std::vector<size_t> arrows;  // arrow ids in traversal order

  friend bool operator==(const Path& a, const Path& b) {
    return a.start == b.start && a.arrows == b.arrows;
  }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size())
      return a.arrows.size() < b.arrows.size();
    if (a.start != b.start) return a.start < b.start;
    return a.arrows < b.arrows;
  }
};

inline std::string path_label(const QuiverSpec& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.start];
  std::string s;
  for (size_t k = p.arrows.size(); k-- > 0;) s += q.arrows[p.arrows[k]].name;
  return s;
}

template <class F>
struct PathRelation {
  // terms: coefficient and arrow traversal (length >= 1)
  std::vector<std::pair<typename F::Elem, std::vector<size_t>>> terms;
};

template <class F>
struct PathAlgebraResult {
  Algebra<F> algebra;
  QuiverSpec quiver;
  std::vector<Path> paths;  // basis paths of the ambient truncated kQ
  CosetSpace<F> projection; // ambient path space -> the quotient
};

template <class F>
PathAlgebraResult<F> path_algebra(const F& field, const QuiverSpec& q,
                                  const std::vector<PathRelation<F>>& relations,
                                  std::optional<size_t> max_len = {}) {
  if (!max_len && q.has_cycle())
    throw InfiniteDimensionError(
        "cyclic quiver needs a length truncation to stay finite-dimensional");
  // enumerate paths by length
  std::vector<Path> paths;
  std::vector<Path> frontier;
  for (size_t v = 0; v < q.vertices.size(); ++v) {
    paths.push_back(Path{v, v, {}});
    frontier.push_back(paths.back());
  }
  size_t len = 0;
  while (!frontier.empty()) {
    ++len;
    if (max_len && len > *max_len) break;
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].from == p.end) {
          Path e = p;
          e.arrows.push_back(a);
          e.end = q.arrows[a].to;
          next.push_back(std::move(e));
        }
    for (const auto& p : next) paths.push_back(p);
    frontier = std::move(next);
  }
  std::sort(paths.begin(), paths.end());
  std::map<std::vector<size_t>, size_t> index_by_traversal;
  std::map<size_t, size_t> vertex_path;  // vertex -> index of e_v
  for (size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].arrows.empty())
      vertex_path[paths[i].start] = i;
    else
      index_by_traversal[paths[i].arrows] = i;
  }
  size_t dim = paths.size();

  auto traversal_endpoints = [&](const std::vector<size_t>& tr)
      -> std::optional<std::pair<size_t, size_t>> {
    if (tr.empty()) return std::nullopt;
    size_t start = q.arrows[tr[0]].from;
    size_t cur = start;
    for (size_t a : tr) {
      if (q.arrows[a].from != cur) return std::nullopt;
      cur = q.arrows[a].to;
    }
    return std::make_pair(start, cur);
  };

  // ideal spanned by all sandwiches p * rel * q, truncated at the length cap
  std::vector<Vec<F>> ideal_rows;
  for (const auto& rel : relations) {
    if (rel.terms.empty()) continue;
    std::optional<std::pair<size_t, size_t>> ends;
    for (const auto& [c, tr] : rel.terms) {
      auto e = traversal_endpoints(tr);
      if (!e) throw ParseError("relation term is not a composable path");
      if (ends && *ends != *e)
        throw ParseError("relation is not uniform (start/end differ)");
      ends = e;
    }
    for (const auto& right : paths) {   // q: traversed first
      if (right.end != ends->first) continue;
      for (const auto& left : paths) {  // p: traversed last
        if (left.start != ends->second) continue;
        Vec<F> row = zero_vec(field, dim);
        bool nonzero = false;
        for (const auto& [c, tr] : rel.terms) {
          std::vector<size_t> full = right.arrows;
          full.insert(full.end(), tr.begin(), tr.end());
          full.insert(full.end(), left.arrows.begin(), left.arrows.end());
          if (max_len && full.size() > *max_len) continue;  // truncated away
          auto it = index_by_traversal.find(full);
          if (it == index_by_traversal.end()) continue;  // beyond enumeration
          row[it->second] += c;
          nonzero = true;
        }
        if (nonzero) ideal_rows.push_back(std::move(row));
      }
    }
  }
  auto w = Subspace<F>::span(field, dim, ideal_rows);
  CosetSpace<F> proj(Subspace<F>::full(field, dim), w);
  size_t qdim = proj.dim();

  // representatives are single paths (unit vectors at non-pivot columns)
  std::vector<size_t> rep_path(qdim, SIZE_MAX);
  std::vector<std::string> labels;
  for (size_t k = 0; k < qdim; ++k) {
    auto rep = proj.representative(k);
    size_t idx = SIZE_MAX;
    size_t support = 0;
    for (size_t i = 0; i < dim; ++i)
      if (!rep[i].is_zero()) {
        idx = i;
        ++support;
      }
    check(support == 1, "path quotient representative must be a single path");
    rep_path[k] = idx;
    labels.push_back(path_label(q, paths[idx]));
  }

  auto concat_product = [&](const Path& a, const Path& b) -> Vec<F> {
    // a * b: traverse b, then a
    Vec<F> out = zero_vec(field, dim);
    if (b.end != a.start) return out;
    std::vector<size_t> full = b.arrows;
    full.insert(full.end(), a.arrows.begin(), a.arrows.end());
    if (max_len && full.size() > *max_len) return out;
    if (full.empty()) {
      out[vertex_path[a.start]] = field.one();
      return out;
    }
    auto it = index_by_traversal.find(full);
    if (it == index_by_traversal.end()) return out;
    out[it->second] = field.one();
    return out;
  };

  std::vector<SparseVec<F>> table(qdim * qdim);
  for (size_t i = 0; i < qdim; ++i)
    for (size_t j = 0; j < qdim; ++j)
      table[i * qdim + j] = to_sparse<F>(proj.project(
          concat_product(paths[rep_path[i]], paths[rep_path[j]])));
  Vec<F> unit_ambient = zero_vec(field, dim);
  for (auto& [v, pi] : vertex_path) unit_ambient[pi] = field.one();
  Vec<F> unit = proj.project(unit_ambient);

  Algebra<F> alg(field, qdim, std::move(labels), std::move(table),
                 std::move(unit));
  check(alg.validate().ok(), "path algebra quotient must validate");
  return PathAlgebraResult<F>{std::move(alg), q, std::move(paths),
                              std::move(proj)};
}

template <class F>
Algebra<F> matrix_algebra(const F& field, size_t n) {
  if (n < 1) throw ParseError("matrix algebra needs n >= 1");
  size_t dim = n * n;
  auto idx = [n](size_t a, size_t b) { return a * n + b; };
  std::vector<SparseVec<F>> table(dim * dim);
  std::vector<std::string> labels(dim);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      labels[idx(a, b)] =
          "E" + std::to_string(a + 1) + "_" + std::to_string(b + 1);
      for (size_t c = 0; c < n; ++c)
        for (size_t d = 0; d < n; ++d)
          if (b == c)
            table[idx(a, b) * dim + idx(c, d)].push_back(
                {static_cast<uint32_t>(idx(a, d)), field.one()});
    }
  Vec<F> unit = zero_vec(field, dim);
  for (size_t a = 0; a < n; ++a) unit[idx(a, a)] = field.one();
  return Algebra<F>(field, dim, std::move(labels), std::move(table),
                    std::move(unit));
}

template <class F>
Algebra<F> triangular_algebra(const F& field, size_t n) {
  if (n < 1) throw ParseError("triangular algebra needs n >= 1");
  std::vector<std::pair<size_t, size_t>> units;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) units.push_back({a, b});
  size_t dim = units.size();
  auto find = [&](size_t a, size_t b) -> std::optional<size_t> {
    for (size_t k = 0; k < dim; ++k)
      if (units[k] == std::make_pair(a, b)) return k;
    return std::nullopt;
  };
  std::vector<SparseVec<F>> table(dim * dim);
  std::vector<std::string> labels(dim);
  for (size_t i = 0; i < dim; ++i) {
    labels[i] = "E" + std::to_string(units[i].first + 1) + "_" +
                std::to_string(units[i].second + 1);
    for (size_t j = 0; j < dim; ++j)
      if (units[i].second == units[j].first) {
        auto k = find(units[i].first, units[j].second);
        check(k.has_value(), "triangular product closed");
        table[i * dim + j].push_back(
            {static_cast<uint32_t>(*k), field.one()});
      }
  }
  Vec<F> unit = zero_vec(field, dim);
  for (size_t a = 0; a < n; ++a) unit[*find(a, a)] = field.one();
  return Algebra<F>(field, dim, std::move(labels), std::move(table),
                    std::move(unit));
}

template <class F>
Algebra<F> direct_product(const std::vector<Algebra<F>>& factors) {
  if (factors.empty()) throw ParseError("empty direct product");
  const F& field = factors[0].field();
  size_t dim = 0;
  std::vector<size_t> offset;
  for (const auto& a : factors) {
    offset.push_back(dim);
    dim += a.dim();
  }
  std::vector<std::string> labels;
  std::vector<SparseVec<F>> table(dim * dim);
  Vec<F> unit = zero_vec(field, dim);
  for (size_t k = 0; k < factors.size(); ++k) {
    const auto& a = factors[k];
    for (size_t i = 0; i < a.dim(); ++i) {
      labels.push_back("A" + std::to_string(k) + "_" + a.labels()[i]);
      unit[offset[k] + i] = a.unit()[i];
      for (size_t j = 0; j < a.dim(); ++j) {
        SparseVec<F> row;
        for (const auto& t : a.product_row(i, j))
          row.push_back({static_cast<uint32_t>(offset[k] + t.idx), t.c});
        table[(offset[k] + i) * dim + (offset[k] + j)] = std::move(row);
      }
    }
  }
  return Algebra<F>(field, dim, std::move(labels), std::move(table),
                    std::move(unit));
}

// ---------------------------------------------------------------------------
// Skew group algebras for a cyclic group action
// ---------------------------------------------------------------------------

template <class F>
struct GroupAction {
  size_t order = 1;
  Matrix<F> generator;  // image of each basis element, as columns

  GroupAction(size_t g, Matrix<F> m) : order(g), generator(std::move(m)) {}
};

// verifies that the generator is an algebra automorphism with sigma^g = id
template <class F>
void validate_action(const Algebra<F>& lam, const GroupAction<F>& act) {
  const F& field = lam.field();
  size_t n = lam.dim();
  if (act.generator.rows() != n || act.generator.cols() != n)
    throw ParseError("action matrix shape mismatch");
  if (rank(act.generator) != n)
    throw ParseError("action generator is not invertible");
  if (act.generator.apply(lam.unit()) != lam.unit())
    throw ParseError("action generator does not fix the unit");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto lhs = act.generator.apply(
          lam.multiply(lam.basis_element(i), lam.basis_element(j)));
      auto rhs = lam.multiply(act.generator.apply(lam.basis_element(i)),
                              act.generator.apply(lam.basis_element(j)));
      if (lhs != rhs)
        throw ParseError("action generator is not multiplicative");
    }
  auto pw = Matrix<F>::identity(field, n);
  for (size_t t = 0; t < act.order; ++t) pw = act.generator * pw;
  if (!(pw == Matrix<F>::identity(field, n)))
    throw ParseError("action generator does not satisfy sigma^g = id");
}

template <class F>
Algebra<F> skew_group_algebra(const Algebra<F>& lam,
                              const GroupAction<F>& act) {
  const F& field = lam.field();
  long long p = field.characteristic();
  if (p != 0 && act.order % static_cast<size_t>(p) == 0)
    throw BadCharacteristicError(
        "group order divisible by the characteristic (Maschke fails)");
  validate_action(lam, act);
  size_t n = lam.dim(), g = act.order;
  size_t dim = n * g;
  auto idx = [n](size_t u, size_t t) { return t * n + u; };
  // powers of the generator
  std::vector<Matrix<F>> pw{Matrix<F>::identity(field, n)};
  for (size_t t = 1; t < g; ++t) pw.push_back(act.generator * pw.back());
  std::vector<std::string> labels(dim);
  std::vector<SparseVec<F>> table(dim * dim);
  for (size_t u = 0; u < n; ++u)
    for (size_t t = 0; t < g; ++t)
      labels[idx(u, t)] =
          t == 0 ? lam.labels()[u] : lam.labels()[u] + "*s" + std::to_string(t);
  for (size_t u = 0; u < n; ++u)
    for (size_t s = 0; s < g; ++s)
      for (size_t v = 0; v < n; ++v)
        for (size_t t = 0; t < g; ++t) {
          // (b_u (x) s^s)(b_v (x) s^t) = b_u . s^s(b_v) (x) s^{s+t}
          auto moved = pw[s].apply(lam.basis_element(v));
          auto prod = lam.multiply(lam.basis_element(u), moved);
          SparseVec<F> row;
          size_t tt = (s + t) % g;
          for (size_t r = 0; r < n; ++r)
            if (!prod[r].is_zero())
              row.push_back({static_cast<uint32_t>(idx(r, tt)), prod[r]});
          table[idx(u, s) * dim + idx(v, t)] = std::move(row);
        }
  Vec<F> unit = zero_vec(field, dim);
  for (size_t r = 0; r < n; ++r) unit[idx(r, 0)] = lam.unit()[r];
  Algebra<F> out(field, dim, std::move(labels), std::move(table),
                 std::move(unit));
  check(out.validate().ok(), "skew group algebra must validate");
  return out;
}

// An algebra automorphism of a path algebra induced by a quiver symmetry
// (vertex permutation + arrow permutation respecting endpoints).
template <class F>
Matrix<F> quiver_symmetry_matrix(const F& field,
                                 const PathAlgebraResult<F>& pa,
                                 const std::vector<size_t>& vertex_perm,
                                 const std::vector<size_t>& arrow_perm) {
  const auto& q = pa.quiver;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[arrow_perm[a]].from != vertex_perm[q.arrows[a].from] ||
        q.arrows[arrow_perm[a]].to != vertex_perm[q.arrows[a].to])
      throw ParseError("arrow permutation does not respect endpoints");
  }
  size_t dim = pa.algebra.dim();
  check(dim == pa.paths.size(), "symmetry needs a relation-free path basis");
  Matrix<F> m(field, dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    Path im = pa.paths[i];
    im.start = vertex_perm[im.start];
    im.end = vertex_perm[im.end];
    for (auto& a : im.arrows) a = arrow_perm[a];
    size_t target = SIZE_MAX;
    for (size_t j = 0; j < dim; ++j)
      if (pa.paths[j] == im) target = j;
    check(target != SIZE_MAX, "image path must exist");
    m.at(target, i) = field.one();
  }
  return m;
}

// ---------------------------------------------------------------------------
// The flagship skew-group-algebra instance
// ---------------------------------------------------------------------------

template <class F>
struct PaperExampleBundle {
  PathAlgebraResult<F> lambda;
  GroupAction<F> action;
  Algebra<F> skew;
  Quiver expected_quiver;                 // up to vertex bijection
  std::vector<size_t> expected_block_dims;  // sorted block dims of A/r
  std::vector<size_t> expected_ns;          // sorted block sizes
};

template <class F>
PaperExampleBundle<F> paper_example(const F& field) {
  if (field.characteristic() == 2)
    throw BadCharacteristicError(
        "the skew-group example needs characteristic different from 2");
  QuiverSpec q;
  q.vertices = {"1", "2", "3", "2'", "3'"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"a'", 0, 3}, {"b'", 3, 4}};
  auto lam = path_algebra<F>(field, q, {});
  check(lam.algebra.dim() == 11, "the path algebra kQ must have dimension 11");
  // sigma: e1 fixed, e2 <-> e2', e3 <-> e3', a <-> a', b <-> b'
  std::vector<size_t> vperm{0, 3, 4, 1, 2};
  std::vector<size_t> aperm{2, 3, 0, 1};
  auto sigma = quiver_symmetry_matrix(field, lam, vperm, aperm);
  GroupAction<F> act(2, sigma);
  auto skew = skew_group_algebra(lam.algebra, act);

  Quiver expected = make_quiver({2, 1, 1, 2});
  expected.arrows[1][0] = 1;  // (2) -> (1)
  expected.arrows[0][3] = 1;  // (1) -> (4)
  expected.arrows[2][0] = 1;  // (3) -> (1)
  return PaperExampleBundle<F>{std::move(lam), std::move(act),
                               std::move(skew), std::move(expected),
                               {1, 1, 4, 4}, {1, 1, 2, 2}};
}

}  // namespace natq
