// Quivers (vertices with block sizes, arrow-multiplicity matrix), dense
// sub-quiver test, brute-force isomorphism, DOT/JSON export.
#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "natq/field.hpp"

namespace natq {

struct QuiverVertex {
  size_t id = 0;
  std::string label;
  size_t n = 1;  // block size attached to the vertex
};

struct Quiver {
  std::vector<QuiverVertex> vertices;
  // arrows[i][j] = number of arrows i -> j
  std::vector<std::vector<size_t>> arrows;

  size_t vertex_count() const { return vertices.size(); }
  size_t arrow_total() const {
    size_t t = 0;
    for (const auto& row : arrows) t = std::accumulate(row.begin(), row.end(), t);
    return t;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    for (size_t i = 0; i < a.vertex_count(); ++i)
      if (a.vertices[i].n != b.vertices[i].n) return false;
    return a.arrows == b.arrows;
  }
};

inline Quiver make_quiver(std::vector<size_t> block_sizes) {
  Quiver q;
  for (size_t i = 0; i < block_sizes.size(); ++i)
    q.vertices.push_back({i, "B" + std::to_string(i), block_sizes[i]});
  q.arrows.assign(block_sizes.size(),
                  std::vector<size_t>(block_sizes.size(), 0));
  return q;
}

// sub is dense in super: same vertices, arrows present between exactly the
// same ordered pairs, counts bounded by super's
inline bool is_dense_subquiver(const Quiver& sub, const Quiver& super) {
  if (sub.vertex_count() != super.vertex_count()) return false;
  for (size_t i = 0; i < sub.vertex_count(); ++i)
    for (size_t j = 0; j < sub.vertex_count(); ++j) {
      bool sub_has = sub.arrows[i][j] > 0;
      bool super_has = super.arrows[i][j] > 0;
      if (sub_has != super_has) return false;
      if (sub.arrows[i][j] > super.arrows[i][j]) return false;
    }
  return true;
}

// isomorphism by brute force over vertex bijections; block sizes must
// correspond when respect_sizes is set
inline bool quiver_isomorphic(const Quiver& a, const Quiver& b,
                              bool respect_sizes = true) {
  size_t n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    if (respect_sizes)
      for (size_t i = 0; i < n && ok; ++i)
        ok = a.vertices[i].n == b.vertices[perm[i]].n;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j)
        ok = a.arrows[i][j] == b.arrows[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::string export_quiver_dot(const Quiver& q,
                                     const std::string& name = "quiver") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& v : q.vertices)
    os << "  v" << v.id << " [label=\"" << v.id << ":" << v.label
       << "(n=" << v.n << ")\"];\n";
  for (size_t i = 0; i < q.vertex_count(); ++i)
    for (size_t j = 0; j < q.vertex_count(); ++j)
      for (size_t k = 0; k < q.arrows[i][j]; ++k)
        os << "  v" << i << " -> v" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace natq
