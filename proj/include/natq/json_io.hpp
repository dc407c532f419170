// JSON interchange: algebras, quiver specs, group actions, quivers, reports.
// GF(p) scalars serialize as decimal integers, rationals as "num/den"
// strings. Output uses ordered JSON so runs are byte-stable.
#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "natq/basic_algebra.hpp"
#include "natq/constructions.hpp"

namespace natq {

using ordered_json = nlohmann::ordered_json;

// ------------------------------- scalars ----------------------------------

inline ordered_json scalar_to_json(const Fp& x) { return x.value(); }
inline ordered_json scalar_to_json(const Rat& x) { return x.str(); }

inline Fp scalar_from_json(const FpField& field, const ordered_json& j) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) {
    try {
      return field.from_int(std::stoll(j.get<std::string>()));
    } catch (const std::exception&) {
      throw ParseError("bad GF(p) scalar: " + j.dump());
    }
  }
  throw ParseError("bad GF(p) scalar: " + j.dump());
}

inline Rat scalar_from_json(const RatField&, const ordered_json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>(), 1);
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(bigrat(bigint(s)));
      bigint num(s.substr(0, slash));
      bigint den(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator");
      return Rat(num, den);
    } catch (const std::exception&) {
      throw ParseError("bad rational scalar: " + s);
    }
  }
  throw ParseError("bad rational scalar: " + j.dump());
}

template <class F>
ordered_json vec_to_json(const Vec<F>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(scalar_to_json(x));
  return arr;
}

template <class F>
Vec<F> vec_from_json(const F& field, const ordered_json& j, size_t dim) {
  if (!j.is_array() || j.size() != dim)
    throw ParseError("scalar vector has wrong length");
  Vec<F> v;
  for (const auto& e : j) v.push_back(scalar_from_json(field, e));
  return v;
}

// ------------------------------- field spec --------------------------------

inline FieldSpec field_spec_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("field spec must be an object");
  if (j.contains("rationals") && j["rationals"].get<bool>())
    return FieldSpec{0};
  if (j.contains("char")) {
    long long p = j["char"].get<long long>();
    if (!is_prime(p)) throw ParseError("field characteristic must be prime");
    return FieldSpec{p};
  }
  throw ParseError("field spec needs \"char\" or \"rationals\"");
}

inline ordered_json field_spec_to_json(const FieldSpec& fs) {
  ordered_json j;
  if (fs.is_rationals())
    j["rationals"] = true;
  else
    j["char"] = fs.characteristic;
  return j;
}

// ------------------------------- algebras ----------------------------------

template <class F>
ordered_json algebra_to_json(const Algebra<F>& a, const FieldSpec& fs) {
  ordered_json j;
  j["field"] = field_spec_to_json(fs);
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  j["unit"] = vec_to_json<F>(a.unit());
  ordered_json mult = ordered_json::array();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t jx = 0; jx < a.dim(); ++jx) {
      const auto& row = a.product_row(i, jx);
      if (row.empty()) continue;
      mult.push_back(ordered_json::array(
          {i, jx, vec_to_json<F>(to_dense<F>(a.field(), a.dim(), row))}));
    }
  j["mult"] = mult;
  return j;
}

template <class F>
Algebra<F> algebra_from_json(const F& field, const ordered_json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  for (const char* key : {"dim", "basis", "unit", "mult"})
    if (!j.contains(key))
      throw ParseError(std::string("algebra file misses field \"") + key +
                       "\"");
  size_t dim = j["dim"].get<size_t>();
  std::vector<std::string> labels;
  if (!j["basis"].is_array() || j["basis"].size() != dim)
    throw ParseError("basis label list has wrong length");
  for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
  auto unit = vec_from_json(field, j["unit"], dim);
  std::vector<SparseVec<F>> table(dim * dim);
  for (const auto& row : j["mult"]) {
    if (!row.is_array() || row.size() != 3)
      throw ParseError("mult rows must be [i, j, [scalars]]");
    size_t i = row[0].get<size_t>(), jx = row[1].get<size_t>();
    if (i >= dim || jx >= dim)
      throw ParseError("mult row index out of range");
    table[i * dim + jx] =
        to_sparse<F>(vec_from_json(field, row[2], dim));
  }
  return Algebra<F>(field, dim, std::move(labels), std::move(table),
                    std::move(unit));
}

// ------------------------------- quivers -----------------------------------

inline ordered_json quiver_to_json(const Quiver& q) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (const auto& v : q.vertices) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["label"] = v.label;
    jv["n"] = v.n;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  ordered_json arrows = ordered_json::array();
  for (size_t i = 0; i < q.vertex_count(); ++i)
    for (size_t k = 0; k < q.vertex_count(); ++k)
      if (q.arrows[i][k] > 0) {
        ordered_json ja;
        ja["from"] = i;
        ja["to"] = k;
        ja["count"] = q.arrows[i][k];
        arrows.push_back(ja);
      }
  j["arrows"] = arrows;
  return j;
}

inline std::string export_quiver(const Quiver& q, const std::string& format) {
  if (format == "dot") return export_quiver_dot(q);
  if (format == "json") return quiver_to_json(q).dump(2) + "\n";
  throw ParseError("unknown quiver format: " + format);
}

inline QuiverSpec quiver_spec_from_json(const ordered_json& j) {
  QuiverSpec q;
  if (!j.contains("vertices") || !j.contains("arrows"))
    throw ParseError("quiver spec needs \"vertices\" and \"arrows\"");
  for (const auto& v : j["vertices"]) q.vertices.push_back(v.get<std::string>());
  auto vertex_index = [&](const std::string& name) {
    for (size_t i = 0; i < q.vertices.size(); ++i)
      if (q.vertices[i] == name) return i;
    throw ParseError("unknown vertex in quiver spec: " + name);
  };
  for (const auto& a : j["arrows"]) {
    QuiverSpec::Arrow ar;
    ar.name = a.at("name").get<std::string>();
    ar.from = vertex_index(a.at("from").get<std::string>());
    ar.to = vertex_index(a.at("to").get<std::string>());
    q.arrows.push_back(ar);
  }
  return q;
}

template <class F>
std::vector<PathRelation<F>> relations_from_json(const F& field,
                                                 const QuiverSpec& q,
                                                 const ordered_json& j) {
  std::vector<PathRelation<F>> rels;
  if (j.is_null()) return rels;
  auto arrow_index = [&](const std::string& name) {
    for (size_t i = 0; i < q.arrows.size(); ++i)
      if (q.arrows[i].name == name) return i;
    throw ParseError("unknown arrow in relation: " + name);
  };
  for (const auto& jr : j) {
    PathRelation<F> rel;
    for (const auto& jt : jr.at("terms")) {
      typename F::Elem c = scalar_from_json(field, jt.at("coeff"));
      std::vector<size_t> tr;
      for (const auto& an : jt.at("path"))
        tr.push_back(arrow_index(an.get<std::string>()));
      rel.terms.push_back({c, tr});
    }
    rels.push_back(std::move(rel));
  }
  return rels;
}

template <class F>
GroupAction<F> group_action_from_json(const F& field, const Algebra<F>& lam,
                                      const ordered_json& j) {
  size_t order = j.at("order").get<size_t>();
  if (order < 1) throw ParseError("group order must be positive");
  Matrix<F> gen(field, lam.dim(), lam.dim());
  auto label_index = [&](const std::string& l) {
    for (size_t i = 0; i < lam.dim(); ++i)
      if (lam.labels()[i] == l) return i;
    throw ParseError("unknown basis label in action: " + l);
  };
  const auto& images = j.at("images");
  for (auto it = images.begin(); it != images.end(); ++it) {
    size_t col = label_index(it.key());
    for (const auto& term : it.value()) {
      if (!term.is_array() || term.size() != 2)
        throw ParseError("action image terms must be [coeff, label]");
      auto c = scalar_from_json(field, term[0]);
      gen.at(label_index(term[1].get<std::string>()), col) += c;
    }
  }
  return GroupAction<F>(order, std::move(gen));
}

// ------------------------------- reports -----------------------------------

template <class F>
ordered_json analysis_to_json(const Analysis<F>& an) {
  ordered_json j;
  j["dim"] = an.algebra.dim();
  ordered_json chain = ordered_json::array();
  for (const auto& p : an.chain.powers) chain.push_back(p.dim());
  j["radical_chain_dims"] = chain;
  j["loewy_length"] = an.chain.loewy_length;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : an.wd.blocks) {
    ordered_json jb;
    jb["n"] = b.n;
    jb["dim"] = b.basis.dim();
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  j["rad_mod_rad2_dim"] = an.bimodule.actions.dim;
  j["natural_quiver"] = quiver_to_json(an.natural);
  j["ordinary_quiver"] = quiver_to_json(an.ordinary);
  j["dense_subquiver"] = is_dense_subquiver(an.natural, an.ordinary);
  j["basic"] = an.basic();
  return j;
}

inline ordered_json cover_report_to_json(const CoverReport& r) {
  ordered_json j;
  j["verdict"] = r.verdict;
  j["loewy_length"] = r.loewy_length;
  j["degree_dims"] = r.degree_dims;
  j["kernel_dims"] = r.kernel_dims;
  j["s_lower"] = r.s_lower;
  j["containment_in_J"] = r.containment_in_J;
  j["surjective"] = r.surjective;
  j["multiplicative"] = r.multiplicative;
  j["dims_account"] = r.dims_account;
  return j;
}

// ------------------------------- files -------------------------------------

inline ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("JSON parse failure in " + path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << content;
}

}  // namespace natq
