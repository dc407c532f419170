// Verification suites over a single algebra: the quiver inequalities
// (prop12), graded-structure checks (graded), the generalized Gabriel cover
// (gabriel), and the two-basic-algebras comparisons (basics). Each suite
// reports the first failing check.
#pragma once

#include "natq/json_io.hpp"
#include "natq/random_graded.hpp"

namespace natq {

struct SuiteResult {
  bool pass = true;
  std::string failure;        // first failing check, empty if pass
  ordered_json details = ordered_json::object();

  void fail(const std::string& what) {
    if (pass) {
      pass = false;
      failure = what;
    }
  }
};

template <class F>
SuiteResult suite_prop12(const Analysis<F>& an, const Options& opt = {}) {
  SuiteResult res;
  const F& field = an.algebra.field();
  size_t s = an.block_count();
  size_t dim_sum = 0;
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      size_t t = an.natural.arrows[i][j];
      size_t m = an.ordinary.arrows[i][j];
      size_t ni = an.wd.blocks[i].n, nj = an.wd.blocks[j].n;
      if (!(t <= m && m <= ni * nj * t))
        res.fail("bounds t <= m <= n_i n_j t violated at (" +
                 std::to_string(i) + "," + std::to_string(j) + ")");
      if ((t == 0) != (m == 0))
        res.fail("t and m must vanish together");
      dim_sum += an.components[i][j].dim;
      // rank formula against the generator-search oracle
      if (an.components[j][i].dim > 0 &&
          an.components[j][i].dim <= opt.bimodule_oracle_dim) {
        auto gens = min_generators_oracle(field, an.bimodule, an.wd,
                                          an.components[j][i], opt);
        if (gens.size() != t)
          res.fail("rank formula disagrees with the generator oracle at (" +
                   std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  if (dim_sum != an.bimodule.actions.dim)
    res.fail("components do not decompose r/r^2");
  if (!is_dense_subquiver(an.natural, an.ordinary))
    res.fail("natural quiver is not dense in the ordinary quiver");
  if (an.basic() && !(an.natural.arrows == an.ordinary.arrows))
    res.fail("basic algebra must have identical quivers");
  res.details["natural_arrows"] = an.natural.arrow_total();
  res.details["ordinary_arrows"] = an.ordinary.arrow_total();
  return res;
}

template <class F>
SuiteResult suite_graded(const Algebra<F>& a, const Options& opt = {}) {
  SuiteResult res;
  auto gr = associated_graded(a, opt);
  if (gr.presentation.dim() != a.dim()) res.fail("dim gr A != dim A");
  if (!is_radical_graded(gr, opt)) res.fail("gr A is not radical-graded");
  auto gr2 = associated_graded(gr.presentation, opt);
  if (gr2.presentation.dim() != gr.presentation.dim()) {
    res.fail("dim gr gr A != dim gr A");
  } else {
    for (size_t i = 0; i < gr.presentation.dim(); ++i)
      for (size_t j = 0; j < gr.presentation.dim(); ++j) {
        auto r1 = to_dense<F>(a.field(), a.dim(),
                              gr.presentation.product_row(i, j));
        auto r2 = to_dense<F>(a.field(), a.dim(),
                              gr2.presentation.product_row(i, j));
        if (r1 != r2) {
          res.fail("gr(gr A) structure constants differ from gr A");
          i = gr.presentation.dim();
          break;
        }
      }
  }
  if (gr2.degree_of_basis != gr.degree_of_basis)
    res.fail("gr(gr A) grading differs from gr A");
  res.details["dim"] = a.dim();
  return res;
}

template <class F>
SuiteResult suite_gabriel(const Algebra<F>& a, const Options& opt = {}) {
  SuiteResult res;
  auto cover = gabriel_cover_of_gr(a, opt);
  const auto& r = cover.report;
  if (!r.surjective) res.fail("cover map is not surjective in some degree");
  if (!r.multiplicative) res.fail("cover map is not multiplicative");
  if (!r.dims_account) res.fail("dimension bookkeeping fails");
  if (!r.containment_in_J) res.fail("kernel meets degrees 0-1");
  for (size_t d = r.loewy_length; d < r.degree_dims.size(); ++d)
    if (r.kernel_dims[d] != r.degree_dims[d])
      res.fail("kernel must contain all degrees >= the Loewy length");
  if (!r.verdict) res.fail("cover verdict is false");
  res.details = cover_report_to_json(r);
  return res;
}

template <class F>
SuiteResult suite_basics(const Algebra<F>& a, const Options& opt = {}) {
  SuiteResult res;
  auto gr = associated_graded(a, opt);
  auto an = analyze(gr.presentation, opt);
  CornerSubalgebra<F> b = basic_algebra(an, opt);  // basicness checked inside
  auto ban = analyze(b.algebra, opt);
  if (!ban.basic()) res.fail("B is not basic");
  if (!quiver_isomorphic(ban.ordinary, an.ordinary, false))
    res.fail("ordinary quivers of B and A differ");
  if (!(ban.ordinary.arrows == ban.natural.arrows))
    res.fail("basic algebra quivers must coincide");
  if (ban.block_count() != an.block_count())
    res.fail("idempotent family cardinality mismatch");
  auto tb = verify_two_basics(gr, opt);
  if (!tb.verdict) res.fail("B != image of C (two-basics check)");
  auto cover = cover_core(an);
  auto qe = verify_quiver_equality(an, cover.report, opt);
  if (qe.applicable && !qe.verdict)
    res.fail("natural quiver of the free tensor realization differs");
  res.details["dim_b"] = tb.dim_b;
  res.details["dim_c_image"] = tb.dim_c_image;
  res.details["quiver_equality_applicable"] = qe.applicable;
  return res;
}

template <class F>
SuiteResult run_suite(const std::string& name, const Algebra<F>& a,
                      const Options& opt = {}) {
  if (name == "prop12") {
    auto an = analyze(a, opt);
    return suite_prop12(an, opt);
  }
  if (name == "graded") return suite_graded(a, opt);
  if (name == "gabriel") return suite_gabriel(a, opt);
  if (name == "basics") return suite_basics(a, opt);
  if (name == "all") {
    SuiteResult out;
    for (const char* n : {"prop12", "graded", "gabriel", "basics"}) {
      auto r = run_suite(n, a, opt);
      out.details[n] = r.details;
      if (!r.pass) out.fail(std::string(n) + ": " + r.failure);
    }
    return out;
  }
  throw ParseError("unknown suite: " + name);
}

}  // namespace natq
