#include <catch2/catch_amalgamated.hpp>

#include "natq/basic_algebra.hpp"
#include "support.hpp"

using namespace natq;
using namespace natq::testing;

TEST_CASE("truncated tensor algebra dimensions") {
  FpField f7(7);
  SECTION("L = 0 is the base algebra") {
    TensorAlgebra<FpField> t(f7, {1, 2}, {{0, 0}, {0, 0}}, 0);
    REQUIRE(t.total_dim() == 5);
    REQUIRE(t.degree_dim(0) == 5);
  }
  SECTION("one loop on a 1-dimensional block: dims 1,1,1") {
    TensorAlgebra<FpField> t(f7, {1}, {{1}}, 2);
    REQUIRE(t.degree_dim(0) == 1);
    REQUIRE(t.degree_dim(1) == 1);
    REQUIRE(t.degree_dim(2) == 1);
  }
  SECTION("free component over blocks (1, 2) has dimension n_i^2 n_j^2") {
    // one arrow between the blocks: the free bimodule is A_i (x) A_j, of
    // dimension 1 * 4 = 4, i.e. multiplicity n_i n_j = 2
    auto delta = make_quiver({1, 2});
    delta.arrows[0][1] = 1;  // arrow from the 1-block to the 2-block
    auto t = free_path_tensor_algebra(f7, delta, 1);
    REQUIRE(t.degree_dim(0) == 5);
    REQUIRE(t.degree_dim(1) == 4);
  }
  SECTION("no arrows: degree 0 only") {
    auto delta = make_quiver({1, 1});
    auto t = free_path_tensor_algebra(f7, delta, 3);
    REQUIRE(t.total_dim() == 2);
  }
}

TEST_CASE("monomial products respect grading and truncation") {
  FpField f7(7);
  TensorAlgebra<FpField> t(f7, {1}, {{1}}, 2);
  // basis: degree 0 (e), degree 1 (m), degree 2 (m(x)m)
  REQUIRE(t.total_dim() == 3);
  auto p01 = t.product_index(1, 1);
  REQUIRE(p01.has_value());
  REQUIRE(*p01 == 2);
  REQUIRE_FALSE(t.product_index(2, 1).has_value());  // degree 3 truncated
  REQUIRE_FALSE(t.product_index(1, 2).has_value());
  auto mat = t.materialize();
  REQUIRE(mat.validate().ok());
  auto degs = t.degree_vector();
  GradedAlgebra<FpField> g{mat, degs, 2};
  REQUIRE(is_radical_graded(g));
}

TEST_CASE("mismatched middle blocks tensor to zero") {
  FpField f7(7);
  // two blocks, arrows only 0 -> 0 and 1 -> 1: no composable cross chains
  TensorAlgebra<FpField> t(f7, {1, 1}, {{1, 0}, {0, 1}}, 2);
  REQUIRE(t.degree_dim(1) == 2);
  REQUIRE(t.degree_dim(2) == 2);  // only the two self-loops square
  size_t loop0 = t.degree_offset(1);
  size_t loop1 = t.degree_offset(1) + 1;
  REQUIRE_FALSE(t.product_index(loop0, loop1).has_value());
  REQUIRE(t.product_index(loop0, loop0).has_value());
}

TEST_CASE("naive bimodule tensor agrees with the canonical engine") {
  FpField f7(7);
  SECTION("M (x) A0 recovers M") {
    auto an = analyze(kx3(7));
    auto reg = regular_bimodule(an.semisimple);
    auto prod = bimodule_tensor(f7, an.semisimple, an.bimodule.actions, reg);
    REQUIRE(prod.dim == an.bimodule.actions.dim);
  }
  SECTION("(r/r^2)^(x)2 of k[x]/(x^3) has dimension 1") {
    auto an = analyze(kx3(7));
    auto sq = bimodule_tensor(f7, an.semisimple, an.bimodule.actions,
                              an.bimodule.actions);
    REQUIRE(sq.dim == 1);
  }
  SECTION("canonical chain dims match the naive quotient, with blocks") {
    FpField f5(5);
    auto pe = paper_example(f5);
    auto an = analyze(pe.skew);
    auto sq = bimodule_tensor(f5, an.semisimple, an.bimodule.actions,
                              an.bimodule.actions);
    auto canon = canonicalize_bimodule(an);
    TensorAlgebra<FpField> t(f5, an.block_sizes(), canon.mult, 2);
    REQUIRE(sq.dim == t.degree_dim(2));
    REQUIRE(sq.dim == 4);
  }
  SECTION("mismatched middle blocks: naive quotient is zero") {
    FpField f5(5);
    // A2 path algebra: M lives between different blocks, M (x) M = 0
    auto an = analyze(a2_path(5));
    auto sq = bimodule_tensor(f5, an.semisimple, an.bimodule.actions,
                              an.bimodule.actions);
    REQUIRE(sq.dim == 0);
  }
}

TEST_CASE("tensor algebra grading is strict") {
  FpField f7(7);
  TensorAlgebra<FpField> t(f7, {1, 2}, {{1, 1}, {0, 1}}, 3, 100000);
  auto mat = t.materialize();
  auto degs = t.degree_vector();
  for (size_t i = 0; i < mat.dim(); ++i)
    for (size_t j = 0; j < mat.dim(); ++j)
      for (const auto& term : mat.product_row(i, j))
        REQUIRE(degs[term.idx] == degs[i] + degs[j]);
}

TEST_CASE("canonical decomposition is a certified bimodule isomorphism") {
  FpField f5(5);
  auto pe = paper_example(f5);
  auto an = analyze(pe.skew);
  auto canon = canonicalize_bimodule(an);
  // multiplicities: three one-dimensional simple summands (hand-computed
  // block components of dimensions 2, 2, 4)
  size_t total_mult = 0;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) total_mult += canon.mult[i][j];
  REQUIRE(total_mult == 3);
  REQUIRE(rank(canon.phi) == 8);
}

TEST_CASE("dimension cap raises OracleLimit") {
  FpField f7(7);
  REQUIRE_THROWS_AS(TensorAlgebra<FpField>(f7, {1}, {{4}}, 8, 1000),
                    OracleLimitError);
}
