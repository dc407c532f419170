#include <catch2/catch_amalgamated.hpp>

#include "natq/radical.hpp"
#include "support.hpp"

using namespace natq;
using namespace natq::testing;

TEST_CASE("multiplication follows the structure constants") {
  auto a = kx3(5);
  FpField f5(5);
  auto x = unit_vec(f5, 3, 1);
  auto x2 = unit_vec(f5, 3, 2);
  REQUIRE(a.multiply(x, x) == x2);
  REQUIRE(vec_is_zero<FpField>(a.multiply(x2, x)));  // truncation
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    Vec<FpField> v{f5.random(rng), f5.random(rng), f5.random(rng)};
    REQUIRE(a.multiply(a.unit(), v) == v);
    REQUIRE(a.multiply(v, a.unit()) == v);
  }
  REQUIRE_THROWS_AS(a.multiply(unit_vec(f5, 2, 0), x), DimensionError);
}

TEST_CASE("validate reports failing triples and unit failures") {
  FpField f5(5);
  SECTION("associative unital table passes") {
    REQUIRE(kx3(5).validate().ok());
  }
  SECTION("non-associative witness at (0,0,0)") {
    // e1*e1 = e2, e2*e1 = e1, everything else zero:
    // (e1 e1) e1 = e1 but e1 (e1 e1) = e1 e2 = 0
    std::vector<std::vector<Vec<FpField>>> prod(
        2, std::vector<Vec<FpField>>(2, zero_vec(f5, 2)));
    prod[0][0][1] = f5.one();
    prod[1][0][0] = f5.one();
    auto a = Algebra<FpField>::from_dense(f5, 2, {"e1", "e2"}, prod,
                                          unit_vec(f5, 2, 0));
    auto rep = a.validate();
    REQUIRE_FALSE(rep.associative);
    REQUIRE(rep.failing_triple.has_value());
    REQUIRE(*rep.failing_triple == std::array<size_t, 3>{0, 0, 0});
  }
  SECTION("non-unital table") {
    std::vector<std::vector<Vec<FpField>>> prod(
        1, std::vector<Vec<FpField>>(1, zero_vec(f5, 1)));
    auto a = Algebra<FpField>::from_dense(f5, 1, {"e1"}, prod,
                                          unit_vec(f5, 1, 0));
    auto rep = a.validate();
    REQUIRE_FALSE(rep.unital);
  }
}

TEST_CASE("radical of the worked examples") {
  FpField f7(7);
  SECTION("semisimple product is radical-free") {
    auto a = direct_product<FpField>(
        {matrix_algebra(f7, 1), matrix_algebra(f7, 1)});
    REQUIRE(radical(a).dim() == 0);
  }
  SECTION("upper triangular 2x2 has radical spanned by E12") {
    auto a = triangular_algebra(f7, 2);
    auto r = radical(a);
    REQUIRE(r.dim() == 1);
    // E12 is the second basis vector of the E11,E12,E22 ordering
    REQUIRE(r.contains(unit_vec(f7, 3, 1)));
    Options wide;
    wide.radical_oracle_char = 7;  // raise the configurable field cap
    REQUIRE(r == radical_oracle(a, wide));
  }
  SECTION("k[x]/(x^3) has radical {x, x^2}") {
    auto a = kx3(7);
    auto r = radical(a);
    REQUIRE(r.dim() == 2);
    REQUIRE(r.contains(unit_vec(FpField(7), 3, 1)));
    REQUIRE(r.contains(unit_vec(FpField(7), 3, 2)));
  }
  SECTION("rational coefficients") {
    auto a = kx3_rat();
    REQUIRE(radical(a).dim() == 2);
    REQUIRE(radical(a) == radical_oracle(a));
  }
}

TEST_CASE("radical oracle agrees on oracle-sized instances") {
  for (long long p : {2, 3, 5}) {
    REQUIRE(radical(kx3(p)) == radical_oracle(kx3(p)));
    REQUIRE(radical(kx2(p)) == radical_oracle(kx2(p)));
    FpField f(p);
    auto tri = triangular_algebra(f, 2);
    REQUIRE(radical(tri) == radical_oracle(tri));
  }
}

TEST_CASE("radical oracle survives a change of basis") {
  // conjugate k[x]/(x^3) by an invertible change of basis so the radical is
  // no longer spanned by coordinate vectors
  FpField f3(3);
  auto a = kx3(3);
  Matrix<FpField> g(f3, 3, 3);  // new basis: 1, 1+x, 1+x+x^2 (invertible)
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i; j < 3; ++j) g.at(i, j) = f3.one();
  Matrix<FpField> ginv = g;  // inverse computed by brute force below
  {
    Matrix<FpField> aug(f3, 3, 6);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        aug.at(i, j) = g.at(i, j);
        aug.at(i, 3 + j) = i == j ? f3.one() : f3.zero();
      }
    auto rr = rref(aug);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) ginv.at(i, j) = rr.reduced.at(i, 3 + j);
  }
  std::vector<std::vector<Vec<FpField>>> prod(
      3, std::vector<Vec<FpField>>(3, zero_vec(f3, 3)));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      prod[i][j] = ginv.apply(a.multiply(g.apply(unit_vec(f3, 3, i)),
                                         g.apply(unit_vec(f3, 3, j))));
  auto skewed = Algebra<FpField>::from_dense(
      f3, 3, {"u0", "u1", "u2"}, prod, ginv.apply(a.unit()));
  REQUIRE(skewed.validate().ok());
  auto r = radical(skewed);
  REQUIRE(r.dim() == 2);
  REQUIRE(radical_oracle(skewed) == r);
}

TEST_CASE("radical chain and Loewy length") {
  SECTION("k[x]/(x^3): dims (2,1,0), rl = 3") {
    auto chain = radical_chain(kx3(7));
    std::vector<size_t> dims;
    for (const auto& p : chain.powers) dims.push_back(p.dim());
    REQUIRE(dims == std::vector<size_t>{2, 1, 0});
    REQUIRE(chain.loewy_length == 3);
  }
  SECTION("semisimple: dims (0), rl = 1") {
    FpField f7(7);
    auto chain = radical_chain(matrix_algebra(f7, 2));
    REQUIRE(chain.powers.size() == 1);
    REQUIRE(chain.loewy_length == 1);
  }
  SECTION("triangular 2x2: dims (1,0), rl = 2") {
    FpField f7(7);
    auto chain = radical_chain(triangular_algebra(f7, 2));
    std::vector<size_t> dims;
    for (const auto& p : chain.powers) dims.push_back(p.dim());
    REQUIRE(dims == std::vector<size_t>{1, 0});
    REQUIRE(chain.loewy_length == 2);
  }
}

TEST_CASE("subspace products") {
  auto a = kx3(7);
  FpField f7(7);
  auto r = radical(a);
  SECTION("r * r = span{x^2}") {
    auto r2 = a.subspace_product(r, r);
    REQUIRE(r2.dim() == 1);
    REQUIRE(r2.contains(unit_vec(f7, 3, 2)));
  }
  SECTION("U * 0 = 0") {
    Subspace<FpField> zero(f7, 3);
    REQUIRE(a.subspace_product(r, zero).dim() == 0);
  }
  SECTION("A * A = A for unital A") {
    auto full = Subspace<FpField>::full(f7, 3);
    REQUIRE(a.subspace_product(full, full).dim() == 3);
  }
}

TEST_CASE("quotients") {
  FpField f7(7);
  SECTION("k[x]/(x^3) mod r is the base field") {
    auto a = kx3(7);
    auto q = quotient_algebra(a, radical(a));
    REQUIRE(q.algebra.dim() == 1);
    REQUIRE(q.algebra.validate().ok());
  }
  SECTION("A mod zero ideal is A") {
    auto a = kx3(7);
    auto q = quotient_algebra(a, Subspace<FpField>(f7, 3));
    REQUIRE(q.algebra.dim() == 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        auto r1 = to_dense<FpField>(f7, 3, a.product_row(i, j));
        auto r2 = to_dense<FpField>(f7, 3, q.algebra.product_row(i, j));
        REQUIRE(r1 == r2);
      }
  }
  SECTION("triangular mod r is the diagonal pair") {
    auto a = triangular_algebra(f7, 2);
    auto q = quotient_algebra(a, radical(a));
    REQUIRE(q.algebra.dim() == 2);
    // diagonal structure constants: e_i e_j = delta_ij e_i
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        auto row = to_dense<FpField>(f7, 2, q.algebra.product_row(i, j));
        if (i == j)
          REQUIRE(row == unit_vec(f7, 2, i));
        else
          REQUIRE(vec_is_zero<FpField>(row));
      }
  }
  SECTION("non-ideals are rejected") {
    auto a = triangular_algebra(f7, 2);
    auto bad = Subspace<FpField>::span(f7, 3, {unit_vec(f7, 3, 0)});
    REQUIRE_THROWS_AS(quotient_algebra(a, bad), NotAnIdealError);
  }
  SECTION("projection is multiplicative on random elements") {
    auto a = kx3(7);
    auto q = quotient_algebra(a, a.subspace_product(radical(a), radical(a)));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      Vec<FpField> x{f7.random(rng), f7.random(rng), f7.random(rng)};
      Vec<FpField> y{f7.random(rng), f7.random(rng), f7.random(rng)};
      REQUIRE(q.projection.project(a.multiply(x, y)) ==
              q.algebra.multiply(q.projection.project(x),
                                 q.projection.project(y)));
    }
  }
}

TEST_CASE("centers") {
  FpField f5(5);
  SECTION("full matrix algebra has a one-dimensional center") {
    auto a = matrix_algebra(f5, 2);
    auto z = a.center();
    REQUIRE(z.dim() == 1);
    REQUIRE(z.contains(a.unit()));
  }
  SECTION("commutative algebra is its own center") {
    REQUIRE(kx3(5).center().dim() == 3);
  }
  SECTION("upper triangular 2x2 center is spanned by the identity") {
    auto a = triangular_algebra(f5, 2);
    auto z = a.center();
    REQUIRE(z.dim() == 1);
    REQUIRE(z.contains(a.unit()));
  }
}

TEST_CASE("trace form is nondegenerate on the semisimple quotient") {
  FpField f7(7);
  for (auto a : {triangular_algebra(f7, 2), kx3(7), matrix_algebra(f7, 2)}) {
    auto q = quotient_algebra(a, radical(a));
    REQUIRE(rank(q.algebra.trace_form()) == q.algebra.dim());
  }
}
