#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace natq;
using namespace natq::testing;

TEST_CASE("central idempotents of worked examples") {
  FpField f7(7);
  SECTION("GF(7) x GF(7)") {
    auto a = direct_product<FpField>(
        {matrix_algebra(f7, 1), matrix_algebra(f7, 1)});
    auto idems = central_idempotents(a);
    REQUIRE(idems.size() == 2);
    std::vector<Vec<FpField>> expected{unit_vec(f7, 2, 0), unit_vec(f7, 2, 1)};
    REQUIRE((idems[0] == expected[0] || idems[0] == expected[1]));
    REQUIRE((idems[1] == expected[0] || idems[1] == expected[1]));
    REQUIRE_FALSE(idems[0] == idems[1]);
  }
  SECTION("a simple algebra has only the identity") {
    FpField f5(5);
    auto a = matrix_algebra(f5, 2);
    auto idems = central_idempotents(a);
    REQUIRE(idems.size() == 1);
    REQUIRE(idems[0] == a.unit());
  }
  SECTION("GF(5)[x]/(x^2 - 2) is not split") {
    FpField f5(5);
    // exhaustive: 2 is a quadratic non-residue mod 5
    for (long long v = 0; v < 5; ++v) REQUIRE((v * v) % 5 != 2);
    std::vector<std::vector<Vec<FpField>>> prod(
        2, std::vector<Vec<FpField>>(2, zero_vec(f5, 2)));
    prod[0][0][0] = f5.one();
    prod[0][1][1] = f5.one();
    prod[1][0][1] = f5.one();
    prod[1][1][0] = f5.from_int(2);  // x^2 = 2
    auto a = Algebra<FpField>::from_dense(f5, 2, {"1", "x"}, prod,
                                          unit_vec(f5, 2, 0));
    REQUIRE(a.validate().ok());
    REQUIRE_THROWS_AS(central_idempotents(a), NonSplitError);
  }
  SECTION("non-semisimple input is rejected") {
    REQUIRE_THROWS_AS(central_idempotents(kx3(7)), NotSemisimpleError);
  }
}

TEST_CASE("block data recognizes matrix blocks") {
  FpField f5(5);
  SECTION("one-dimensional block") {
    auto a = matrix_algebra(f5, 1);
    auto wd = wedderburn(a);
    REQUIRE(wd.block_count() == 1);
    REQUIRE(wd.blocks[0].n == 1);
    REQUIRE(wd.blocks[0].primitive_idempotent == a.unit());
  }
  SECTION("2x2 block: n = 2 and a rank-one idempotent") {
    auto a = matrix_algebra(f5, 2);
    auto wd = wedderburn(a);
    REQUIRE(wd.blocks[0].n == 2);
    const auto& eps = wd.blocks[0].primitive_idempotent;
    REQUIRE(a.multiply(eps, eps) == eps);
    // left ideal a * eps has dimension n = 2
    std::vector<Vec<FpField>> gens;
    for (size_t i = 0; i < 4; ++i)
      gens.push_back(a.multiply(a.basis_element(i), eps));
    REQUIRE(Subspace<FpField>::span(f5, 4, gens).dim() == 2);
  }
  SECTION("a 3-dimensional semisimple commutative block over GF(7) splits "
          "into three idempotents, not a matrix block") {
    FpField f7(7);
    // GF(7)[x]/(x^3 - x) = k x k x k; center has dim 3, so three blocks
    std::vector<std::vector<Vec<FpField>>> prod(
        3, std::vector<Vec<FpField>>(3, zero_vec(f7, 3)));
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        size_t k = i + j;
        while (k >= 3) k -= 2;  // x^3 = x
        prod[i][j][k] = f7.one();
      }
    auto a = Algebra<FpField>::from_dense(f7, 3, {"1", "x", "x2"}, prod,
                                          unit_vec(f7, 3, 0));
    REQUIRE(a.validate().ok());
    auto wd = wedderburn(a);
    REQUIRE(wd.block_count() == 3);
  }
  SECTION("non-square block dimension raises NonSplit") {
    // GF(5)[x]/(x^2-2) again, fed directly to block_data via wedderburn
    FpField f2(2);
    // GF(2)[x]/(x^2+x+1) = GF(4): a simple block of dimension 2
    std::vector<std::vector<Vec<FpField>>> prod(
        2, std::vector<Vec<FpField>>(2, zero_vec(f2, 2)));
    prod[0][0][0] = f2.one();
    prod[0][1][1] = f2.one();
    prod[1][0][1] = f2.one();
    prod[1][1][0] = f2.one();  // x^2 = x + 1
    prod[1][1][1] = f2.one();
    auto a = Algebra<FpField>::from_dense(f2, 2, {"1", "x"}, prod,
                                          unit_vec(f2, 2, 0));
    REQUIRE(a.validate().ok());
    REQUIRE_THROWS_AS(wedderburn(a), NonSplitError);
  }
  SECTION("GF(3)[x]/(x^4+x+2): a field of square dimension is caught by the "
          "center check") {
    FpField f3(3);
    // x^4 + x + 2 is irreducible over GF(3) (no roots, and not a product of
    // two irreducible quadratics: checked by exhaustive multiplication below)
    // GF(81) has dimension 4 = 2^2 over GF(3), a perfect square.
    std::vector<Polynomial<FpField>> quads;
    for (long long a0 = 0; a0 < 3; ++a0)
      for (long long a1 = 0; a1 < 3; ++a1) {
        Polynomial<FpField> q(
            f3, {f3.from_int(a0), f3.from_int(a1), f3.one()});
        if (!split_roots(q).has_value()) quads.push_back(q);
      }
    Polynomial<FpField> target(
        f3, {f3.from_int(2), f3.one(), f3.zero(), f3.zero(), f3.one()});
    for (long long r = 0; r < 3; ++r)
      REQUIRE_FALSE(target.eval(f3.from_int(r)).is_zero());
    for (const auto& q1 : quads)
      for (const auto& q2 : quads) REQUIRE_FALSE(q1 * q2 == target);
    // multiplication table of GF(3)[x]/(x^4+x+2)
    std::vector<std::vector<Vec<FpField>>> prod(
        4, std::vector<Vec<FpField>>(4, zero_vec(f3, 4)));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        auto xi = Polynomial<FpField>::x_power(f3, i);
        auto xj = Polynomial<FpField>::x_power(f3, j);
        auto rem = Polynomial<FpField>::divmod(xi * xj, target).second;
        for (size_t k = 0; k < 4; ++k) prod[i][j][k] = rem.coeff(k);
      }
    auto a = Algebra<FpField>::from_dense(f3, 4, {"1", "x", "x2", "x3"}, prod,
                                          unit_vec(f3, 4, 0));
    REQUIRE(a.validate().ok());
    REQUIRE(radical(a).dim() == 0);
    REQUIRE_THROWS_AS(wedderburn(a), NonSplitError);
  }
}

TEST_CASE("minimal left ideals") {
  FpField f5(5);
  auto a = matrix_algebra(f5, 2);
  auto wd = wedderburn(a);
  // the adapted basis starts with the primitive idempotent
  auto v = minimal_left_ideal(a, wd.blocks[0].basis,
                              wd.blocks[0].primitive_idempotent);
  REQUIRE(v.size() == 2);
  REQUIRE(v[0] == wd.blocks[0].primitive_idempotent);
  // block * E11 = span{E11, E21} in the canonical matrix-unit presentation
  Vec<FpField> e11 = unit_vec(f5, 4, 0);
  std::vector<Vec<FpField>> gens;
  for (size_t i = 0; i < 4; ++i)
    gens.push_back(a.multiply(a.basis_element(i), e11));
  auto span = Subspace<FpField>::span(f5, 4, gens);
  REQUIRE(span.dim() == 2);
  REQUIRE(span.contains(unit_vec(f5, 4, 0)));  // E11
  REQUIRE(span.contains(unit_vec(f5, 4, 2)));  // E21
}

TEST_CASE("matrix units multiply correctly across the decomposition") {
  FpField f7(7);
  auto a = direct_product<FpField>(
      {matrix_algebra(f7, 2), matrix_algebra(f7, 1)});
  auto wd = wedderburn(a);
  REQUIRE(wd.block_count() == 2);
  REQUIRE(wd.blocks[0].n == 1);
  REQUIRE(wd.blocks[1].n == 2);
  size_t total = 0;
  for (const auto& b : wd.blocks) total += b.n * b.n;
  REQUIRE(total == a.dim());
}

TEST_CASE("idempotent lifting") {
  FpField f7(7);
  SECTION("semisimple algebras lift trivially") {
    auto a = matrix_algebra(f7, 2);
    auto q = quotient_algebra(a, radical(a));
    auto fam = std::vector<Vec<FpField>>{q.algebra.unit()};
    auto lifted = lift_idempotents(a, fam, q.projection, 1);
    REQUIRE(lifted.elements.size() == 1);
    REQUIRE(lifted.elements[0] == a.unit());
    REQUIRE(lifted.complete);
  }
  SECTION("k[x]/(x^3): the unit lifts to the unit") {
    auto a = kx3(7);
    auto q = quotient_algebra(a, radical(a));
    auto lifted = lift_idempotents(
        a, {q.algebra.unit()}, q.projection, 3);
    REQUIRE(lifted.elements[0] == a.unit());
    REQUIRE(lifted.complete);
  }
  SECTION("triangular 2x2: diagonal family lifts orthogonally") {
    auto a = triangular_algebra(f7, 2);
    auto q = quotient_algebra(a, radical(a));
    auto wd = wedderburn(q.algebra);
    std::vector<Vec<FpField>> fam;
    for (const auto& b : wd.blocks) fam.push_back(b.central_idempotent);
    auto lifted = lift_idempotents(a, fam, q.projection, 2);
    REQUIRE(lifted.elements.size() == 2);
    REQUIRE(lifted.complete);
    Vec<FpField> sum = zero_vec(f7, 3);
    for (const auto& e : lifted.elements) {
      REQUIRE(a.multiply(e, e) == e);
      vec_add_scaled<FpField>(sum, e, f7.one());
    }
    REQUIRE(sum == a.unit());
    REQUIRE(vec_is_zero<FpField>(
        a.multiply(lifted.elements[0], lifted.elements[1])));
    REQUIRE(vec_is_zero<FpField>(
        a.multiply(lifted.elements[1], lifted.elements[0])));
    for (size_t i = 0; i < 2; ++i)
      REQUIRE(q.projection.project(lifted.elements[i]) == fam[i]);
  }
  SECTION("skewed representative still converges") {
    // lift in k[x]/(x^3) where the chosen representative 1 + x is not
    // idempotent; Newton iteration must still converge to 1
    auto a = kx3(7);
    auto q = quotient_algebra(a, radical(a));
    // family given in quotient coordinates; the lift starts from the coset
    // representative and iterates
    auto lifted = lift_idempotents(a, {q.algebra.unit()}, q.projection, 3);
    REQUIRE(a.multiply(lifted.elements[0], lifted.elements[0]) ==
            lifted.elements[0]);
  }
}

TEST_CASE("block ordering is deterministic") {
  FpField f7(7);
  auto a = direct_product<FpField>(
      {matrix_algebra(f7, 2), matrix_algebra(f7, 1), matrix_algebra(f7, 1)});
  auto wd = wedderburn(a);
  REQUIRE(wd.block_count() == 3);
  REQUIRE(wd.blocks[0].n == 1);
  REQUIRE(wd.blocks[1].n == 1);
  REQUIRE(wd.blocks[2].n == 2);
  // ties within n = 1 broken by basis support
  REQUIRE(wd.blocks[0].basis.pivots() < wd.blocks[1].basis.pivots());
}
