#include <catch2/catch_amalgamated.hpp>

#include "eqmf/poly.hpp"
#include "eqmf/tables.hpp"

using namespace eqmf;

TEST_CASE("construction and degree") {
  RationalPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  RationalPoly p({1, 0, 3, 0});  // trailing zero trimmed
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(9) == 0);
  CHECK(p.leading() == 3);
  CHECK(RationalPoly::monomial(3, Rational(5)).degree() == 3);
}

TEST_CASE("arithmetic and eval") {
  RationalPoly a({1, 2}), b({3, 0, 1});
  CHECK((a + b) == RationalPoly({4, 2, 1}));
  CHECK((b - a) == RationalPoly({2, -2, 1}));
  CHECK((a * b) == RationalPoly({3, 6, 1, 2}));
  CHECK((Rational(2) * a) == RationalPoly({2, 4}));
  CHECK(b.eval(Rational(2)) == 7);
  CHECK((a - a).is_zero());
}

TEST_CASE("string rendering") {
  CHECK(poly_desc({"1", "-2115", "870630"}).str() ==
        "X^2 - 2115X + 870630");
  CHECK(poly_desc({"1", "-24454/3", "0"}).str() == "X^2 - 24454/3X");
  CHECK(RationalPoly({-1}).str() == "-1");
  CHECK(RationalPoly({0, 1}).str() == "X");
  CHECK(RationalPoly({0, -1}).str() == "-X");
  CHECK(RationalPoly().str() == "0");
}

TEST_CASE("reciprocal") {
  RationalPoly a({3, 2, 1});
  CHECK(reciprocal_poly(a, 2) == RationalPoly({1, 2, 3}));
  CHECK(reciprocal_poly(a, 4) == RationalPoly({0, 0, 1, 2, 3}));
  CHECK_THROWS_AS(reciprocal_poly(a, 1), DegreeExceeded);
}

TEST_CASE("linear solve: unique") {
  auto r = solve_exact_linear({{1, 2}, {3, 4}}, {5, 6});
  REQUIRE(r.status == SolveStatus::Unique);
  CHECK(r.solution == std::vector<Rational>{-4, frac(9, 2)});
  CHECK(r.rank == 2);
}

TEST_CASE("linear solve: inconsistent") {
  auto r = solve_exact_linear({{1, 1}, {2, 2}}, {1, 3});
  CHECK(r.status == SolveStatus::Inconsistent);
}

TEST_CASE("linear solve: kernel") {
  auto r = solve_exact_linear({{1, 1, 0}, {0, 0, 1}}, {2, 3});
  REQUIRE(r.status == SolveStatus::Underdetermined);
  REQUIRE(r.kernel.size() == 1);
  // kernel vector satisfies A k = 0
  const auto& k = r.kernel[0];
  CHECK(k[0] + k[1] == 0);
  CHECK(k[2] == 0);
}

TEST_CASE("overdetermined consistent") {
  auto r = solve_exact_linear({{1, 0}, {0, 1}, {1, 1}}, {1, 2, 3});
  REQUIRE(r.status == SolveStatus::Unique);
  CHECK(r.solution == std::vector<Rational>{1, 2});
}
