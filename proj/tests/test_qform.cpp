#include <catch2/catch_amalgamated.hpp>

#include "eqmf/qform.hpp"

#include <random>

using namespace eqmf;

namespace {
const std::size_t N = 24;
Series E2() { return eisenstein(2, N); }
Series E4() { return eisenstein(4, N); }
Series E6() { return eisenstein(6, N); }
}  // namespace

TEST_CASE("Eisenstein expansions") {
  Series e2 = E2(), e4 = E4(), e6 = E6();
  CHECK(e2[0] == 1);
  CHECK(e2[1] == -24);
  CHECK(e2[2] == -72);
  CHECK(e2[3] == -96);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  CHECK(e6[1] == -504);
  CHECK(e6[2] == -16632);
  CHECK_THROWS_AS(eisenstein(3, 4), QFormError);
  CHECK_THROWS_AS(eisenstein(0, 4), QFormError);
}

TEST_CASE("delta and 1/j") {
  Series d = delta_series(N);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);
  CHECK(d[5] == 4830);
  Series ji = j_inverse(N);
  CHECK(ji[1] == 1);
  CHECK(ji[2] == -744);
  CHECK(ji[3] == 356652);
  CHECK(ji[4] == -140361152);
}

TEST_CASE("Ramanujan derivatives") {
  Series e2 = E2(), e4 = E4(), e6 = E6();
  CHECK(eq_overlap(d_operator(e2),
                   scale(sub(mul(e2, e2), e4), frac(1, 12))));
  CHECK(eq_overlap(d_operator(e4),
                   scale(sub(mul(e2, e4), e6), frac(1, 3))));
  CHECK(eq_overlap(d_operator(e6),
                   scale(sub(mul(e2, e6), mul(e4, e4)), frac(1, 2))));
}

TEST_CASE("Serre derivative on generators") {
  CHECK(eq_overlap(serre_derivative(E2(), 1), scale(E4(), frac(-1, 12))));
  CHECK(eq_overlap(serre_derivative(E4(), 4), scale(E6(), frac(-1, 3))));
  CHECK(eq_overlap(serre_derivative(E6(), 6),
                   scale(mul(E4(), E4()), frac(-1, 2))));
}

TEST_CASE("Serre derivative Leibniz rule") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coin(-9, 9);
  for (int c = 0; c < 5; ++c) {
    Series f = zero_series(N), g = zero_series(N);
    for (std::size_t i = 0; i < N; ++i) {
      f[i] = coin(rng);
      g[i] = coin(rng);
    }
    long k = 4, l = 6;
    Series lhs = serre_derivative(mul(f, g), k + l);
    Series rhs = add(mul(serre_derivative(f, k), g),
                     mul(f, serre_derivative(g, l)));
    REQUIRE(eq_overlap(lhs, rhs));
  }
}

TEST_CASE("Rankin-Cohen bracket") {
  // [E4, E6]_1 = -2 (E4^3 - E6^2) = -3456 Delta
  Series b = rankin_cohen(E4(), E6(), 1, 4, 6);
  CHECK(eq_overlap(b, scale(delta_series(N), Rational(-3456))));
  // antisymmetry of the first bracket
  CHECK(eq_overlap(rankin_cohen(E6(), E4(), 1, 6, 4), neg(b)));
  // n = 0 is the plain product
  CHECK(eq_overlap(rankin_cohen(E4(), E6(), 0, 4, 6), mul(E4(), E6())));
}

TEST_CASE("theta_r specializes to known operators") {
  Series f = add(mul(E4(), E4()), scale(delta_series(N), Rational(3)));
  long k = 8;
  CHECK(eq_overlap(theta_r(f, k, 0), serre_derivative(f, k)));
  CHECK(eq_overlap(theta_r(f, k, 1), l_operator(f, k + 1)));
}

TEST_CASE("dimension formulas") {
  long dims[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2};  // k = 0,2,...,20
  for (int i = 0; i <= 10; ++i) CHECK(dim_modular(2 * i) == dims[i]);
  CHECK(dim_modular(-4) == 0);
  CHECK(dim_modular(26) == 2);
  CHECK(dim_qm(12, 1) == 3);
  CHECK(dim_qm(2, 1) == 1);
  CHECK(dim_qm(10, 5) == 5);
  // monomial count equals the dimension
  for (long w = 2; w <= 40; w += 2)
    for (long r = 0; r <= 5; ++r)
      CHECK(static_cast<long>(qm_monomial_basis(w, r).size()) ==
            dim_qm(w, r));
}

namespace {
Series random_form(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> coin(-9, 9);
  Series f = zero_series(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = coin(rng);
  return f;
}
}  // namespace

TEST_CASE("second-order operator intertwines with weight raising") {
  std::mt19937 rng(31);
  for (int c = 0; c < 10; ++c) {
    Series f = random_form(rng, 30);
    long w = 5 + 2 * (c % 4);
    Series lhs = l_operator(k_up(f, w), w + 6);
    Series rhs = k_up_adjoint(l_operator(f, w), w);
    REQUIRE(eq_overlap(lhs, rhs));
  }
}

TEST_CASE("higher operators compose from lower ones") {
  std::mt19937 rng(47);
  for (int c = 0; c < 10; ++c) {
    Series f = random_form(rng, 30);
    long k = 3 + (c % 5);
    for (unsigned r = 2; r <= 4; ++r) {
      Rational c1 = frac((k + r - 1) * (k + 2 * r), 2 * (r - 1) * (k + r));
      Rational c2 = frac(k * (k + r + 1), 2 * (r - 1) * (k + r));
      Series rhs = sub(scale(theta_r(serre_derivative(f, k), k + 2, r - 1),
                             c1),
                       scale(serre_derivative(theta_r(f, k, r - 1),
                                              k + 2 * static_cast<long>(r)),
                             c2));
      INFO("k=" << k << " r=" << r);
      REQUIRE(eq_overlap(theta_r(f, k, r), rhs));
    }
  }
}

TEST_CASE("composition defect at orders five and six") {
  std::mt19937 rng(61);
  for (int c = 0; c < 10; ++c) {
    Series f = random_form(rng, 30);
    long k = 2 + (c % 6);
    {
      Rational c1 = frac((k + 4) * (k + 10), 8 * (k + 5));
      Rational c2 = frac(k * (k + 6), 8 * (k + 5));
      Series comp = sub(scale(theta_r(serre_derivative(f, k), k + 2, 4), c1),
                        scale(serre_derivative(theta_r(f, k, 4), k + 10),
                              c2));
      Series defect = sub(theta_r(f, k, 5), comp);
      Rational mult = Rational(k * (k + 4) * (k + 6) * (k + 10)) *
                      Rational(k * k + 10 * k + 36) / 1440;
      REQUIRE(eq_overlap(defect,
                         scale(mul(delta_series(f.trunc()), f), mult)));
    }
    {
      Rational c1 = frac((k + 5) * (k + 12), 10 * (k + 6));
      Rational c2 = frac(k * (k + 7), 10 * (k + 6));
      Series comp = sub(scale(theta_r(serre_derivative(f, k), k + 2, 5), c1),
                        scale(serre_derivative(theta_r(f, k, 5), k + 12),
                              c2));
      Series defect = sub(theta_r(f, k, 6), comp);
      Rational mult = Rational(k * (k + 5) * (k + 7) * (k + 12)) *
                      Rational(k * k + 12 * k + 47) / 300;
      REQUIRE(eq_overlap(
          defect,
          scale(mul(delta_series(f.trunc()), serre_derivative(f, k)),
                mult)));
    }
  }
}

TEST_CASE("monomial expansion") {
  MonomialExpander ex(N);
  CHECK(eq_overlap(ex.expand({0, 3, 0}),
                   add(scale(delta_series(N), Rational(1728)),
                       mul(E6(), E6()))));
  CHECK(eq_overlap(ex.expand({2, 1, 1}),
                   mul(mul(E2(), E2()), mul(E4(), E6()))));
}
