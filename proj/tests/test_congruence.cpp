#include <catch2/catch_amalgamated.hpp>

#include "eqmf/congruence.hpp"

using namespace eqmf;

TEST_CASE("Lucas product against direct binomials") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13})
    for (long n = 0; n <= 120; ++n)
      for (long k = 0; k <= n; ++k) {
        REQUIRE(lucas_mod_p(Int(n), Int(k), p) ==
                mod_of_int(binomial(Int(n), k), p));
      }
  // digit factorization C(np+a, mp+b) = C(n,m) C(a,b) mod p
  for (std::int64_t p : {5, 11})
    for (long n = 0; n <= 6; ++n)
      for (long m = 0; m <= n; ++m)
        for (long a = 0; a < p; ++a)
          for (long b = 0; b < p; ++b)
            REQUIRE(lucas_mod_p(Int(n * p + a), Int(m * p + b), p) ==
                    mod_mul(mod_of_int(binomial(Int(n), m), p),
                            mod_of_int(binomial(Int(a), b), p), p));
}

TEST_CASE("U coefficients vanish modulo small prime powers") {
  for (long r = 1; r <= 300; ++r) {
    Int u = u_coeff(r);
    REQUIRE(mpz_divisible_ui_p(u.get_mpz_t(), 8));
    REQUIRE(mpz_divisible_ui_p(u.get_mpz_t(), 3));
    REQUIRE(mpz_divisible_ui_p(u.get_mpz_t(), 5));
  }
}

TEST_CASE("truncated multipliers match the small cases") {
  auto m5 = uv_multiplier_mod_p(5);
  CHECK(m5.for_u.coeffs() == std::vector<std::int64_t>{1});
  auto m7 = uv_multiplier_mod_p(7);
  CHECK(m7.for_u.coeffs() == std::vector<std::int64_t>{1, 1});
  CHECK(m7.for_v.coeffs() == std::vector<std::int64_t>{1, 0});
  auto m13 = uv_multiplier_mod_p(13);
  CHECK(m13.for_u.coeffs() == std::vector<std::int64_t>{1, 3, 12});
}

TEST_CASE("mod-p multiplier congruence for all primes up to 50") {
  for (std::int64_t p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    INFO("p=" << p);
    REQUIRE_NOTHROW(
        verify_truncated_multiplier(p, static_cast<std::size_t>(5 * p)));
  }
}

TEST_CASE("stored prime-power multipliers hold and re-derive") {
  for (const auto& e : multiplier_tables()) {
    INFO(e.p << "^" << e.s << (e.for_v ? " V" : " U"));
    REQUIRE_NOTHROW(verify_multiplier(e, 200));
    REQUIRE_NOTHROW(derive_multiplier(e.p, e.s, e.for_v));
  }
}

TEST_CASE("infinite product expressions") {
  REQUIRE_NOTHROW(verify_infinite_product(2, 8, 100));
  REQUIRE_NOTHROW(verify_infinite_product(3, 5, 100));
  REQUIRE_NOTHROW(verify_infinite_product(5, 2, 100));
  REQUIRE_NOTHROW(verify_infinite_product(7, 2, 100));
}

TEST_CASE("ratio congruences behind the multipliers") {
  REQUIRE_NOTHROW(dwork_ratio_check(DworkVariant::B, 5, 1, 100));
  REQUIRE_NOTHROW(dwork_ratio_check(DworkVariant::B, 7, 1, 100));
  REQUIRE_NOTHROW(dwork_ratio_check(DworkVariant::A, 2, 7, 300));
  REQUIRE_NOTHROW(dwork_ratio_check(DworkVariant::A, 3, 4, 300));
}

TEST_CASE("truncation fixtures at 5^2") {
  PrimePowerModulus m(5, 2);
  // In the plain variable x the truncations reduce to 1 + 15x + 15x^2 +
  // 15x^5 + 15x^10; our series absorbs the argument 1728x, so each
  // coefficient picks up a unit factor 1728^i mod 25.
  auto scaled = [&](std::vector<std::size_t> support, std::size_t step) {
    std::vector<std::int64_t> w(26, 0);
    w[0] = 1;
    for (std::size_t i : support)
      w[i * step] = mod_mul(15, mod_pow(1728 % 25, i, 25), 25);
    return w;
  };
  ModSeries f2 =
      reduce_series(dwork_truncation(DworkVariant::B, 5, 2, 26), m);
  CHECK(f2.coeffs() == scaled({1, 2, 5, 10}, 1));
  // F_1(x^5) mod 5^2; the unit factor rides on the original index
  ModSeries f1p = substitute_power(
      reduce_series(dwork_truncation(DworkVariant::B, 5, 1, 26), m), 5);
  CHECK(f1p.coeffs() == scaled({1, 2}, 5));
  // logarithmic derivative of U mod 5^2
  Series u = u_series(10);
  Series ld = mul(derive(u), invert(u.truncated(9)));
  CHECK(reduce_mod(ld[0], m).value == 20);
  CHECK(reduce_mod(ld[1], m).value == 20);
  // 1728^7 = -1 mod 7^2
  CHECK(mod_pow(1728, 7, 49) == 48);
}

TEST_CASE("weight families") {
  CHECK(weight_family(12) == std::pair<long, int>{1, 0});
  CHECK(weight_family(114) == std::pair<long, int>{9, 6});
  CHECK(weight_family(2) == std::pair<long, int>{0, 2});
  CHECK(weight_family(80) == std::pair<long, int>{6, 8});
  CHECK_THROWS_AS(weight_family(10), CongruenceError);
}

TEST_CASE("verification driver on easy weights") {
  for (long w : {6L, 12L, 18L}) {
    auto rep = verify_main_theorem_case(w, 120);
    INFO("w=" << w);
    REQUIRE(rep.pass);
    for (const auto& v : rep.verdicts) {
      REQUIRE(v.proof_pass);
      REQUIRE(v.series_pass);
    }
  }
}

TEST_CASE("negative control: weight 26 fails at the prime 5") {
  auto rep = verify_main_theorem_case(26, 120);
  CHECK_FALSE(rep.pass);
  bool found = false;
  for (const auto& v : rep.verdicts) {
    if (v.p == 5) {
      found = true;
      CHECK_FALSE(v.series_pass);
      CHECK(v.failed_index == 5);
    } else {
      CHECK(v.series_pass);
    }
  }
  CHECK(found);
}

TEST_CASE("report carries the clearing data") {
  auto rep = verify_main_theorem_case(114, 40);
  CHECK(rep.pass);
  CHECK(rep.m == 9);
  CHECK(rep.a == 6);
  CHECK(rep.verdicts.size() == 30);
  CHECK(mpz_divisible_ui_p(rep.cn.get_mpz_t(), 51));
}
