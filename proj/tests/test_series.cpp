#include <catch2/catch_amalgamated.hpp>

#include "eqmf/series.hpp"

#include <random>
#include <sstream>

using namespace eqmf;

namespace {
Series random_series(std::mt19937& rng, std::size_t n, bool unit_head) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  Series f = zero_series(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = make_rational(num(rng), den(rng));
  if (unit_head && f[0] == 0) f[0] = 1;
  return f;
}
}  // namespace

TEST_CASE("basic arithmetic") {
  Series f = make_series({1, 2, 3});
  Series g = make_series({4, 5, 6, 7});
  CHECK(add(f, g).coeffs() == std::vector<Rational>{5, 7, 9});
  CHECK(sub(f, g).coeffs() == std::vector<Rational>{-3, -3, -3});
  CHECK(neg(f).coeffs() == std::vector<Rational>{-1, -2, -3});
  CHECK(scale(f, Rational(2)).coeffs() == std::vector<Rational>{2, 4, 6});
  CHECK(mul(f, g).coeffs() == std::vector<Rational>{4, 13, 28});
  CHECK(mul(f, one_series(3)).coeffs() == f.coeffs());
}

TEST_CASE("shift grows truncation") {
  Series f = make_series({1, 2});
  Series s = shift(f, 2);
  CHECK(s.trunc() == 4);
  CHECK(s.coeffs() == std::vector<Rational>{0, 0, 1, 2});
}

TEST_CASE("invert") {
  Series f = make_series({1, -1, 0, 0, 0});
  CHECK(invert(f).coeffs() == std::vector<Rational>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(invert(make_series({0, 1})), NonUnitConstantTerm);
}

TEST_CASE("500 random inverses") {
  std::mt19937 rng(2024);
  for (int c = 0; c < 500; ++c) {
    Series f = random_series(rng, 12, true);
    Series p = mul(f, invert(f));
    REQUIRE(p[0] == 1);
    for (std::size_t i = 1; i < p.trunc(); ++i) REQUIRE(p[i] == 0);
  }
}

TEST_CASE("power") {
  Series f = make_series({1, 1, 0, 0});
  CHECK(power(f, 3).coeffs() == std::vector<Rational>{1, 3, 3, 1});
  CHECK(power(f, 0).coeffs() == std::vector<Rational>{1, 0, 0, 0});
}

TEST_CASE("compose") {
  // (1/(1-x)) o (x + x^2)
  Series f = invert(make_series({1, -1, 0, 0, 0, 0}));
  Series g = make_series({0, 1, 1, 0, 0, 0});
  Series h = compose(f, g);
  // 1/(1-x-x^2) = Fibonacci generating function
  CHECK(h.coeffs() == std::vector<Rational>{1, 1, 2, 3, 5, 8});
  CHECK_THROWS_AS(compose(f, one_series(6)), NonzeroConstantInner);
  // fractional outer coefficients exercise the clearing path
  Series fr = make_series({frac(1, 2), frac(1, 3), frac(1, 5)});
  Series direct = add(add(scale(one_series(3), frac(1, 2)),
                          scale(g.truncated(3), frac(1, 3))),
                      scale(mul(g, g).truncated(3), frac(1, 5)));
  CHECK(eq_overlap(compose(fr, g.truncated(3)), direct));
}

TEST_CASE("derive and theta") {
  Series f = make_series({5, 1, 2, 3});
  CHECK(derive(f).coeffs() == std::vector<Rational>{1, 4, 9});
  CHECK(theta_euler(f).coeffs() == std::vector<Rational>{0, 1, 4, 9});
}

TEST_CASE("sqrt, log, exp") {
  std::mt19937 rng(7);
  Series f = random_series(rng, 10, true);
  f[0] = 1;
  CHECK(eq_overlap(mul(sqrt_one(f), sqrt_one(f)), f));
  Series lg = log_series(f);
  CHECK(eq_overlap(exp_series(lg), f));
  CHECK_THROWS_AS(sqrt_one(make_series({2, 1})), ConstantTermNotOne);
  CHECK_THROWS_AS(exp_series(make_series({1, 1})), BadConstantTerm);
}

TEST_CASE("revert is a compositional inverse") {
  std::mt19937 rng(99);
  for (int c = 0; c < 20; ++c) {
    Series f = random_series(rng, 10, false);
    f[0] = 0;
    if (f[1] == 0) f[1] = 1;
    Series g = revert(f);
    Series id = compose(g, f);
    REQUIRE(id[0] == 0);
    REQUIRE(id[1] == 1);
    for (std::size_t i = 2; i < id.trunc(); ++i) REQUIRE(id[i] == 0);
  }
  CHECK_THROWS_AS(revert(make_series({1, 1, 1})), NotReversible);
  CHECK_THROWS_AS(revert(make_series({0, 0, 1})), NotReversible);
}

TEST_CASE("residue domain series") {
  ResidueDomain dom((PrimePowerModulus(7, 2)));
  ModSeries f(dom, {1, 7, 13});
  ModSeries g = invert(f);
  ModSeries p = mul(f, g);
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[2] == 0);
  ResidueDomain other((PrimePowerModulus(5, 1)));
  ModSeries h(other, {1, 2, 3});
  CHECK_THROWS_AS(add(f, h), DomainMismatch);
}

TEST_CASE("serialization round trip") {
  Series f = make_series({1, frac(-3, 7), 0, frac(22, 5)});
  std::string s = serialize(f);
  CHECK(s == "Q 4\n1\n-3/7\n0\n22/5\n");
  std::istringstream is(s);
  Series g = deserialize(is);
  CHECK(g.trunc() == 4);
  CHECK(eq_overlap(f, g));
  std::istringstream bad("R 2\n1\n2\n");
  CHECK_THROWS_AS(deserialize(bad), SeriesError);
  std::istringstream trunc("Q 3\n1\n2\n");
  CHECK_THROWS_AS(deserialize(trunc), SeriesError);
}
